#include "kmconv/weyl.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "kmconv/errors.hpp"

namespace kmconv {

namespace {

void check_index(CartanMatrix const& cm, int i) {
  if (i < 1 || i > cm.rank()) {
    throw DomainError("generator index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(cm.rank()));
  }
}

IntMat identity_matrix(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
  }
  return m;
}

// In-place right multiplication by the generator matrix M_j (row j of M_j is
// -a_{j*} with -1 on the diagonal, every other row is identity).  Column k of
// the product is col_k - a_{jk} col_j for k != j, and column j flips sign;
// column j is read before being written.
void mul_generator_right(CartanMatrix const& cm, IntMat& m, int j) {
  int const n = cm.rank();
  int const jj = j - 1;
  for (int row = 0; row < n; ++row) {
    Int const old = m[row][jj];
    if (old == 0) {
      continue;
    }
    for (int k = 0; k < n; ++k) {
      if (k != jj) {
        m[row][k] -= cm.a(j, k + 1) * old;
      }
    }
    m[row][jj] = -old;
  }
}

// Sign of column j: +1 if the column (a root in simple-root coordinates) is
// positive, -1 if negative.  Columns of Weyl action matrices are roots, so
// the first nonzero entry decides.
int column_sign(IntMat const& m, int jj) {
  for (auto const& row : m) {
    if (row[jj] > 0) {
      return 1;
    }
    if (row[jj] < 0) {
      return -1;
    }
  }
  throw InternalError("zero column in a Weyl action matrix");
}

}  // namespace

WeylElement WeylElement::identity(CartanMatrix const& cm) {
  WeylElement w;
  w.action_ = identity_matrix(cm.rank());
  return w;
}

WeylElement WeylElement::from_word(CartanMatrix const& cm, Word const& word) {
  WeylElement w = identity(cm);
  for (std::size_t k = 0; k < word.size(); ++k) {
    int j = word[k];
    check_index(cm, j);
    if (column_sign(w.action_, j - 1) < 0) {
      throw NotReduced("word is not reduced: the prefix of length " +
                       std::to_string(k) + " already ends the reduced part");
    }
    mul_generator_right(cm, w.action_, j);
    w.word_.push_back(j);
  }
  return w;
}

RootVector WeylElement::apply(RootVector const& v) const {
  int const n = rank();
  if (static_cast<int>(v.coords.size()) != n) {
    throw DomainError("coordinate count mismatch in Weyl action");
  }
  RootVector out;
  out.coords.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.coords[i] += action_[i][j] * v.coords[j];
    }
  }
  return out;
}

RatVec WeylElement::apply(RatVec const& root_coords) const {
  int const n = rank();
  if (static_cast<int>(root_coords.size()) != n) {
    throw DomainError("coordinate count mismatch in Weyl action");
  }
  RatVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[i] += Rat(action_[i][j]) * root_coords[j];
    }
  }
  return out;
}

RootVector WeylElement::image_of_simple(int j) const {
  RootVector v;
  v.coords.resize(rank());
  for (int i = 0; i < rank(); ++i) {
    v.coords[i] = action_[i][j - 1];
  }
  return v;
}

bool WeylElement::is_descent(int j) const {
  return column_sign(action_, j - 1) < 0;
}

WeylElement WeylElement::extend(CartanMatrix const& cm, int j) const {
  WeylElement out = *this;
  mul_generator_right(cm, out.action_, j);
  out.word_.push_back(j);
  return out;
}

bool is_reduced(CartanMatrix const& cm, Word const& word) {
  WeylElement w = WeylElement::identity(cm);
  for (int j : word) {
    check_index(cm, j);
    if (w.is_descent(j)) {
      return false;
    }
    w = w.extend(cm, j);
  }
  return true;
}

WeylElement multiply_generator(CartanMatrix const& cm, WeylElement const& w, int j) {
  check_index(cm, j);
  IntMat m = w.action();
  mul_generator_right(cm, m, j);
  // Greedy reduction: peel the smallest right descent until the identity
  // remains; the peeled letters, reversed, form a reduced word.
  Word reversed;
  for (;;) {
    int descent = 0;
    for (int col = 1; col <= cm.rank() && descent == 0; ++col) {
      if (column_sign(m, col - 1) < 0) {
        descent = col;
      }
    }
    if (descent == 0) {
      break;
    }
    mul_generator_right(cm, m, descent);
    reversed.push_back(descent);
  }
  return WeylElement::from_word(cm, Word(reversed.rbegin(), reversed.rend()));
}

std::vector<RootVector> phi_of_word(CartanMatrix const& cm, Word const& word) {
  if (!is_reduced(cm, word)) {
    throw NotReduced("inversion sets are attached to reduced words");
  }
  // Appending letter j on the right maps the previous set through w_j and
  // adjoins alpha_j, so the letters are consumed left to right and the newest
  // root sits at the front of the list.
  std::vector<RootVector> phi;
  for (int j : word) {
    for (auto& alpha : phi) {
      alpha = reflect_root(cm, alpha, j);
    }
    phi.insert(phi.begin(), simple_root(cm, j));
  }
  return phi;
}

std::vector<RootVector> phi_w(CartanMatrix const& cm, WeylElement const& w) {
  return phi_of_word(cm, w.word());
}

WeylElement inverse(CartanMatrix const& cm, WeylElement const& w) {
  Word rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(cm, rev);
}

WeightVector act_on_weight(CartanMatrix const& cm, WeylElement const& w,
                           WeightVector const& lambda) {
  WeightVector out = lambda;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    out = reflect_weight(cm, out, *it);
  }
  return out;
}

PointH act_on_point(CartanMatrix const& cm, WeylElement const& w, PointH const& x) {
  PointH out = x;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    out = reflect_point(cm, out, *it);
  }
  return out;
}

RootVector act_on_root(CartanMatrix const& cm, WeylElement const& w,
                       RootVector const& v) {
  (void)cm;
  return w.apply(v);
}

RootVector rho_minus_w_rho(CartanMatrix const& cm, WeylElement const& w) {
  RootVector sum = zero_root(cm);
  for (auto const& alpha : phi_w(cm, inverse(cm, w))) {
    for (int i = 0; i < cm.rank(); ++i) {
      sum.coords[i] += alpha.coords[i];
    }
  }
  return sum;
}

ShellEnumerator::ShellEnumerator(CartanMatrix const& cm) : cm_(&cm) {
  shell_.push_back(WeylElement::identity(cm));
}

bool ShellEnumerator::advance() {
  // Extending v by j is length-increasing iff v(alpha_j) > 0, so every
  // product below lies in the next shell; shells of different lengths never
  // collide and the only deduplication needed is within the new shell.
  // Scanning the current shell in canonical order and letters in ascending
  // order reaches each new element first through its shortlex-minimal
  // reduced word: the parent of that word is itself canonical and shorter
  // words were exhausted earlier.
  std::map<IntMat, WeylElement> next;
  for (auto const& v : shell_) {
    for (int j = 1; j <= cm_->rank(); ++j) {
      if (v.is_descent(j)) {
        continue;
      }
      WeylElement w = v.extend(*cm_, j);
      next.try_emplace(w.action(), std::move(w));
    }
  }
  shell_.clear();
  shell_.reserve(next.size());
  for (auto& [mat, w] : next) {
    (void)mat;
    shell_.push_back(std::move(w));
  }
  std::sort(shell_.begin(), shell_.end(),
            [](WeylElement const& a, WeylElement const& b) {
              return a.word() < b.word();
            });
  ++length_;
  return !shell_.empty();
}

TitsReduction tits_reduce(CartanMatrix const& cm, PointH const& x, long cap) {
  if (static_cast<int>(x.values.size()) != cm.rank()) {
    throw DomainError("point has wrong coordinate count");
  }
  PointH cur = x;
  // Reflections in order of application; as a word (rightmost acts first)
  // the result is the reverse of this list.
  Word applied;
  for (long step = 0; step <= cap; ++step) {
    int neg = 0;
    for (int i = 1; i <= cm.rank(); ++i) {
      if (cur.values[i - 1] < 0) {
        neg = i;
        break;
      }
    }
    if (neg == 0) {
      std::vector<int> zero_set;
      for (int i = 1; i <= cm.rank(); ++i) {
        if (cur.values[i - 1] == 0) {
          zero_set.push_back(i);
        }
      }
      TitsReduction out;
      out.dominant = std::move(cur);
      out.word = Word(applied.rbegin(), applied.rend());
      // Interior points of the Tits cone are exactly those whose stabilizer
      // is finite: the zero set must span a finite-type subdiagram.
      out.classification = cm.is_finite_type(zero_set) ? ConeClass::interior
                                                       : ConeClass::boundary;
      return out;
    }
    cur = reflect_point(cm, cur, neg);
    applied.push_back(neg);
  }
  TitsReduction out;
  out.dominant = std::move(cur);
  out.word = Word(applied.rbegin(), applied.rend());
  out.classification = ConeClass::outside_presumed;
  return out;
}

}  // namespace kmconv
