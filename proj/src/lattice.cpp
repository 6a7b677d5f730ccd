#include "kmconv/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "kmconv/errors.hpp"

namespace kmconv {

namespace {

void check_index(CartanMatrix const& cm, int i) {
  if (i < 1 || i > cm.rank()) {
    throw DomainError("generator index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(cm.rank()));
  }
}

void check_size(CartanMatrix const& cm, std::size_t got, char const* what) {
  if (got != static_cast<std::size_t>(cm.rank())) {
    throw DomainError(std::string(what) + " has " + std::to_string(got) +
                      " coordinates, expected " + std::to_string(cm.rank()));
  }
}

enum class Sign { zero, positive, negative, mixed };

Sign sign_pattern(RootVector const& v) {
  bool pos = false;
  bool neg = false;
  for (auto const& c : v.coords) {
    if (c > 0) {
      pos = true;
    } else if (c < 0) {
      neg = true;
    }
  }
  if (pos && neg) {
    return Sign::mixed;
  }
  if (pos) {
    return Sign::positive;
  }
  if (neg) {
    return Sign::negative;
  }
  return Sign::zero;
}

bool is_simple(RootVector const& v) {
  int ones = 0;
  for (auto const& c : v.coords) {
    if (c == 1) {
      ++ones;
    } else if (c != 0) {
      return false;
    }
  }
  return ones == 1;
}

bool connected_support(CartanMatrix const& cm, RootVector const& v) {
  int const r = cm.rank();
  int start = -1;
  for (int i = 0; i < r; ++i) {
    if (v.coords[i] != 0) {
      start = i;
      break;
    }
  }
  if (start < 0) {
    return false;
  }
  std::vector<bool> seen(r, false);
  std::vector<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < r; ++j) {
      if (!seen[j] && v.coords[j] != 0 && cm.a(i + 1, j + 1) != 0) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    if (v.coords[i] != 0 && !seen[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

// Height reduction: repeatedly reflect at an index pairing positively, which
// strictly lowers the height of a positive vector.  The walk ends at a simple
// root (real), at a mixed-sign vector (not a root), or stalls with all
// pairings <= 0.  A stalled positive vector is an imaginary root exactly when
// its support is connected (fundamental-cone characterization; valid for the
// symmetrizable matrices accepted here).
RootClass classify_root(CartanMatrix const& cm, RootVector const& v0) {
  check_size(cm, v0.coords.size(), "root vector");
  RootVector v = v0;
  int const r = cm.rank();
  switch (sign_pattern(v)) {
    case Sign::zero:
    case Sign::mixed:
      return RootClass::none;
    case Sign::negative:
      for (auto& c : v.coords) {
        c = -c;
      }
      break;
    case Sign::positive:
      break;
  }
  // The height strictly decreases each step, so height(v) iterations suffice;
  // the cap below only guards against implementation bugs.
  Int cap = 10 * height(v) + 10;
  for (Int step = 0; step <= cap; ++step) {
    if (is_simple(v)) {
      return RootClass::real;
    }
    int pivot = 0;
    for (int i = 1; i <= r; ++i) {
      if (pair_simple_coroot(cm, v, i) > 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == 0) {
      return connected_support(cm, v) ? RootClass::imaginary : RootClass::none;
    }
    v = reflect_root(cm, v, pivot);
    if (sign_pattern(v) != Sign::positive) {
      return RootClass::none;
    }
  }
  throw InternalError("root classification failed to terminate");
}

RootVector simple_root(CartanMatrix const& cm, int i) {
  check_index(cm, i);
  RootVector v;
  v.coords.assign(cm.rank(), 0);
  v.coords[i - 1] = 1;
  return v;
}

RootVector zero_root(CartanMatrix const& cm) {
  RootVector v;
  v.coords.assign(cm.rank(), 0);
  return v;
}

WeightVector rho(CartanMatrix const& cm) {
  WeightVector c;
  c.pairings.assign(cm.rank(), 1);
  return c;
}

Int height(RootVector const& v) {
  Int h = 0;
  for (auto const& c : v.coords) {
    h += c;
  }
  return h;
}

bool is_zero(RootVector const& v) {
  for (auto const& c : v.coords) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

Int pair_simple_coroot(CartanMatrix const& cm, RootVector const& v, int i) {
  check_index(cm, i);
  check_size(cm, v.coords.size(), "root vector");
  Int s = 0;
  for (int j = 1; j <= cm.rank(); ++j) {
    s += cm.a(i, j) * v.coords[j - 1];
  }
  return s;
}

Rat norm(CartanMatrix const& cm, RootVector const& v) {
  check_size(cm, v.coords.size(), "root vector");
  // (v|v) = sum_i m_i d_i <v, alpha_i^v>.
  Int s = 0;
  for (int i = 1; i <= cm.rank(); ++i) {
    s += v.coords[i - 1] * cm.symmetrizer(i) * pair_simple_coroot(cm, v, i);
  }
  return Rat(s);
}

Rat bilinear_weight_root(CartanMatrix const& cm, WeightVector const& lambda,
                         RootVector const& v) {
  check_size(cm, lambda.pairings.size(), "weight");
  check_size(cm, v.coords.size(), "root vector");
  // (lambda|v) = sum_i m_i d_i <lambda, alpha_i^v>, since (lambda|alpha_i)
  // = d_i c_i.
  Rat s = 0;
  for (int i = 1; i <= cm.rank(); ++i) {
    s += Rat(v.coords[i - 1] * cm.symmetrizer(i)) * lambda.pairings[i - 1];
  }
  return s;
}

Rat pair_coroot(CartanMatrix const& cm, WeightVector const& lambda,
                RootVector const& alpha) {
  Rat nn = norm(cm, alpha);
  if (nn <= 0) {
    throw NotRealRoot("coroot pairing needs a real root; (alpha|alpha) = " +
                      rational_string(nn) + " is not positive");
  }
  return 2 * bilinear_weight_root(cm, lambda, alpha) / nn;
}

RootVector reflect_root(CartanMatrix const& cm, RootVector const& v, int i) {
  RootVector out = v;
  out.coords[i - 1] -= pair_simple_coroot(cm, v, i);
  return out;
}

WeightVector reflect_weight(CartanMatrix const& cm, WeightVector const& c, int i) {
  check_index(cm, i);
  check_size(cm, c.pairings.size(), "weight");
  WeightVector out = c;
  for (int k = 1; k <= cm.rank(); ++k) {
    out.pairings[k - 1] -= c.pairings[i - 1] * Rat(cm.a(k, i));
  }
  return out;
}

PointH reflect_point(CartanMatrix const& cm, PointH const& x, int i) {
  check_index(cm, i);
  check_size(cm, x.values.size(), "point");
  PointH out = x;
  for (int j = 1; j <= cm.rank(); ++j) {
    out.values[j - 1] -= x.values[i - 1] * Rat(cm.a(i, j));
  }
  return out;
}

bool is_real_root(CartanMatrix const& cm, RootVector const& v) {
  check_size(cm, v.coords.size(), "root vector");
  return classify_root(cm, v) == RootClass::real;
}

bool is_root(CartanMatrix const& cm, RootVector const& v) {
  check_size(cm, v.coords.size(), "root vector");
  return classify_root(cm, v) != RootClass::none;
}

int root_string_max(CartanMatrix const& cm, RootVector const& alpha,
                    RootVector const& beta, int cap) {
  if (!is_real_root(cm, alpha) || !is_real_root(cm, beta)) {
    throw NotRealRoot("root strings are probed between real roots");
  }
  RootVector minus = beta;
  for (auto& c : minus.coords) {
    c = -c;
  }
  if (alpha == beta || alpha == minus) {
    throw DomainError("root string endpoints must satisfy alpha != +-beta");
  }
  RootVector v = alpha;
  for (int m = 1; m <= cap; ++m) {
    for (int j = 0; j < cm.rank(); ++j) {
      v.coords[j] += beta.coords[j];
    }
    if (!is_root(cm, v)) {
      return m - 1;
    }
  }
  throw CapExceeded("root string through alpha exceeded cap " + std::to_string(cap));
}

RatVec weight_root_coords(CartanMatrix const& cm, WeightVector const& lambda) {
  check_size(cm, lambda.pairings.size(), "weight");
  RatMat const& inv = cm.inverse();
  RatVec m(cm.rank(), 0);
  for (int i = 0; i < cm.rank(); ++i) {
    for (int j = 0; j < cm.rank(); ++j) {
      m[i] += inv[i][j] * lambda.pairings[j];
    }
  }
  return m;
}

Rat point_eval(RatVec const& root_coords, PointH const& x) {
  if (root_coords.size() != x.values.size()) {
    throw DomainError("coordinate count mismatch in point evaluation");
  }
  Rat s = 0;
  for (std::size_t i = 0; i < root_coords.size(); ++i) {
    s += root_coords[i] * x.values[i];
  }
  return s;
}

Rat point_eval(CartanMatrix const& cm, WeightVector const& lambda, PointH const& x) {
  return point_eval(weight_root_coords(cm, lambda), x);
}

Rat point_eval(RootVector const& v, PointH const& x) {
  if (v.coords.size() != x.values.size()) {
    throw DomainError("coordinate count mismatch in point evaluation");
  }
  Rat s = 0;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    s += Rat(v.coords[i]) * x.values[i];
  }
  return s;
}

std::vector<RootVector> positive_roots_up_to_height(CartanMatrix const& cm,
                                                    int max_height) {
  if (max_height < 0) {
    throw DomainError("max_height must be nonnegative");
  }
  std::vector<RootVector> out;
  std::vector<RootVector> layer;
  for (int i = 1; i <= cm.rank(); ++i) {
    layer.push_back(simple_root(cm, i));
  }
  std::sort(layer.begin(), layer.end());
  for (int h = 1; h <= max_height && !layer.empty(); ++h) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::set<RootVector> next;
    for (auto const& r : layer) {
      for (int i = 1; i <= cm.rank(); ++i) {
        RootVector cand = r;
        cand.coords[i - 1] += 1;
        if (next.count(cand) == 0 && is_root(cm, cand)) {
          next.insert(cand);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

}  // namespace kmconv
