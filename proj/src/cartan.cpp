#include "kmconv/cartan.hpp"

#include <string>
#include <vector>

#include "kmconv/errors.hpp"

namespace kmconv {

namespace {

std::string ij(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Exact determinant by fraction-free-ish Gaussian elimination over Rat.
Rat rat_det(RatMat m) {
  int const n = static_cast<int>(m.size());
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      return 0;
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) {
        continue;
      }
      Rat f = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) {
        m[row][k] -= f * m[col][k];
      }
    }
  }
  return det;
}

// Gauss-Jordan inverse over Rat; the caller has already ruled out
// singularity.
RatMat rat_inverse(RatMat m) {
  int const n = static_cast<int>(m.size());
  RatMat inv(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i) {
    inv[i][i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      throw InternalError("inverse of a singular matrix requested");
    }
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = m[col][col];
    for (int k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) {
        continue;
      }
      Rat f = m[row][col];
      for (int k = 0; k < n; ++k) {
        m[row][k] -= f * m[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

CartanMatrix CartanMatrix::validate(std::vector<std::vector<long long>> const& entries) {
  IntMat m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m[i].assign(entries[i].begin(), entries[i].end());
  }
  return validate(std::move(m));
}

CartanMatrix CartanMatrix::validate(IntMat entries) {
  int const n = static_cast<int>(entries.size());
  if (n == 0) {
    throw InvalidGCM("matrix is empty");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n) {
      throw InvalidGCM("matrix is not square: row " + std::to_string(i + 1) +
                       " has " + std::to_string(entries[i].size()) + " entries");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (entries[i][i] != 2) {
      throw InvalidGCM("diagonal entry " + ij(i, i) + " must be 2");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      if (entries[i][j] > 0) {
        throw InvalidGCM("off-diagonal entry " + ij(i, j) + " must be <= 0");
      }
      if ((entries[i][j] == 0) != (entries[j][i] == 0)) {
        throw InvalidGCM("zero pattern is not symmetric at " + ij(i, j));
      }
    }
  }

  // Symmetrizer: propagate d_j = d_i * a_ij / a_ji along a spanning tree of
  // each Dynkin component, then check every non-tree edge.  Failure of the
  // cycle condition is exactly non-symmetrizability.
  RatVec d(n, 0);
  std::vector<int> component(n, -1);
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) {
      continue;
    }
    component[start] = start;
    d[start] = 1;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || entries[i][j] == 0) {
          continue;
        }
        Rat propagated = d[i] * Rat(entries[i][j]) / Rat(entries[j][i]);
        if (component[j] < 0) {
          component[j] = start;
          d[j] = propagated;
          queue.push_back(j);
        } else if (d[j] != propagated) {
          throw NotSymmetrizable("no symmetrizer exists: cycle through nodes " +
                                 std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " is inconsistent");
        }
      }
    }
    // Scale this component to minimal positive integers (gcd 1).
    Int lcm_den = 1;
    for (int i = 0; i < n; ++i) {
      if (component[i] == start) {
        lcm_den = lcm(lcm_den, denominator(d[i]));
      }
    }
    Int gcd_num = 0;
    for (int i = 0; i < n; ++i) {
      if (component[i] == start) {
        d[i] *= lcm_den;
        gcd_num = gcd(gcd_num, numerator(d[i]));
      }
    }
    for (int i = 0; i < n; ++i) {
      if (component[i] == start) {
        d[i] /= gcd_num;
      }
    }
  }

  RatMat rm(n, RatVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rm[i][j] = Rat(entries[i][j]);
    }
  }
  Rat det = rat_det(rm);
  if (det == 0) {
    throw SingularMatrix(
        "determinant is zero; this machinery assumes a nonsingular matrix "
        "(degenerate types such as affine ones are out of scope)");
  }

  CartanMatrix cm;
  cm.rank_ = n;
  cm.a_ = std::move(entries);
  cm.d_.resize(n);
  for (int i = 0; i < n; ++i) {
    cm.d_[i] = numerator(d[i]);
  }
  cm.det_ = numerator(det);
  cm.inv_ = rat_inverse(rm);
  return cm;
}

RatMat CartanMatrix::bilinear_gram() const {
  RatMat g(rank_, RatVec(rank_));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      g[i][j] = Rat(d_[i] * a_[i][j]);
    }
  }
  return g;
}

bool CartanMatrix::is_finite_type(std::vector<int> const& subset) const {
  for (int i : subset) {
    if (i < 1 || i > rank_) {
      throw DomainError("subset index " + std::to_string(i) + " out of range");
    }
  }
  int const k = static_cast<int>(subset.size());
  if (k == 0) {
    return true;
  }
  // Positive definiteness of the restricted symmetrized form, via symmetric
  // elimination: all pivots positive iff all leading principal minors are.
  RatMat g(k, RatVec(k));
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      g[p][q] = Rat(d_[subset[p] - 1] * a_[subset[p] - 1][subset[q] - 1]);
    }
  }
  for (int col = 0; col < k; ++col) {
    if (g[col][col] <= 0) {
      return false;
    }
    for (int row = col + 1; row < k; ++row) {
      if (g[row][col] == 0) {
        continue;
      }
      Rat f = g[row][col] / g[col][col];
      for (int q = col; q < k; ++q) {
        g[row][q] -= f * g[col][q];
      }
    }
  }
  return true;
}

}  // namespace kmconv
