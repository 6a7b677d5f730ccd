#pragma once

#include <vector>

#include "kmconv/numeric.hpp"

namespace kmconv {

// A validated, symmetrizable, nonsingular generalized Cartan matrix together
// with the derived data every other module needs: the minimal integer
// symmetrizer, the induced bilinear form, and the exact inverse.
//
// Generator/row indices are 1-based throughout the public interface.
class CartanMatrix {
 public:
  // Checks the generalized Cartan matrix axioms (2 on the diagonal,
  // nonpositive off-diagonal entries, symmetric zero pattern), computes the
  // minimal positive integer symmetrizer per indecomposable block, and
  // rejects singular matrices.
  //
  // Throws InvalidGCM, NotSymmetrizable, SingularMatrix (in that order of
  // detection).  Singular matrices are rejected outright: the machinery
  // downstream assumes an invertible form, which excludes affine types.
  static CartanMatrix validate(IntMat entries);
  static CartanMatrix validate(std::vector<std::vector<long long>> const& entries);

  int rank() const { return rank_; }

  // Entry a_ij, 1-based.
  Int const& a(int i, int j) const { return a_[i - 1][j - 1]; }

  // Symmetrizer entry d_i > 0, 1-based.  diag(d) * A is symmetric, and the
  // d_i are the minimal positive integers with that property on each
  // indecomposable block.
  Int const& symmetrizer(int i) const { return d_[i - 1]; }

  // Exact determinant (nonzero by construction).
  Int const& det() const { return det_; }

  // Gram matrix of the invariant bilinear form on simple roots:
  // (alpha_i | alpha_j) = d_i * a_ij.  Symmetric with positive diagonal.
  RatMat bilinear_gram() const;

  // Exact inverse of the Cartan matrix, cached at validation time.
  RatMat const& inverse() const { return inv_; }

  // Whether nodes i and j are adjacent in the Dynkin diagram (a_ij != 0).
  bool dynkin_edge(int i, int j) const { return i != j && a(i, j) != 0; }

  // Whether the principal submatrix on `subset` (1-based, distinct indices)
  // is of finite type, decided exactly: the restricted symmetrized form must
  // be positive definite, i.e. all leading principal minors positive.
  // The empty subset is finite type.
  bool is_finite_type(std::vector<int> const& subset) const;

  IntMat const& entries() const { return a_; }

 private:
  CartanMatrix() = default;

  int rank_ = 0;
  IntMat a_;
  IntVec d_;
  Int det_;
  RatMat inv_;
};

}  // namespace kmconv
