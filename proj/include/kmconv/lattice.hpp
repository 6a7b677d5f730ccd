#pragma once

#include <compare>
#include <vector>

#include "kmconv/cartan.hpp"
#include "kmconv/numeric.hpp"

namespace kmconv {

// Element of the root lattice in simple-root coordinates:
// v = sum_i coords[i] * alpha_{i+1}.
struct RootVector {
  IntVec coords;

  friend bool operator==(RootVector const&, RootVector const&) = default;
  friend auto operator<=>(RootVector const&, RootVector const&) = default;
};

// Weight given by its coroot pairings: pairings[i] = <lambda, alpha_{i+1}^v>.
struct WeightVector {
  RatVec pairings;

  friend bool operator==(WeightVector const&, WeightVector const&) = default;
};

// Point of the standard apartment recorded through the simple-root values
// values[i] = <alpha_{i+1}, H>.
struct PointH {
  RatVec values;

  friend bool operator==(PointH const&, PointH const&) = default;
};

RootVector simple_root(CartanMatrix const& cm, int i);
RootVector zero_root(CartanMatrix const& cm);

// The Weyl vector: all coroot pairings equal to 1.
WeightVector rho(CartanMatrix const& cm);

// Sum of coordinates.  Positive roots have positive height.
Int height(RootVector const& v);

bool is_zero(RootVector const& v);

// <v, alpha_i^v> = sum_j a_ij m_j.  Defined for every lattice vector.
Int pair_simple_coroot(CartanMatrix const& cm, RootVector const& v, int i);

// (v | v) under the invariant bilinear form.  Real roots have positive norm,
// imaginary roots norm <= 0.
Rat norm(CartanMatrix const& cm, RootVector const& v);

// (lambda | v) where lambda is given by coroot pairings.
Rat bilinear_weight_root(CartanMatrix const& cm, WeightVector const& lambda,
                         RootVector const& v);

// <lambda, alpha^v> = 2 (lambda|alpha) / (alpha|alpha) for a real root alpha.
// Throws NotRealRoot when (alpha|alpha) <= 0.  Integral lambda pairs
// integrally with every real coroot.
Rat pair_coroot(CartanMatrix const& cm, WeightVector const& lambda,
                RootVector const& alpha);

// Simple reflections in each coordinate system.  Each is an involution, and
// the three are intertwined by the pairings (see tests).
RootVector reflect_root(CartanMatrix const& cm, RootVector const& v, int i);
WeightVector reflect_weight(CartanMatrix const& cm, WeightVector const& c, int i);
PointH reflect_point(CartanMatrix const& cm, PointH const& x, int i);

// Membership tests for the root system attached to cm.
//
// is_real_root: height-reduction by simple reflections.  A nonzero vector
// with coordinates of one sign is repeatedly reflected at an index with
// positive coroot pairing; it is a real root exactly when the walk ends at a
// simple root.  Mixed-sign or zero vectors are never roots.
//
// is_root: accepts imaginary roots as well.  When the reduction stalls with
// all pairings <= 0 the vector lies in the fundamental cone, where being a
// root is equivalent to having connected support in the Dynkin diagram.
// This characterization covers the symmetrizable case handled here.
bool is_real_root(CartanMatrix const& cm, RootVector const& v);
bool is_root(CartanMatrix const& cm, RootVector const& v);

enum class RootClass { none, real, imaginary };
RootClass classify_root(CartanMatrix const& cm, RootVector const& v);

// All positive roots of height <= max_height, ordered by height then
// lexicographically.  Height-layered closure: every positive root of height
// h+1 is a positive root of height h plus a simple root (the positive part of
// the algebra is generated by the simple root spaces), so layer h+1 is found
// by probing those sums with is_root.
std::vector<RootVector> positive_roots_up_to_height(CartanMatrix const& cm,
                                                    int max_height);

// Largest m >= 0 with alpha + m*beta a root, for real roots alpha != +-beta.
// Throws CapExceeded if m would exceed `cap` (strings through imaginary
// regions can be long; the cap keeps probes finite).
int root_string_max(CartanMatrix const& cm, RootVector const& alpha,
                    RootVector const& beta, int cap = 64);

// Exact simple-root coordinates of a weight: solves A m = c.
RatVec weight_root_coords(CartanMatrix const& cm, WeightVector const& lambda);

// <mu, H> = sum_i m_i x_i for mu given in simple-root coordinates.
Rat point_eval(RatVec const& root_coords, PointH const& x);
Rat point_eval(CartanMatrix const& cm, WeightVector const& lambda, PointH const& x);
Rat point_eval(RootVector const& v, PointH const& x);

}  // namespace kmconv
