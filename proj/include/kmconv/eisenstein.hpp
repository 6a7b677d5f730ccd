#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmconv/cartan.hpp"
#include "kmconv/lattice.hpp"
#include "kmconv/special.hpp"
#include "kmconv/weyl.hpp"

namespace kmconv {

// Spectral parameter lambda with its Godement status: strict inequality
// <lambda, alpha_i^v> > 1 for every i, decided exactly.
struct SpectralParameter {
  WeightVector lambda;
  bool godement = false;

  static SpectralParameter make(CartanMatrix const& cm, WeightVector lambda);
};

struct ShellRow {
  int length = 0;
  long count = 0;
  Real abs_sum;                // T_l: sum of |term| over the shell
  Real partial_sum;            // S_l: running sum of signed terms
  std::optional<Real> ratio;   // T_l / T_{l-1}, absent at l = 0 or 0/0
};

struct ShellTable {
  std::vector<ShellRow> rows;
  int max_length = 0;
  bool group_exhausted = false;  // enumeration ended before max_length
};

struct EvalOptions {
  bool force = false;        // skip the Godement / Tits-interior gates
  unsigned threads = 1;      // worker cap for per-element evaluation
  long tits_cap = 10000;
  // Filled by constant_term for reporting:
  mutable std::string tits_classification;
};

// Coefficient c(lambda, w) = prod_{alpha in Phi_w} xi_ratio(<lambda, alpha^v>).
// Empty product for the identity.  Throws OutOfRange (naming the offending
// root) if some factor has <lambda, alpha^v> <= 1.
Real c_lambda_w(CartanMatrix const& cm, SpectralParameter const& par,
                WeylElement const& w, PrecisionContext const& ctx);

// Shell table of the constant-term series: the shell-l term of
// sum_w exp(<w lambda + rho, H>) c(lambda, w).  Exponents are exact
// rationals; each term is evaluated at working precision.  Requires lambda
// Godement and x interior to the Tits cone unless opts.force is set.
// Throws NotGodement, NotInTitsCone, OutOfRange, PrecisionExhausted.
ShellTable constant_term(CartanMatrix const& cm, SpectralParameter const& par,
                         PointH const& x, int max_length,
                         PrecisionContext const& ctx, EvalOptions const& opts = {});

// Shell table of the dominating series sum_w M^{l(w)} exp(<w lambda, H>).
// Only strict dominance of lambda (all pairings > 0) is required.
// Throws NotDominant, NotInTitsCone, PrecisionExhausted.
ShellTable dominating_series(CartanMatrix const& cm, WeightVector const& lambda,
                             PointH const& x, Real const& M, int max_length,
                             PrecisionContext const& ctx, EvalOptions const& opts = {});

struct OrbitCount {
  long count = 0;
  int max_length_reached = 0;  // deepest level contributing a counted weight
  bool exhausted = false;      // orbit search ended before the cap
};

// Counts the weights in the Weyl orbit of mu with <nu, H> >= -N, by breadth
// first search on weights with exact dedup.  Branches whose value drops
// below -N are pruned; along any geodesic from mu the value is non-increasing
// (mu dominant, x positive), so pruning loses nothing.  Requires mu dominant
// integral and all x_i > 0; throws NotDominant.
OrbitCount looijenga_count(CartanMatrix const& cm, WeightVector const& mu,
                           PointH const& x, Rat const& N, int cap_length);

struct Rank1Bound {
  Real lhs;         // series value plus its certified truncation bound
  Real rhs;         // 2 + a^alpha * c_infinity(s)
  Real tail_bound;  // the truncation bound that was folded into lhs
  bool holds = false;
};

// Certified comparison of the rank-one series
//   sum_{m in Z} (1 + a^{-2 alpha} (x0 + m)^2)^{-(s+1)/2}
// against 2 + a^alpha c_infinity(s), for s > 0 and a_alpha = a^alpha > 0.
// A central block is summed directly; the two tails are expanded binomially
// into Hurwitz zeta values with a geometric, fully certified remainder that
// is added to the left-hand side before comparing.
Rank1Bound rank1_sum_bound(Real const& s, Real const& a_alpha, Real const& x0,
                           PrecisionContext const& ctx);

}  // namespace kmconv
