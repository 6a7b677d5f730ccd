#pragma once

#include <string>

#include "kmconv/numeric.hpp"

namespace kmconv {

// Controls the working precision of the analytic layer.
//
// Error model: MPFR primitives (exp, pow, gamma, ...) are correctly rounded
// at the working precision, which exceeds the requested digits by a fixed
// guard margin.  Series evaluations (zeta, Hurwitz zeta) carry explicit
// remainder bounds driven below the guard threshold.  The composed results
// are therefore accurate to `guaranteed_digits` barring catastrophic
// cancellation, which the implemented formulas avoid by construction (all
// sums of same-sign terms; the one cancelling difference, of log-gammas, is
// evaluated at boosted precision).
struct PrecisionContext {
  unsigned digits = 30;            // requested decimal digits, >= 10
  unsigned guard_digits = 15;      // fixed guard margin
  unsigned guaranteed_digits = 30; // digits backed by the error model

  unsigned working_digits() const { return digits + guard_digits; }

  static PrecisionContext make(unsigned digits = 30);
};

// RAII guard: installs the context's working precision as the default MPFR
// precision and widens the exponent range to the library maximum (shell sums
// legitimately reach exponents near 1e17).  Restores the previous precision
// on destruction.  Every public entry point of the analytic layer opens one;
// worker threads must open their own, because the MPFR exponent range is
// per-thread.  The default precision itself is process-wide (an atomic), so
// concurrent scopes must agree on the precision; the evaluation layer always
// hands every worker the same context.
class PrecisionScope {
 public:
  explicit PrecisionScope(PrecisionContext const& ctx);
  ~PrecisionScope();

  PrecisionScope(PrecisionScope const&) = delete;
  PrecisionScope& operator=(PrecisionScope const&) = delete;

 private:
  unsigned saved_digits10_;
};

Real const_pi();

// Completed gamma factor pi^{-s/2} Gamma(s/2) for real s > 0.
// Throws DomainError outside the domain.
Real gamma_r(Real const& s, PrecisionContext const& ctx);

// Riemann zeta for real s > 1, by Euler-Maclaurin with a certified
// remainder bound below the guard threshold.
Real zeta(Real const& s, PrecisionContext const& ctx);

// Hurwitz zeta sum_{n>=0} (shift+n)^{-s} for real s > 1, shift > 0.
Real zeta_hurwitz(Real const& s, Real const& shift, PrecisionContext const& ctx);

// Archimedean ratio gamma_r(s)/gamma_r(s+1) = sqrt(pi) Gamma(s/2)/Gamma((s+1)/2),
// for s > 0.  Strictly decreasing, ~ sqrt(2 pi / s) for large s.
Real c_infinity(Real const& s, PrecisionContext const& ctx);

// xi(s)/xi(s+1) = c_infinity(s) * zeta(s)/zeta(s+1), for s > 1.
Real xi_ratio(Real const& s, PrecisionContext const& ctx);

// Exact Bernoulli number B_n (B_1 = -1/2).
Rat bernoulli(unsigned n);

}  // namespace kmconv
