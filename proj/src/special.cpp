#include "kmconv/special.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "kmconv/errors.hpp"

namespace kmconv {

PrecisionContext PrecisionContext::make(unsigned digits) {
  if (digits < 10) {
    throw DomainError("precision_digits must be at least 10");
  }
  PrecisionContext ctx;
  ctx.digits = digits;
  ctx.guard_digits = 15;
  ctx.guaranteed_digits = digits;
  return ctx;
}

PrecisionScope::PrecisionScope(PrecisionContext const& ctx) {
  saved_digits10_ = Real::default_precision();
  Real::default_precision(ctx.working_digits());
  // Shell exponents legitimately reach magnitudes near 1e17; the stock
  // exponent range (about +-2^30) silently flushes exp() of such arguments
  // to zero.  Widening is idempotent and must happen in every thread.
  mpfr_set_emin(mpfr_get_emin_min());
  mpfr_set_emax(mpfr_get_emax_max());
}

PrecisionScope::~PrecisionScope() {
  Real::default_precision(saved_digits10_);
}

Real const_pi() {
  Real x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

Rat bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rat> cache{Rat(1)};  // B_0

  std::lock_guard<std::mutex> lock(mutex);
  while (cache.size() <= n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, so B_m is determined by B_0 .. B_{m-1}.
    unsigned const m = static_cast<unsigned>(cache.size());
    Rat sum = 0;
    Int binom = 1;  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      sum += Rat(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-sum / Rat(m + 1));
  }
  return cache[n];
}

namespace {

struct EMResult {
  Real value;
  Real remainder_bound;
};

// Euler-Maclaurin evaluation of sum_{n>=0} (A+n)^{-s} for real s > 1, A > 0,
// with a certified remainder: after truncating the correction series the
// error is at most the first omitted term in absolute value, because
// (A+x)^{-s} is completely monotone.  N and the truncation order adapt until
// the bound drops below `rel_eps` relative to the accumulated value.
EMResult hurwitz_em(Real const& s, Real const& A, Real const& rel_eps) {
  long n_direct = 16 + static_cast<long>(Real::default_precision());
  constexpr int kMaxCorrections = 400;
  for (int attempt = 0; attempt < 48; ++attempt) {
    Real base = A + n_direct;
    Real value = 0;
    for (long n = 0; n < n_direct; ++n) {
      value += pow(A + n, -s);
    }
    value += pow(base, 1 - s) / (s - 1);
    value += pow(base, -s) / 2;

    Real poch = s;                     // prod_{j=0}^{2k-2} (s+j), k = 1
    Real power = pow(base, -s - 1);    // base^{-s-2k+1}, k = 1
    Real const base2 = base * base;
    Int fact = 2;                      // (2k)!
    Real prev_abs = 0;
    bool first = true;
    for (int k = 1; k <= kMaxCorrections; ++k) {
      Real term = real_from_rat(bernoulli(2 * k) / Rat(fact)) * poch * power;
      Real term_abs = abs(term);
      if (term_abs <= rel_eps * value) {
        // `term` is the first omitted correction; |remainder| <= |term|.
        return EMResult{value, term_abs};
      }
      if (!first && term_abs >= prev_abs) {
        break;  // corrections no longer shrink: base too small, retry
      }
      value += term;
      prev_abs = term_abs;
      first = false;
      poch *= (s + (2 * k - 1)) * (s + 2 * k);
      power /= base2;
      fact *= (2 * k + 1) * (2 * k + 2);
    }
    n_direct *= 2;
  }
  throw InternalError("Hurwitz zeta evaluation failed to converge");
}

Real working_rel_eps() {
  // 10^-(working digits + 5): comfortably below the guard margin.
  Real eps = pow(Real(10), -static_cast<long>(Real::default_precision()) - 5);
  return eps;
}

// log Gamma(s/2) - log Gamma((s+1)/2), evaluated at a precision boosted past
// the magnitude of the individual log-gamma values so the cancellation costs
// nothing.  Used for large s where the direct Gamma ratio would overflow.
Real log_gamma_half_ratio(Real const& s) {
  double sd = mpfr_get_d(s.backend().data(), MPFR_RNDN);
  if (!(sd > 0) || sd > 1e300) {
    throw PrecisionExhausted("argument too large for the gamma ratio");
  }
  double magnitude = (sd / 2) * std::max(1.0, std::log(sd / 2));
  unsigned boost_digits = Real::default_precision() +
                          static_cast<unsigned>(std::max(0.0, std::log10(magnitude))) + 10;
  unsigned saved = Real::default_precision();
  Real::default_precision(boost_digits);
  Real result;
  {
    Real x(s);
    x.precision(boost_digits);
    Real a = lgamma(x / 2);
    Real b = lgamma((x + 1) / 2);
    result = a - b;
  }
  Real::default_precision(saved);
  result.precision(saved);
  return result;
}

}  // namespace

Real gamma_r(Real const& s, PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  if (!(s > 0)) {
    throw DomainError("gamma_r is evaluated for s > 0");
  }
  Real half = Real(s) / 2;
  return pow(const_pi(), -half) * tgamma(half);
}

Real zeta_hurwitz(Real const& s, Real const& shift, PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  if (!(s > 1)) {
    throw DomainError("zeta_hurwitz is evaluated for s > 1");
  }
  if (!(shift > 0)) {
    throw DomainError("zeta_hurwitz needs a positive shift");
  }
  return hurwitz_em(s, shift, working_rel_eps()).value;
}

Real zeta(Real const& s, PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  if (!(s > 1)) {
    throw DomainError("zeta is evaluated on the real axis right of 1");
  }
  return hurwitz_em(s, Real(1), working_rel_eps()).value;
}

Real c_infinity(Real const& s, PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  if (!(s > 0)) {
    throw DomainError("c_infinity is evaluated for s > 0");
  }
  Real pi = const_pi();
  if (s <= 10000) {
    return sqrt(pi) * tgamma(Real(s) / 2) / tgamma((Real(s) + 1) / 2);
  }
  return exp(log_gamma_half_ratio(s) + log(pi) / 2);
}

Real xi_ratio(Real const& s, PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  if (!(s > 1)) {
    throw DomainError("xi_ratio is evaluated on the real axis right of 1");
  }
  Real eps = working_rel_eps();
  Real num = hurwitz_em(s, Real(1), eps).value;
  Real den = hurwitz_em(Real(s) + 1, Real(1), eps).value;
  return c_infinity(s, ctx) * num / den;
}

}  // namespace kmconv
