#include "kmconv/eisenstein.hpp"

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kmconv/errors.hpp"

namespace kmconv {

namespace {

std::string coords_string(RootVector const& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) {
      s += ",";
    }
    s += v.coords[i].str();
  }
  return s + "]";
}

// Exponents beyond this magnitude could leave MPFR's widened exponent range
// (exp(1e18) has a binary exponent near 1.45e18, safely below the 4.6e18
// limit; one more decade would not be), so terms are refused rather than
// silently flushed to zero or infinity.
Int const& exponent_limit() {
  static Int const limit("1000000000000000000");  // 1e18
  return limit;
}

void check_exponent(Rat const& e) {
  if (abs(numerator(e)) > exponent_limit() * denominator(e)) {
    throw PrecisionExhausted(
        "term exponent magnitude exceeds the representable range; "
        "lower max_length");
  }
}

// Memoized xi_ratio over exact rational arguments.  Shared across worker
// threads; values computed at the scope's working precision.
class XiCache {
 public:
  explicit XiCache(PrecisionContext const& ctx) : ctx_(ctx) {}

  Real get(Rat const& s) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = map_.find(s); it != map_.end()) {
        return it->second;
      }
    }
    Real v = xi_ratio(real_from_rat(s), ctx_);
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.try_emplace(s, std::move(v)).first->second;
  }

 private:
  PrecisionContext ctx_;
  std::mutex mutex_;
  std::map<Rat, Real> map_;
};

// Runs f(i) for i in [0, n), optionally across threads.  Results must be
// written to preallocated slots; the reduction happens sequentially in the
// caller, so the outcome is independent of the thread count.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, PrecisionContext const& ctx,
                  F&& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      f(i);
    }
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      PrecisionScope scope(ctx);  // worker threads need their own MPFR setup
      for (std::size_t i = t; i < n; i += workers) {
        f(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

void require_interior(CartanMatrix const& cm, PointH const& x,
                      EvalOptions const& opts) {
  TitsReduction red = tits_reduce(cm, x, opts.tits_cap);
  switch (red.classification) {
    case ConeClass::interior:
      opts.tits_classification = "interior";
      break;
    case ConeClass::boundary:
      opts.tits_classification = "boundary";
      break;
    case ConeClass::outside_presumed:
      opts.tits_classification = "outside_presumed";
      break;
  }
  if (red.classification != ConeClass::interior && !opts.force) {
    throw NotInTitsCone("the evaluation point is not interior to the Tits cone (" +
                        opts.tits_classification + ")");
  }
}

// Pairings <lambda, alpha^v> over Phi_w, as exact rationals, with the
// OutOfRange gate applied.
RatVec phi_pairings(CartanMatrix const& cm, WeightVector const& lambda,
                    WeylElement const& w) {
  RatVec out;
  for (auto const& alpha : phi_w(cm, w)) {
    Rat s = pair_coroot(cm, lambda, alpha);
    if (s <= 1) {
      throw OutOfRange("factor <lambda, alpha^v> = " + rational_string(s) +
                       " <= 1 at root " + coords_string(alpha) +
                       "; the coefficient leaves the convergence domain");
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

SpectralParameter SpectralParameter::make(CartanMatrix const& cm, WeightVector lambda) {
  if (static_cast<int>(lambda.pairings.size()) != cm.rank()) {
    throw DomainError("lambda has the wrong number of coroot pairings");
  }
  SpectralParameter par;
  par.godement = true;
  for (auto const& c : lambda.pairings) {
    if (c <= 1) {
      par.godement = false;
      break;
    }
  }
  par.lambda = std::move(lambda);
  return par;
}

Real c_lambda_w(CartanMatrix const& cm, SpectralParameter const& par,
                WeylElement const& w, PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  Real prod = 1;
  for (auto const& s : phi_pairings(cm, par.lambda, w)) {
    prod *= xi_ratio(real_from_rat(s), ctx);
  }
  return prod;
}

ShellTable constant_term(CartanMatrix const& cm, SpectralParameter const& par,
                         PointH const& x, int max_length,
                         PrecisionContext const& ctx, EvalOptions const& opts) {
  PrecisionScope scope(ctx);
  if (max_length < 0) {
    throw DomainError("max_length must be nonnegative");
  }
  if (!par.godement && !opts.force) {
    for (int i = 1; i <= cm.rank(); ++i) {
      if (par.lambda.pairings[i - 1] <= 1) {
        throw NotGodement("<lambda, alpha_" + std::to_string(i) + "^v> = " +
                          rational_string(par.lambda.pairings[i - 1]) +
                          " <= 1: lambda is outside the Godement range");
      }
    }
  }
  require_interior(cm, x, opts);

  RatVec const m_lambda = weight_root_coords(cm, par.lambda);
  RatVec const m_rho = weight_root_coords(cm, rho(cm));
  XiCache cache(ctx);

  ShellTable table;
  table.max_length = max_length;
  Real partial = 0;
  Real prev_abs = 0;

  ShellEnumerator shells(cm);
  for (int l = 0; l <= max_length; ++l) {
    if (l > 0 && !shells.advance()) {
      table.group_exhausted = true;
      break;
    }
    auto const& shell = shells.shell();
    std::size_t const n = shell.size();

    // Exact per-element data first (cheap, single-threaded): the pairing
    // lists and the rational exponents <w lambda + rho, H>.
    std::vector<RatVec> pairings(n);
    std::vector<Rat> exponents(n);
    for (std::size_t i = 0; i < n; ++i) {
      pairings[i] = phi_pairings(cm, par.lambda, shell[i]);
      RatVec m = shell[i].apply(m_lambda);
      for (int k = 0; k < cm.rank(); ++k) {
        m[k] += m_rho[k];
      }
      exponents[i] = point_eval(m, x);
      check_exponent(exponents[i]);
    }

    // Numerical term evaluation, parallelizable: slot i depends only on i.
    std::vector<Real> terms(n);
    parallel_for(n, opts.threads, ctx, [&](std::size_t i) {
      Real t = exp(real_from_rat(exponents[i]));
      for (auto const& s : pairings[i]) {
        t *= cache.get(s);
      }
      terms[i] = std::move(t);
    });

    ShellRow row;
    row.length = l;
    row.count = static_cast<long>(n);
    Real abs_sum = 0;
    for (auto const& t : terms) {
      abs_sum += abs(t);
      partial += t;
    }
    row.abs_sum = abs_sum;
    row.partial_sum = partial;
    if (l > 0 && prev_abs > 0) {
      row.ratio = abs_sum / prev_abs;
    }
    prev_abs = abs_sum;
    table.rows.push_back(std::move(row));
  }
  return table;
}

ShellTable dominating_series(CartanMatrix const& cm, WeightVector const& lambda,
                             PointH const& x, Real const& M, int max_length,
                             PrecisionContext const& ctx, EvalOptions const& opts) {
  PrecisionScope scope(ctx);
  if (max_length < 0) {
    throw DomainError("max_length must be nonnegative");
  }
  if (!(M > 0)) {
    throw DomainError("the shell weight M must be positive");
  }
  if (static_cast<int>(lambda.pairings.size()) != cm.rank()) {
    throw DomainError("lambda has the wrong number of coroot pairings");
  }
  for (int i = 1; i <= cm.rank(); ++i) {
    if (lambda.pairings[i - 1] <= 0) {
      throw NotDominant("<lambda, alpha_" + std::to_string(i) + "^v> = " +
                        rational_string(lambda.pairings[i - 1]) +
                        " <= 0: lambda must be strictly dominant");
    }
  }
  require_interior(cm, x, opts);

  RatVec const m_lambda = weight_root_coords(cm, lambda);

  ShellTable table;
  table.max_length = max_length;
  Real partial = 0;
  Real prev_abs = 0;
  Real m_power = 1;

  ShellEnumerator shells(cm);
  for (int l = 0; l <= max_length; ++l) {
    if (l > 0 && !shells.advance()) {
      table.group_exhausted = true;
      break;
    }
    auto const& shell = shells.shell();
    std::size_t const n = shell.size();

    std::vector<Rat> exponents(n);
    for (std::size_t i = 0; i < n; ++i) {
      exponents[i] = point_eval(shell[i].apply(m_lambda), x);
      check_exponent(exponents[i]);
    }

    std::vector<Real> terms(n);
    parallel_for(n, opts.threads, ctx, [&](std::size_t i) {
      terms[i] = exp(real_from_rat(exponents[i]));
    });

    ShellRow row;
    row.length = l;
    row.count = static_cast<long>(n);
    Real abs_sum = 0;
    for (auto const& t : terms) {
      abs_sum += m_power * t;
    }
    partial += abs_sum;
    row.abs_sum = abs_sum;
    row.partial_sum = partial;
    if (l > 0 && prev_abs > 0) {
      row.ratio = abs_sum / prev_abs;
    }
    prev_abs = abs_sum;
    table.rows.push_back(std::move(row));
    m_power *= M;
  }
  return table;
}

namespace {

// Reflection on simple-root coordinates, rational version: the i-th
// coordinate drops by <v, alpha_i^v> computed from the same coordinates.
RatVec reflect_coords(CartanMatrix const& cm, RatVec const& m, int i) {
  Rat pairing = 0;
  for (int j = 1; j <= cm.rank(); ++j) {
    pairing += Rat(cm.a(i, j)) * m[j - 1];
  }
  RatVec out = m;
  out[i - 1] -= pairing;
  return out;
}

}  // namespace

OrbitCount looijenga_count(CartanMatrix const& cm, WeightVector const& mu,
                           PointH const& x, Rat const& N, int cap_length) {
  if (static_cast<int>(mu.pairings.size()) != cm.rank() ||
      static_cast<int>(x.values.size()) != cm.rank()) {
    throw DomainError("mu or x has the wrong coordinate count");
  }
  if (cap_length < 0) {
    throw DomainError("cap_length must be nonnegative");
  }
  for (int i = 1; i <= cm.rank(); ++i) {
    if (mu.pairings[i - 1] < 0 || denominator(mu.pairings[i - 1]) != 1) {
      throw NotDominant("mu must be dominant integral; pairing " + std::to_string(i) +
                        " is " + rational_string(mu.pairings[i - 1]));
    }
    if (x.values[i - 1] <= 0) {
      throw NotDominant("x must have all simple-root values positive; value " +
                        std::to_string(i) + " is " +
                        rational_string(x.values[i - 1]));
    }
  }

  RatVec const m0 = weight_root_coords(cm, mu);
  Rat const threshold = -N;

  OrbitCount out;
  std::set<RatVec> seen;
  seen.insert(m0);
  std::vector<RatVec> frontier;
  if (point_eval(m0, x) >= threshold) {
    out.count = 1;
    out.max_length_reached = 0;
    frontier.push_back(m0);
  }

  // Along any length-increasing geodesic from dominant mu the value
  // <w mu, H> is non-increasing (each step subtracts a nonnegative multiple
  // of a positive <alpha_i, H>), so weights below the threshold can be
  // dropped without losing any weight above it.
  int depth = 0;
  while (!frontier.empty() && depth < cap_length) {
    std::vector<RatVec> next;
    for (auto const& m : frontier) {
      for (int i = 1; i <= cm.rank(); ++i) {
        RatVec image = reflect_coords(cm, m, i);
        if (!seen.insert(image).second) {
          continue;
        }
        if (point_eval(image, x) >= threshold) {
          out.count += 1;
          next.push_back(std::move(image));
        }
      }
    }
    ++depth;
    if (!next.empty()) {
      out.max_length_reached = depth;
    }
    frontier = std::move(next);
  }
  out.exhausted = frontier.empty();
  return out;
}

Rank1Bound rank1_sum_bound(Real const& s, Real const& a_alpha, Real const& x0,
                           PrecisionContext const& ctx) {
  PrecisionScope scope(ctx);
  if (!(s > 0)) {
    throw DomainError("rank1_sum_bound needs s > 0");
  }
  if (!(a_alpha > 0)) {
    throw DomainError("rank1_sum_bound needs a^alpha > 0");
  }

  Real const nu = (Real(s) + 1) / 2;
  Real const a = a_alpha;

  // The series is invariant under integer shifts of x0; normalize to [0, 1).
  Real t = x0 - floor(x0);

  // Central block half-width: beyond it the binomial tail expansion has a
  // certified consecutive-term ratio of at most 1/16 (see below).
  Real m0_real = 2 * a * (nu + 2);
  if (m0_real < 8) {
    m0_real = 8;
  }
  if (m0_real > 1000000) {
    throw DomainError("s and a^alpha make the direct block impractically large");
  }
  long const m0 = static_cast<long>(mpfr_get_si(
      Real(ceil(m0_real)).backend().data(), MPFR_RNDN)) + 1;

  Real middle = 0;
  for (long m = -m0; m <= m0; ++m) {
    Real u = (t + m) / a;
    middle += pow(1 + u * u, -nu);
  }

  Real eps = pow(Real(10), -static_cast<long>(ctx.working_digits())) *
             (middle > 1 ? middle : Real(1));

  // Tail sum_{n>=0} (1 + ((A+n)/a)^2)^{-nu}
  //   = sum_j binom(-nu, j) a^{2 nu + 2j} zeta_H(2 nu + 2j, A),
  // absolutely convergent since A/a >= 2(nu+2) > 1.  Consecutive terms decay
  // by ((nu+j)/(j+1)) * (a/A)^2 <= max(1, nu) / (2(nu+2))^2 <= 1/16, so after
  // the last added term t_J the remainder is at most |t_J| / 15.
  auto tail = [&](Real const& A, Real& bound_out) -> Real {
    Real sum = 0;
    Real binom = 1;  // binom(-nu, j), signed
    Real a_power = pow(a, 2 * nu);
    Real const a2 = a * a;
    // With ratio <= 1/16 per term, a few dozen terms always reach the guard
    // threshold; treat anything else as a bug.
    for (int j = 0; j < 4000; ++j) {
      Real sigma = 2 * nu + 2 * j;
      Real term = binom * a_power * zeta_hurwitz(sigma, A, ctx);
      sum += term;
      Real last_abs = abs(term);
      if (last_abs / 15 <= eps) {
        bound_out = last_abs / 15;
        return sum;
      }
      binom *= (-nu - j) / (j + 1);
      a_power *= a2;
    }
    throw InternalError("rank-one tail expansion failed to converge");
  };

  Real bound_plus = 0;
  Real bound_minus = 0;
  Real tail_plus = tail(Real(m0 + 1) + t, bound_plus);
  Real tail_minus = tail(Real(m0 + 1) - t, bound_minus);

  Rank1Bound out;
  out.tail_bound = bound_plus + bound_minus;
  out.lhs = middle + tail_plus + tail_minus + out.tail_bound;
  out.rhs = 2 + a * c_infinity(s, ctx);
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace kmconv
