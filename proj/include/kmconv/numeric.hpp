#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

namespace kmconv {

// Exact integer and rational scalars.  All lattice-level computation is
// carried out in these types; floating point enters only in the analytic
// layer (see special.hpp).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Arbitrary-precision binary float.  The working precision is controlled
// per call through PrecisionContext / PrecisionScope (special.hpp); bare use
// of Real outside a scope picks up whatever thread default is active.
using Real = boost::multiprecision::mpfr_float;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

// Parses "p/q" or "n" with optional leading sign.  The denominator must be a
// positive integer literal.  Decimal points and exponents are rejected: the
// exact layer never accepts inexact input.  Throws std::invalid_argument.
Rat parse_rational(std::string const& text);

// Canonical "p/q" (or "n" for integers) form, matching parse_rational.
std::string rational_string(Rat const& q);

// Parses a decimal real ("0.25", "4", "1e-3") at the current working
// precision.  Throws std::invalid_argument on trailing junk.
Real real_from_decimal(std::string const& text);

Real real_from_rat(Rat const& q);

// Scientific form with `sig` significant digits, e.g. "2.479e-03" at sig 4.
// Deterministic for a fixed precision: MPFR rounds to nearest/even.
std::string format_real_sci(Real const& x, unsigned sig);

// General form: fixed point for moderate magnitudes, scientific otherwise.
std::string format_real_gen(Real const& x, unsigned sig);

}  // namespace kmconv
