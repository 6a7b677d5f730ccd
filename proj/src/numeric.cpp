#include "kmconv/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace kmconv {

namespace {

bool all_digits(std::string const& s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string const& text) {
  std::string s = text;
  // Strip surrounding whitespace only; interior whitespace is malformed.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.erase(s.begin());
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.pop_back();
  }
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.erase(s.begin());
  }
  std::string num = s;
  std::string den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational literal '" + text +
                                "' (expected p/q or n)");
  }
  Int n(num);
  Int d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
  }
  Rat q(n, d);
  if (negative) {
    q = -q;
  }
  return q;
}

std::string rational_string(Rat const& q) {
  return q.str();
}

Real real_from_decimal(std::string const& text) {
  Real x;
  auto* raw = x.backend().data();
  if (text.empty() || mpfr_set_str(raw, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed real literal '" + text + "'");
  }
  return x;
}

Real real_from_rat(Rat const& q) {
  Real x;
  mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
  return x;
}

namespace {

std::string mpfr_format(char const* fmt, int prec, Real const& x) {
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, prec, x.backend().data());
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace

std::string format_real_sci(Real const& x, unsigned sig) {
  if (sig == 0) {
    sig = 1;
  }
  return mpfr_format("%.*Re", static_cast<int>(sig) - 1, x);
}

std::string format_real_gen(Real const& x, unsigned sig) {
  if (sig == 0) {
    sig = 1;
  }
  return mpfr_format("%.*Rg", static_cast<int>(sig), x);
}

}  // namespace kmconv
