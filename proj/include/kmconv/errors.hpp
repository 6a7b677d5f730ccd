#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kmconv {

// Base class for all domain errors raised by the library.  `name()` is the
// stable machine-readable identifier that the CLI prints on stderr; `what()`
// carries the human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(std::string name, std::string const& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  std::string const& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class InvalidGCM : public Error {
 public:
  explicit InvalidGCM(std::string const& what) : Error("InvalidGCM", what) {}
};

class NotSymmetrizable : public Error {
 public:
  explicit NotSymmetrizable(std::string const& what)
      : Error("NotSymmetrizable", what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(std::string const& what)
      : Error("SingularMatrix", what) {}
};

class NotRealRoot : public Error {
 public:
  explicit NotRealRoot(std::string const& what) : Error("NotRealRoot", what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::string const& what) : Error("CapExceeded", what) {}
};

class NotReduced : public Error {
 public:
  explicit NotReduced(std::string const& what) : Error("NotReduced", what) {}
};

class NoAdmissibleWord : public Error {
 public:
  explicit NoAdmissibleWord(std::string const& what)
      : Error("NoAdmissibleWord", what) {}
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(std::string const& what)
      : Error("HypothesisViolated", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(std::string const& what) : Error("DomainError", what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(std::string const& what) : Error("OutOfRange", what) {}
};

class NotGodement : public Error {
 public:
  explicit NotGodement(std::string const& what) : Error("NotGodement", what) {}
};

class NotInTitsCone : public Error {
 public:
  explicit NotInTitsCone(std::string const& what)
      : Error("NotInTitsCone", what) {}
};

class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(std::string const& what)
      : Error("PrecisionExhausted", what) {}
};

class NotDominant : public Error {
 public:
  explicit NotDominant(std::string const& what) : Error("NotDominant", what) {}
};

// Raised on malformed job configurations and command lines.  The CLI maps
// this to exit code 2; every other Error maps to exit code 1.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::string const& what) : Error("ConfigError", what) {}
};

// Internal invariant failures (caps that exist only to catch bugs).
class InternalError : public Error {
 public:
  explicit InternalError(std::string const& what)
      : Error("InternalError", what) {}
};

}  // namespace kmconv
