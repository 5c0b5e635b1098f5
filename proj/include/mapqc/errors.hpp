#ifndef MAPQC_ERRORS_HPP
#define MAPQC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mapqc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Model fails a structural invariant (bad generator, sign/spectral mismatch, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Operation asked of a model class it does not support.
struct UnsupportedModelError : Error {
  using Error::Error;
};

// Mean drift is non-negative where stability is required.
struct StabilityError : Error {
  using Error::Error;
};

// Argument outside the domain of a transform or formula.
struct DomainError : Error {
  double boundary = 0.0;  // e.g. the branch point a refused theta lies left of
  explicit DomainError(const std::string &msg, double b = 0.0) : Error(msg), boundary(b) {}
};

// Eigenvalue multiplicities > 1: the mixed exponential-polynomial expansion
// terms those would require are not implemented; such models are rejected.
struct RepeatedEigenvalueError : Error {
  using Error::Error;
};

// Numerical procedure failed to converge or lost too much precision.
struct NumericError : Error {
  using Error::Error;
};

// Model/config file could not be parsed.
struct ParseError : Error {
  int line = 0;
  explicit ParseError(const std::string &msg, int lineNo = 0) : Error(msg), line(lineNo) {}
};

// Grid does not meet a shape requirement (e.g. non-uniform spacing).
struct GridError : Error {
  using Error::Error;
};

}  // namespace mapqc

#endif
