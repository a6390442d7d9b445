#ifndef QBUNDLE_ERROR_HPP
#define QBUNDLE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad scalar or presentation input (zero denominators, malformed generators).
struct ConstructionError : Error {
  using Error::Error;
};

struct EvaluationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct RewriteError : Error {
  using Error::Error;
};

struct ConfluenceError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace qb

#endif
