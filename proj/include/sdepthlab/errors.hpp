#pragma once

#include <stdexcept>
#include <string>

namespace sdepthlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition was violated (wrong context, zero module,
/// k = 0, ...). The CLI maps this to exit code 1.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Malformed textual or JSON input. The CLI maps this to exit code 2.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace sdepthlab
