#pragma once

#include <stdexcept>
#include <string>

namespace sphex {

// Every failure mode the library reports deliberately.  Anything else
// escaping is a bug.
enum class Errc {
  DegreeMismatch,
  CapExceeded,
  NotNormal,
  SizeLimit,
  NotCoprime,
  NotIntegral,
  ParseError,
  ClassMismatch,
  OrthogonalityFailure,
  NotAnIndicator,
  ScopeViolation,
  BadArgument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace sphex
