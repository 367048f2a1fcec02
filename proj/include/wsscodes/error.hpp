#pragma once

#include <stdexcept>
#include <string>

namespace wss {

enum class Errc {
  invalid_argument,
  not_invertible,
  budget_exceeded,
  bound_exceeded,
  verification_failed,
  parse_error,
};

/// All library failures are reported through this exception; the C API maps
/// code() one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(Errc::invalid_argument, what);
}

}  // namespace wss
