#pragma once

#include <stdexcept>
#include <string>

namespace nct {

enum class errc {
  parse_error,
  invalid_argument,
  unsupported,
  limit_exceeded,
  unassigned_variable,
  dimension_mismatch,
  not_linear,
  underdetermined,
  internal_inconsistency,
};

/// Exception carrying a machine-readable error class alongside the message.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace nct
