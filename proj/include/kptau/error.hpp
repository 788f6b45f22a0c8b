#pragma once

#include <stdexcept>
#include <string>

namespace kptau {

enum class Errc {
  invalid_input,
  division_by_zero,
  floor_too_high,
  not_monic,
  not_normalizable,
  singular_wronskian,
  case_violation,
  not_periodic,
  degenerate_data,
  internal,
};

// Single exception type for the library; `code` distinguishes the spec'd
// error conditions so the C API and CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kptau
