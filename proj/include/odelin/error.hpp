#ifndef ODELIN_ERROR_HPP
#define ODELIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace odelin {

enum class errc {
  syntax_error,
  order_too_low,
  not_quasi_linear,
  missing_derivative,
  unknown_symbol,
  no_leader,
  parameters_present,
  infinite_dimension,
  singular_point,
  truncation_insufficient,
  inconsistent_system,
  resource_limit,
  misuse,
  internal,
};

// Typed error used across the library; the CLI maps codes to exit codes.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace odelin

#endif
