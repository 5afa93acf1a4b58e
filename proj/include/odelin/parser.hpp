#ifndef ODELIN_PARSER_HPP
#define ODELIN_PARSER_HPP

#include <string>
#include <vector>

#include "odelin/ode_problem.hpp"

namespace odelin {

// Parse a textual ODE into normalized form y^(n) + f = 0.  `params` and
// `funcs` declare the admissible symbol names; their order fixes the ranking
// precedence used later.  Errors: syntax_error (with position),
// order_too_low, not_quasi_linear, missing_derivative, unknown_symbol.
ODEProblem parse_ode(const std::string& text, const std::vector<std::string>& params = {},
                     const std::vector<std::string>& funcs = {});

// Parse a single expression over the declared symbols; used to re-ingest
// rendered reports.  Accepts the ODE grammar plus D(name,i,j) derivatives.
DiffRational parse_expression(const std::string& text, const std::vector<std::string>& params = {},
                              const std::vector<std::string>& funcs = {});

// Render in the input grammar (round-trips through parse_expression).
std::string render(const DiffPolynomial& p);
std::string render(const DiffRational& f);
std::string render(const ODEProblem& q);

} // namespace odelin

#endif
