#ifndef ODELIN_ODE_PROBLEM_HPP
#define ODELIN_ODE_PROBLEM_HPP

#include <string>
#include <vector>

#include "odelin/rational_function.hpp"

namespace odelin {

// A quasi-linear ODE y^(n) + f = 0 with f rational in x, y, y', ..., y^(n-1),
// possibly involving parameters and undetermined (x,y)-functions.
struct ODEProblem {
  int order = 0;
  DiffRational f;
  std::vector<FunctionId> params; // FuncKind::param, declaration order
  std::vector<FunctionId> funcs;  // FuncKind::user_func, declaration order

  bool has_unknowns() const { return !params.empty() || !funcs.empty(); }

  friend bool operator==(const ODEProblem& a, const ODEProblem& b) {
    return a.order == b.order && a.params == b.params && a.funcs == b.funcs && a.f == b.f;
  }
};

} // namespace odelin

#endif
