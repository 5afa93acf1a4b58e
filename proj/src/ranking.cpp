#include "odelin/ranking.hpp"

namespace odelin {

Ranking Ranking::for_symmetry() {
  return Ranking({FunctionId{FuncKind::xi, 0}, FunctionId{FuncKind::eta, 0}});
}

Ranking Ranking::for_linearization(int lf_count, const std::vector<FunctionId>& tail) {
  std::vector<FunctionId> prec{FunctionId{FuncKind::phi, 0}, FunctionId{FuncKind::psi, 0}};
  for (int k = 0; k < lf_count; ++k) prec.push_back(FunctionId{FuncKind::lf_coeff, k});
  for (const auto& f : tail) prec.push_back(f);
  return Ranking(prec);
}

int Ranking::precedence_index(const FunctionId& f) const {
  for (size_t i = 0; i < precedence_.size(); ++i)
    if (precedence_[i] == f) return int(i);
  return int(precedence_.size()); // unlisted functions rank below all listed ones
}

int Ranking::compare(Variable a, Variable b) const {
  if (a == b) return 0;
  // x below everything else
  if (a.is_x()) return b.is_x() ? 0 : -1;
  if (b.is_x()) return 1;
  int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob ? -1 : 1;
  // jets above functions at equal order
  if (a.is_jet() != b.is_jet()) return a.is_jet() ? 1 : -1;
  if (a.is_jet()) return 0; // equal order jets coincide
  FunctionId fa = a.function(), fb = b.function();
  if (!(fa == fb)) {
    int pa = precedence_index(fa), pb = precedence_index(fb);
    if (pa != pb) return pa < pb ? 1 : -1;
    // both unlisted: deterministic fallback
    return fa < fb ? -1 : 1;
  }
  int da = x_major_ ? a.dx() : a.dy();
  int db = x_major_ ? b.dx() : b.dy();
  if (da != db) return da < db ? -1 : 1;
  return 0;
}

} // namespace odelin
