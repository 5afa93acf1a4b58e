#ifndef ODELIN_RANKING_HPP
#define ODELIN_RANKING_HPP

#include <vector>

#include "odelin/symbols.hpp"

namespace odelin {

// Orderly (degree-reverse-lexicographical) ranking on derivative symbols.
//
// Comparison of two derivatives: total differentiation order first, then the
// symbol class (jet variables above unknown functions), then the function
// precedence list (earlier entries rank higher), and finally the multi-index
// with the preferred derivation counted first.  x ranks below every
// derivative symbol.  The ranking is compatible with both derivations.
class Ranking {
public:
  Ranking() = default;
  explicit Ranking(std::vector<FunctionId> precedence, bool x_major = true)
      : precedence_(std::move(precedence)), x_major_(x_major) {}

  static Ranking for_symmetry();                                      // xi > eta
  static Ranking for_linearization(int lf_count,
                                   const std::vector<FunctionId>& tail); // phi > psi > a_k > tail

  bool x_major() const { return x_major_; }
  const std::vector<FunctionId>& precedence() const { return precedence_; }

  Ranking with_swapped_derivations() const { return Ranking(precedence_, !x_major_); }

  // < 0, 0, > 0 as a ranks below, equal to, above b.
  int compare(Variable a, Variable b) const;
  bool less(Variable a, Variable b) const { return compare(a, b) < 0; }
  bool greater(Variable a, Variable b) const { return compare(a, b) > 0; }

private:
  int precedence_index(const FunctionId& f) const;

  std::vector<FunctionId> precedence_;
  bool x_major_ = true;
};

} // namespace odelin

#endif
