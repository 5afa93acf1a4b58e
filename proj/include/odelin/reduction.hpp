#ifndef ODELIN_REDUCTION_HPP
#define ODELIN_REDUCTION_HPP

#include <optional>
#include <vector>

#include "odelin/polynomial.hpp"
#include "odelin/ranking.hpp"

namespace odelin {

// Ranking-greatest derivative symbol of p; no_leader error when p lies in
// the coefficient ring Q[x,y].
Variable leader(const DiffPolynomial& p, const Ranking& r);
std::optional<Variable> try_leader(const DiffPolynomial& p, const Ranking& r);

DiffPolynomial initial(const DiffPolynomial& p, const Ranking& r);
DiffPolynomial separant(const DiffPolynomial& p, const Ranking& r);
int leader_degree(const DiffPolynomial& p, const Ranking& r);

// Algebraic pseudo-remainder / pseudo-quotient with respect to the variable
// v; lc(q)^k * p = quot * q + rem with k minimal sufficient.
struct PseudoDivision {
  DiffPolynomial quotient;
  DiffPolynomial remainder;
  int multiplier_power = 0;
};
PseudoDivision pseudo_divide(const DiffPolynomial& p, const DiffPolynomial& q, Variable v);
DiffPolynomial prem_alg(const DiffPolynomial& p, const DiffPolynomial& q, Variable v);
DiffPolynomial pquo_alg(const DiffPolynomial& p, const DiffPolynomial& q, Variable v);

// Differential pseudo-remainder of p modulo q and its derivatives.  For an
// (x,y)-function leader the derivations are d_x and d_y; for a jet leader
// the derivation is the total derivative D_x.  The recorded identity is
//   init^a sep^b p = sum_theta cofactor_theta * theta(q) + remainder.
struct PremResult {
  DiffPolynomial remainder;
  int init_power = 0;
  int sep_power = 0;
  struct CofactorEntry {
    int dx = 0, dy = 0; // derivation applied to q (dx = D_x steps for jets)
    DiffPolynomial cofactor;
  };
  std::vector<CofactorEntry> cofactors;
};
PremResult prem(const DiffPolynomial& p, const DiffPolynomial& q, const Ranking& r);

// Derivative theta(q): apply d_x^dx d_y^dy for function leaders, or D_x^dx
// for jet leaders.
DiffPolynomial derive_equation(const DiffPolynomial& q, bool jet_leader, int dx, int dy);

} // namespace odelin

#endif
