#include "odelin/reduction.hpp"

namespace odelin {

std::optional<Variable> try_leader(const DiffPolynomial& p, const Ranking& r) {
  std::optional<Variable> best;
  p.visit_variables([&](Variable v) {
    if (v.is_x() || (v.is_jet() && v.jet_order() == 0)) return;
    if (!best || r.greater(v, *best)) best = v;
  });
  return best;
}

Variable leader(const DiffPolynomial& p, const Ranking& r) {
  auto v = try_leader(p, r);
  if (!v) fail(errc::no_leader, "no leader: polynomial lies in the coefficient ring");
  return *v;
}

DiffPolynomial initial(const DiffPolynomial& p, const Ranking& r) {
  Variable v = leader(p, r);
  return p.coefficient_of(v, p.degree_in(v));
}

DiffPolynomial separant(const DiffPolynomial& p, const Ranking& r) {
  return p.formal_derivative(leader(p, r));
}

int leader_degree(const DiffPolynomial& p, const Ranking& r) { return p.degree_in(leader(p, r)); }

PseudoDivision pseudo_divide(const DiffPolynomial& p, const DiffPolynomial& q, Variable v) {
  PseudoDivision out;
  out.remainder = p;
  int dq = q.degree_in(v);
  if (dq == 0) fail(errc::internal, "pseudo_divide: divisor free of the variable");
  DiffPolynomial lq = q.coefficient_of(v, dq);
  int dr = out.remainder.degree_in(v);
  while (!out.remainder.is_zero() && dr >= dq) {
    DiffPolynomial lr = out.remainder.coefficient_of(v, dr);
    DiffPolynomial shift = lr * DiffPolynomial::var(v, dr - dq);
    out.remainder = out.remainder * lq - shift * q;
    out.quotient = out.quotient * lq + shift;
    ++out.multiplier_power;
    dr = out.remainder.degree_in(v);
    if (out.remainder.is_zero()) break;
  }
  return out;
}

DiffPolynomial prem_alg(const DiffPolynomial& p, const DiffPolynomial& q, Variable v) {
  return pseudo_divide(p, q, v).remainder;
}

DiffPolynomial pquo_alg(const DiffPolynomial& p, const DiffPolynomial& q, Variable v) {
  return pseudo_divide(p, q, v).quotient;
}

DiffPolynomial derive_equation(const DiffPolynomial& q, bool jet_leader, int dx, int dy) {
  DiffPolynomial out = q;
  if (jet_leader) {
    for (int i = 0; i < dx; ++i) out = out.total_derivative();
  } else {
    for (int i = 0; i < dx; ++i) out = out.partial_derivative('x');
    for (int j = 0; j < dy; ++j) out = out.partial_derivative('y');
  }
  return out;
}

namespace {

// Derivative of q's leader present in p, ranking-greatest first.
struct Occurrence {
  Variable v;
  int dx, dy;
};

std::optional<Occurrence> find_occurrence(const DiffPolynomial& p, Variable ld, const Ranking& r,
                                          int min_self_degree) {
  std::optional<Occurrence> best;
  auto offer = [&](Variable v, int dx, int dy) {
    if (!best || r.greater(v, best->v)) best = Occurrence{v, dx, dy};
  };
  p.visit_variables([&](Variable v) {
    if (ld.is_jet()) {
      if (!v.is_jet() || v.jet_order() < ld.jet_order()) return;
      int dx = v.jet_order() - ld.jet_order();
      if (dx == 0 && p.degree_in(v) < min_self_degree) return;
      offer(v, dx, 0);
    } else {
      if (!v.is_func() || !(v.function() == ld.function()) || v.dx() < ld.dx() || v.dy() < ld.dy()) return;
      int dx = v.dx() - ld.dx(), dy = v.dy() - ld.dy();
      if (dx == 0 && dy == 0 && p.degree_in(v) < min_self_degree) return;
      offer(v, dx, dy);
    }
  });
  return best;
}

} // namespace

PremResult prem(const DiffPolynomial& p, const DiffPolynomial& q, const Ranking& r) {
  Variable ld = leader(q, r);
  int dq = q.degree_in(ld);
  PremResult out;
  out.remainder = p;
  // cofactor bookkeeping: remainder = mult * p - sum cof * theta(q)
  auto add_cofactor = [&](int dx, int dy, const DiffPolynomial& c) {
    for (auto& e : out.cofactors) {
      if (e.dx == dx && e.dy == dy) {
        e.cofactor += c;
        return;
      }
    }
    out.cofactors.push_back({dx, dy, c});
  };
  auto scale_all = [&](const DiffPolynomial& m) {
    for (auto& e : out.cofactors) e.cofactor = e.cofactor * m;
  };

  for (;;) {
    auto occ = find_occurrence(out.remainder, ld, r, dq);
    if (!occ) break;
    if (occ->dx == 0 && occ->dy == 0) {
      // reduce the degree in the leader itself below deg(q)
      DiffPolynomial init = q.coefficient_of(ld, dq);
      int dr = out.remainder.degree_in(ld);
      DiffPolynomial lr = out.remainder.coefficient_of(ld, dr);
      DiffPolynomial shift = lr * DiffPolynomial::var(ld, dr - dq);
      out.remainder = out.remainder * init - shift * q;
      scale_all(init);
      add_cofactor(0, 0, shift);
      ++out.init_power;
    } else {
      // proper derivative: theta(q) is linear in occ->v with coefficient sep(q)
      DiffPolynomial dq_theta = derive_equation(q, ld.is_jet(), occ->dx, occ->dy);
      DiffPolynomial sep = q.formal_derivative(ld);
      int dr = out.remainder.degree_in(occ->v);
      // eliminate all powers of occ->v at once
      std::vector<DiffPolynomial> coeffs = out.remainder.coefficients_in(occ->v);
      DiffPolynomial tail = dq_theta - sep * DiffPolynomial::var(occ->v); // theta(q) = sep*v + tail
      DiffPolynomial sep_pow = DiffPolynomial::one();
      std::vector<DiffPolynomial> sep_pows(size_t(dr) + 1);
      for (int e = 0; e <= dr; ++e) {
        sep_pows[size_t(e)] = sep_pow;
        if (e < dr) sep_pow = sep_pow * sep;
      }
      // sep^dr * rem = sum_e coeff_e sep^(dr-e) (sep*v)^e with sep*v = theta(q) - tail;
      // expanding (theta(q) - tail)^e = (-tail)^e + theta(q) * B_e splits the
      // result into the new remainder and a cofactor on theta(q).
      DiffPolynomial rem_part, cof_part;
      for (int e = 0; e <= dr; ++e) {
        if (coeffs[size_t(e)].is_zero()) continue;
        // (sep*v)^e = ((theta - tail))^e = sum_j C(e,j) theta^j (-tail)^(e-j)
        //           = (-tail)^e + theta * B_e  with  B_e = sum_{j>=1} C(e,j) theta^(j-1) (-tail)^(e-j)
        DiffPolynomial neg_tail = -tail;
        DiffPolynomial pow_nt = DiffPolynomial::one();
        std::vector<DiffPolynomial> nt_pows(size_t(e) + 1);
        for (int j = 0; j <= e; ++j) {
          nt_pows[size_t(j)] = pow_nt;
          if (j < e) pow_nt = pow_nt * neg_tail;
        }
        DiffPolynomial Be;
        DiffPolynomial theta_pow = DiffPolynomial::one();
        Rational binom(1);
        for (int j = 1; j <= e; ++j) {
          binom = binom * (e - j + 1) / j;
          Be += theta_pow * nt_pows[size_t(e - j)] * binom;
          if (j < e) theta_pow = theta_pow * dq_theta;
        }
        rem_part += coeffs[size_t(e)] * sep_pows[size_t(dr - e)] * nt_pows[size_t(e)];
        cof_part += coeffs[size_t(e)] * sep_pows[size_t(dr - e)] * Be;
      }
      out.remainder = rem_part;
      scale_all(sep_pows[size_t(dr)]);
      add_cofactor(occ->dx, occ->dy, cof_part);
      out.sep_power += dr;
    }
  }
  return out;
}

} // namespace odelin
