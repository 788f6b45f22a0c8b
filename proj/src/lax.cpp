#include "kptau/lax.hpp"

#include <string>

#include "kptau/error.hpp"
#include "kptau/hirota.hpp"

namespace kptau {

namespace {

// JSON-ish dump of the mismatching operator, attached to failing verdicts.
std::string op_dump(const char* name, const PseudoDiffOp& op) {
  std::string s = std::string("{\"") + name + "\": {";
  bool first = true;
  for (const auto& [o, c] : op.coeffs()) {
    if (!first) s += ", ";
    first = false;
    s += "\"" + std::to_string(o) + "\": {\"num\": \"" + c.num().to_string() +
         "\", \"den\": \"" + c.den().to_string() + "\"}";
  }
  s += "}";
  if (!op.is_exact()) s += ", \"floor\": " + std::to_string(op.floor());
  s += "}";
  return s;
}

Verdict operator_verdict(const PseudoDiffOp& defect, int floor, const char* what) {
  if (zero_to_floor(defect, floor)) return Verdict::ok();
  Verdict v = Verdict::failed_with(op_dump(what, defect.truncated(floor)));
  return v;
}

}  // namespace

DressingOperator dressing_from_tau(const TauFunction& tau, Sign sign, int floor) {
  if (tau.poly.is_zero()) fail(Errc::invalid_input, "dressing of the zero tau");
  if (floor > -1) fail(Errc::invalid_input, "dressing floor must be <= -1");
  ZSeries zs = miwa_shift(tau.poly, sign == Sign::plus ? Sign::minus : Sign::plus);
  PseudoDiffOp op;
  op.set_floor(floor);
  op.set_coeff(0, RationalFunction::one());
  for (const auto& [z, p] : zs.coeffs) {
    int i = -z;  // z-exponent -i contributes at order -i
    if (i == 0 || -i < floor) continue;
    RationalFunction c = RationalFunction::fraction(p, tau.poly);
    if (sign == Sign::minus && i % 2 != 0) c = -c;
    op.set_coeff(-i, std::move(c));
  }
  return {std::move(op), tau.level, sign};
}

namespace {

struct DressingPack {
  PseudoDiffOp p;      // P^+
  PseudoDiffOp p_inv;  // P^{+-1}, same depth
  PseudoDiffOp lax;    // P o d o P^{-1}, exact one order above the depth
};

DressingPack make_pack(const TauFunction& tau, int depth) {
  DressingPack pack;
  pack.p = dressing_from_tau(tau, Sign::plus, depth).op;
  pack.p_inv = psdo_inverse(pack.p, depth);
  pack.lax = compose(compose(pack.p, PseudoDiffOp::d(1)), pack.p_inv);
  if (!pack.lax.coeff(1).is_one() || !pack.lax.coeff(0).is_zero())
    fail(Errc::internal, "Lax operator is not of the form d + O(d^-1)");
  return pack;
}

}  // namespace

LaxOperator lax_from_tau(const TauFunction& tau, int floor) {
  return {make_pack(tau, floor - 1).lax, tau.level};
}

Verdict adjoint_consistency_check(const TauFunction& tau, int floor) {
  PseudoDiffOp pm = dressing_from_tau(tau, Sign::minus, floor).op;
  PseudoDiffOp pp = dressing_from_tau(tau, Sign::plus, floor).op;
  PseudoDiffOp defect = compose(adjoint(pm), pp) - PseudoDiffOp::identity();
  return operator_verdict(defect, floor, "adjoint_defect");
}

Verdict sato_wilson_check(const TauFunction& tau, int j, int floor) {
  DressingPack pack = make_pack(tau, floor - j);
  PseudoDiffOp lj = psdo_power(pack.lax, j);
  PseudoDiffOp defect = psdo_diff_t(pack.p, j) + compose(project(lj, OpPart::minus), pack.p);
  return operator_verdict(defect, floor, "sato_wilson_defect");
}

Verdict lax_equation_check(const TauFunction& tau, int j, int floor) {
  DressingPack pack = make_pack(tau, floor - j - 1);
  PseudoDiffOp lj_plus = project(psdo_power(pack.lax, j), OpPart::plus);
  PseudoDiffOp commutator =
      compose(lj_plus, pack.lax) - compose(pack.lax, lj_plus);
  PseudoDiffOp defect = psdo_diff_t(pack.lax, j) - commutator;
  return operator_verdict(defect, floor, "lax_equation_defect");
}

RationalFunction v_from_taus(const TauFunction& tau_l, const TauFunction& tau_l1) {
  if (tau_l.poly.is_zero() || tau_l1.poly.is_zero())
    fail(Errc::invalid_input, "v needs nonzero taus");
  return RationalFunction::fraction(tau_l.poly.diff(1), tau_l.poly) -
         RationalFunction::fraction(tau_l1.poly.diff(1), tau_l1.poly);
}

Verdict intertwining_check(const TauFunction& tau_l, const TauFunction& tau_l1, int floor) {
  RationalFunction v = v_from_taus(tau_l, tau_l1);
  PseudoDiffOp dv = PseudoDiffOp::d(1) + PseudoDiffOp::multiplication(v);

  PseudoDiffOp pl = dressing_from_tau(tau_l, Sign::plus, floor - 1).op;
  PseudoDiffOp pl1 = dressing_from_tau(tau_l1, Sign::plus, floor - 1).op;
  PseudoDiffOp defect = compose(pl1, PseudoDiffOp::d(1)) - compose(dv, pl);
  Verdict first = operator_verdict(defect, floor, "intertwining_defect");
  if (!first.pass) return first;

  // implied conjugation L_{l+1} = (d+v) o L_l o (d+v)^{-1}
  PseudoDiffOp ll = make_pack(tau_l, floor - 2).lax;
  PseudoDiffOp ll1 = make_pack(tau_l1, floor - 1).lax;
  PseudoDiffOp dv_inv = psdo_inverse(dv, floor - 2);
  PseudoDiffOp conj = compose(compose(dv, ll), dv_inv);
  return operator_verdict(ll1 - conj, floor, "conjugation_defect");
}

Verdict eigenfunction_check(const RationalFunction& phi, const LaxOperator& L, int j,
                            EigenKind kind, const RationalFunction& dphi_dtj) {
  if (L.op.empty() || L.op.max_order() != 1 || !L.op.coeff(1).is_one())
    fail(Errc::invalid_input, "eigenfunction check wants a monic order-1 Lax operator");
  PseudoDiffOp lj = psdo_power(L.op, j);
  if (!lj.is_exact() && lj.floor() > 0)
    fail(Errc::floor_too_high, "Lax power too shallow for its differential part");
  PseudoDiffOp plus = project(lj, OpPart::plus);
  RationalFunction rhs = (kind == EigenKind::eigen)
                             ? psdo_apply(plus, phi)
                             : -psdo_apply(adjoint(plus), phi);
  if (dphi_dtj == rhs) return Verdict::ok();
  return Verdict::failed_with("{\"eigenfunction_defect\": \"" + (dphi_dtj - rhs).to_string() +
                              "\"}");
}

Verdict ratio_eigenfunction_check(const TauFunction& tau_k, const TauFunction& tau_k1,
                                  std::span<const int> flows) {
  int jmax = 1;
  for (int j : flows) jmax = std::max(jmax, j);
  LaxOperator lk = lax_from_tau(tau_k, -jmax - 1);
  LaxOperator lk1 = lax_from_tau(tau_k1, -jmax - 1);
  RationalFunction phi = RationalFunction::fraction(tau_k1.poly, tau_k.poly);
  RationalFunction phi_inv = RationalFunction::one() / phi;
  for (int j : flows) {
    Verdict v = eigenfunction_check(phi, lk, j, EigenKind::eigen, phi.diff(j));
    if (!v.pass) return v;
    v = eigenfunction_check(phi_inv, lk1, j, EigenKind::adjoint, phi_inv.diff(j));
    if (!v.pass) return v;
  }
  return Verdict::ok();
}

Verdict crum_check(std::span<const RationalFunction> funcs) {
  if (funcs.empty()) fail(Errc::invalid_input, "crum check wants at least one function");
  for (size_t i = 0; i < funcs.size(); ++i) {
    auto prefix = funcs.subspan(0, i);
    RationalFunction wi = wronskian(prefix);
    RationalFunction wi1 = wronskian(funcs.subspan(0, i + 1));
    if (wi.is_zero() || wi1.is_zero())
      fail(Errc::singular_wronskian, "vanishing Wronskian in Crum identity");
    PseudoDiffOp wi_op = wronskian_operator(prefix);
    PseudoDiffOp wi1_op = wronskian_operator(funcs.subspan(0, i + 1));
    PseudoDiffOp lhs = compose(compose(PseudoDiffOp::multiplication(wi1), PseudoDiffOp::d(1)),
                               wi_op) -
                       compose(PseudoDiffOp::multiplication(wi1.diff(1)), wi_op);
    PseudoDiffOp rhs = compose(PseudoDiffOp::multiplication(wi), wi1_op);
    PseudoDiffOp defect = lhs - rhs;
    if (!defect.empty())
      return Verdict::failed_with(op_dump("crum_defect", defect));
  }
  return Verdict::ok();
}

namespace {

std::vector<RationalFunction> chain_vs(const TauChain& chain, int n) {
  std::vector<RationalFunction> vs;
  vs.reserve(n);
  for (int i = 0; i < n; ++i)
    vs.push_back(v_from_taus(chain.taus[i], chain.taus[(i + 1) % n]));
  return vs;
}

// (d+v_{i-1}) o ... o (d+v_0) o (d+v_{n-1}) o ... o (d+v_i)
PseudoDiffOp cyclic_factor_product(const std::vector<RationalFunction>& vs, int i) {
  int n = static_cast<int>(vs.size());
  PseudoDiffOp prod = PseudoDiffOp::identity();
  for (int step = 0; step < n; ++step) {
    int idx = (i + step) % n;
    PseudoDiffOp factor = PseudoDiffOp::d(1) + PseudoDiffOp::multiplication(vs[idx]);
    prod = compose(factor, prod);
  }
  return prod;
}

}  // namespace

Verdict nkdv_factorized_check(const TauChain& chain, int n, int floor) {
  if (static_cast<int>(chain.taus.size()) != n)
    fail(Errc::invalid_input, "chain must hold tau_0..tau_{n-1}");
  auto vs = chain_vs(chain, n);

  RationalFunction vsum;
  for (const auto& v : vs) vsum += v;
  if (!vsum.is_zero())
    return Verdict::failed_with("{\"sum_v_defect\": \"" + vsum.to_string() + "\"}");

  long max_deg = 0;
  for (const auto& t : chain.taus) max_deg = std::max(max_deg, t.poly.weighted_degree());
  for (int i = 0; i < n; ++i)
    for (long jn = n; jn <= max_deg; jn += n)
      if (!vs[i].diff(static_cast<int>(jn)).is_zero())
        return Verdict::failed_with("{\"v_flow_defect\": {\"i\": " + std::to_string(i) +
                                    ", \"t\": " + std::to_string(jn) + "}}");

  for (int i = 0; i < n; ++i) {
    PseudoDiffOp product = cyclic_factor_product(vs, i);
    PseudoDiffOp ln = psdo_power(make_pack(chain.taus[i], floor - n).lax, n);
    Verdict v = operator_verdict(ln - product, floor, "factorization_defect");
    if (!v.pass) return v;
  }
  return Verdict::ok();
}

Verdict mkdv_flow_check(const TauChain& chain, int n, int i, int j) {
  if (static_cast<int>(chain.taus.size()) != n)
    fail(Errc::invalid_input, "chain must hold tau_0..tau_{n-1}");
  if (i < 0 || i >= n) fail(Errc::invalid_input, "row index out of range");
  if (j < 1) fail(Errc::invalid_input, "flow index must be >= 1");
  auto vs = chain_vs(chain, n);

  int root_floor = -j - 2;
  auto frac_power_plus = [&](int row) {
    PseudoDiffOp cal_l = cyclic_factor_product(vs, row);
    PseudoDiffOp root = psdo_nth_root(cal_l, n, root_floor);
    return project(psdo_power(root, j), OpPart::plus);
  };
  PseudoDiffOp plus_i = frac_power_plus(i);
  PseudoDiffOp plus_i1 = frac_power_plus((i + 1) % n);

  PseudoDiffOp dv = PseudoDiffOp::d(1) + PseudoDiffOp::multiplication(vs[i]);
  PseudoDiffOp rhs = compose(plus_i1, dv) - compose(dv, plus_i);
  PseudoDiffOp lhs = PseudoDiffOp::multiplication(vs[i].diff(j));
  PseudoDiffOp defect = lhs - rhs;
  if (defect.empty()) return Verdict::ok();
  return Verdict::failed_with(op_dump("mkdv_flow_defect", defect));
}

}  // namespace kptau
