#include "doctest.h"

#include "kptau/error.hpp"
#include "kptau/tau.hpp"
#include "support/oracles.hpp"

using namespace kptau;
using kptau::testing::rand_shift_table;

namespace {
Polynomial t(int i, int e = 1) { return Polynomial::variable(VarId::t(i), e); }
RationalFunction F(Polynomial p) { return RationalFunction(std::move(p)); }
Partition staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}
}  // namespace

TEST_CASE("tau_kp basics") {
  CHECK(tau_kp(Partition{{2, 1}}, {{}, {}}).poly == schur_of_partition(Partition{{2, 1}}));
  ShiftTable c7{{1, Rational(7)}};
  CHECK(tau_kp(Partition{{1}}, {c7}).poly == t(1) + Polynomial(Rational(7)));
  CHECK(tau_kp(Partition{{1}}, {c7}).level == 0);
}

TEST_CASE("successor data transformations") {
  std::mt19937 rng(71);
  ShiftTable c1 = rand_shift_table(rng, 2), c2 = rand_shift_table(rng, 1);
  ShiftTable d = rand_shift_table(rng, 3);
  KpTauSpec spec{Partition{{2, 1}}, {c1, c2}};

  KpTauSpec pre = mkp_successor(spec, SuccessorCase::prepend, 3, 0, d);
  CHECK(pre.lambda == Partition{{3, 2, 1}});
  REQUIRE(pre.shifts.size() == 3);
  CHECK(pre.shifts[0] == d);
  CHECK(pre.shifts[1] == c1);
  CHECK(pre.shifts[2] == c2);

  KpTauSpec dec = mkp_successor(spec, SuccessorCase::decrement, 0, 0, {});
  CHECK(dec.lambda == Partition{{1}});
  REQUIRE(dec.shifts.size() == 1);
  CHECK(dec.shifts[0] == c1);

  KpTauSpec spec31{Partition{{3, 1}}, {c1, c2}};
  KpTauSpec ins = mkp_successor(spec31, SuccessorCase::insert, 1, 1, d);
  CHECK(ins.lambda == Partition{{2, 1, 1}});
  REQUIRE(ins.shifts.size() == 3);
  CHECK(ins.shifts[0] == c1);
  CHECK(ins.shifts[1] == d);
  CHECK(ins.shifts[2] == c2);

  CHECK_THROWS_AS(mkp_successor(spec, SuccessorCase::prepend, 1, 0, d), Error);
  CHECK_THROWS_AS(mkp_successor(spec31, SuccessorCase::insert, 3, 1, d), Error);
  CHECK_THROWS_AS(mkp_successor(spec31, SuccessorCase::insert, 0, 2, d), Error);
}

TEST_CASE("eigenfunctions from symbols") {
  TauFunction vacuum{Polynomial(Rational(1)), 0};

  LaurentSymbol zm3{{{-3, Rational(1)}}};
  CHECK(eigenfunction_from_symbol(zm3, vacuum, Sign::plus) == F(elementary_schur(2)));

  LaurentSymbol z0{{{0, Rational(1)}}};
  CHECK(eigenfunction_from_symbol(z0, vacuum, Sign::plus).is_zero());

  // z^{-M-1} + sum a_j z^{-j-1} integrates to s_M(t + c)
  std::mt19937 rng(73);
  for (int M = 1; M <= 5; ++M) {
    LaurentSymbol f;
    std::vector<Rational> a;
    f.coeffs[-M - 1] = Rational(1);
    for (int j = 0; j < M; ++j) {
      a.push_back(kptau::testing::rand_rational(rng, 5));
      if (a.back() != 0) f.coeffs[-j - 1] = a.back();
    }
    ShiftTable c = constants_from_coefficients(a, M);
    CHECK(eigenfunction_from_symbol(f, vacuum, Sign::plus) == F(elementary_schur(M).shift(c)));
  }
}

TEST_CASE("wronskian determinants") {
  RationalFunction s1 = F(elementary_schur(1));
  RationalFunction s2 = F(elementary_schur(2));
  std::vector<RationalFunction> one{s1}, two{s1, s2}, rep{s1, s1};
  CHECK(wronskian(one) == F(t(1)));
  CHECK(wronskian(two) == F(t(1, 2) * Rational(1, 2) - t(2)));
  CHECK(wronskian(rep).is_zero());
}

TEST_CASE("wronskian operators annihilate their inputs") {
  RationalFunction s1 = F(elementary_schur(1));
  RationalFunction s2 = F(elementary_schur(2));

  std::vector<RationalFunction> one{s1};
  PseudoDiffOp w1 = wronskian_operator(one);
  CHECK(psdo_apply(w1, s1).is_zero());

  std::vector<RationalFunction> two{s1, s2};
  PseudoDiffOp w2 = wronskian_operator(two);
  CHECK(psdo_apply(w2, s1).is_zero());
  CHECK(psdo_apply(w2, s2).is_zero());

  // M_i = W_i(d)/W_i is monic of order i
  for (size_t i = 1; i <= 2; ++i) {
    std::span<const RationalFunction> prefix(two.data(), i);
    PseudoDiffOp m = wronskian_operator(prefix).scaled(RationalFunction::one() / wronskian(prefix));
    CHECK(m.max_order() == static_cast<int>(i));
    CHECK(m.coeff(static_cast<int>(i)).is_one());
  }

  std::vector<RationalFunction> rep{s1, s1};
  CHECK_THROWS_AS(wronskian_operator(rep), Error);
}

TEST_CASE("n-KdV tau by classification") {
  std::mt19937 rng(79);
  ShiftTable c = rand_shift_table(rng, 3);

  // n=2, lambda=(2,1): s_(2,1)(t+c), independent of even times
  TauFunction kdv = tau_nkdv(Partition{{2, 1}}, 2, {{0, c}, {1, c}});
  Polynomial direct = schur_of_partition(Partition{{2, 1}}).shift(c);
  CHECK(kdv.poly == direct);
  CHECK(kdv.poly.diff(2).is_zero());
  CHECK(kdv.poly.diff(4).is_zero());

  // n=3, lambda=(1): t_1 + c_1
  ShiftTable c1{{1, Rational(5, 7)}};
  CHECK(tau_nkdv(Partition{{1}}, 3, {{1, c1}}).poly == t(1) + Polynomial(Rational(5, 7)));

  CHECK_THROWS_AS(tau_nkdv(Partition{{2}}, 2, {}), Error);
}

TEST_CASE("the 4-periodic worked example matrix") {
  std::mt19937 rng(83);
  ShiftTable c2 = rand_shift_table(rng, 4), c4 = rand_shift_table(rng, 3);
  TauFunction tau = tau_nkdv(Partition{{6, 3, 2, 1}}, 4, {{2, c2}, {4, c4}});

  // rows: s_6..s_9 (c2), s_2..s_5 (c2), s_0..s_3 (c4), 0 0 s_0 s_1 (c2)
  auto row = [](int lo, const ShiftTable& c) {
    std::vector<Polynomial> r;
    for (int j = 0; j < 4; ++j) r.push_back(elementary_schur(lo + j).shift(c));
    return r;
  };
  std::vector<std::vector<Polynomial>> m{row(6, c2), row(2, c2), row(0, c4), row(-2, c2)};
  CHECK(tau.poly == det_poly(m));
  CHECK(tau.poly.diff(4).is_zero());
  CHECK(tau.poly.diff(8).is_zero());
}

TEST_CASE("n-KdV chains from data") {
  std::mt19937 rng(89);
  ShiftTable c = rand_shift_table(rng, 4);

  // n=2 first family: tau_0 = staircase(k), tau_1 = staircase(k+1)
  NkdvData a{2, {1, 2}, {2, 0}, {c, {}}};
  NkdvChain chain_a = tau_nkdv_from_data(a);
  REQUIRE(chain_a.chain.taus.size() == 2);
  CHECK(proportional(chain_a.chain.taus[0].poly, schur_of_partition(staircase(2)).shift(c)));
  CHECK(proportional(chain_a.chain.taus[1].poly, schur_of_partition(staircase(3)).shift(c)));
  CHECK(chain_a.tau_n_over_tau_0 != 0);

  // n=2 second family: tau_0 = staircase(k), tau_1 = staircase(k-1)
  NkdvData b{2, {2, 1}, {0, 2}, {{}, c}};
  NkdvChain chain_b = tau_nkdv_from_data(b);
  CHECK(proportional(chain_b.chain.taus[0].poly, schur_of_partition(staircase(2)).shift(c)));
  CHECK(proportional(chain_b.chain.taus[1].poly, schur_of_partition(staircase(1)).shift(c)));

  // multiplicity preconditions
  CHECK_THROWS_AS(tau_nkdv_from_data(NkdvData{2, {1, 2}, {0, 0}, {{}, {}}}), Error);
  CHECK_THROWS_AS(tau_nkdv_from_data(NkdvData{2, {1, 2}, {1, 2}, {{}, {}}}), Error);
  CHECK_THROWS_AS(tau_nkdv_from_data(NkdvData{2, {1, 1}, {1, 0}, {{}, {}}}), Error);
}

TEST_CASE("tau normalization and proportionality") {
  Polynomial p = t(1) * Rational(3, 2) + Polynomial(Rational(3));
  CHECK(normalize_tau(p) == t(1) * Rational(1, 2) + Polynomial(Rational(1)));
  CHECK(proportional(p, t(1) + Polynomial(Rational(2))));
  CHECK(!proportional(p, t(1)));
}
