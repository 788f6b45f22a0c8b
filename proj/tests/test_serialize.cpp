#include "doctest.h"

#include "kptau/error.hpp"
#include "kptau/serialize.hpp"
#include "support/oracles.hpp"

using namespace kptau;
using kptau::testing::rand_poly;
using kptau::testing::rand_shift_table;

namespace {
Polynomial t(int i, int e = 1) { return Polynomial::variable(VarId::t(i), e); }
}  // namespace

TEST_CASE("polynomial JSON shape") {
  Polynomial p = schur_of_partition(Partition{{2, 1}});
  std::string s = dump_canonical(poly_to_json(p));
  CHECK(s == R"([{"coeff":"1/3","exps":{"t1":3}},{"coeff":"-1","exps":{"t3":1}}])");
  CHECK(poly_from_json(Json::parse(s)) == p);

  CHECK(dump_canonical(poly_to_json(Polynomial{})) == "[]");
  CHECK(poly_from_json(Json::parse("[]")).is_zero());
}

TEST_CASE("polynomial round trips bit-exactly") {
  std::mt19937 rng(211);
  for (int it = 0; it < 30; ++it) {
    Polynomial p = rand_poly(rng, 4, 3, 8);
    std::string once = dump_canonical(poly_to_json(p));
    Polynomial q = poly_from_json(Json::parse(once));
    CHECK(p == q);
    CHECK(dump_canonical(poly_to_json(q)) == once);
  }
}

TEST_CASE("terms arrive sorted leading-first and reject junk") {
  // unsorted input with a duplicate monomial collapses canonically
  Polynomial p = poly_from_json(Json::parse(
      R"([{"coeff":"1","exps":{"t3":1}},{"coeff":"1/2","exps":{"t1":1}},{"coeff":"1/2","exps":{"t1":1}}])"));
  CHECK(p == t(3) + t(1));

  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":"1","exps":{"q1":1}}])")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":"1","exps":{"t0":1}}])")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":"1","exps":{"t1":0}}])")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"exps":{"t1":1}}])")), Error);
  CHECK_THROWS(poly_from_json(Json::parse(R"([{"coeff":"1/0"}])")));
}

TEST_CASE("rational function and shift table round trips") {
  RationalFunction f = RationalFunction::fraction(t(2), t(1, 2));
  RationalFunction g = ratfun_from_json(ratfun_to_json(f));
  CHECK(f == g);

  std::mt19937 rng(223);
  ShiftTable c = rand_shift_table(rng, 5);
  CHECK(shift_table_from_json(shift_table_to_json(c)) == c);
  CHECK_THROWS_AS(shift_table_from_json(Json::parse(R"({"0":"1"})")), Error);
}

TEST_CASE("tau and chain round trips") {
  TauFunction tau{schur_of_partition(Partition{{2, 1}}), 3};
  Json j = tau_to_json(tau);
  TauFunction back = tau_from_json(j);
  CHECK(back.poly == tau.poly);
  CHECK(back.level == 3);

  TauChain chain;
  chain.taus.push_back({Polynomial(Rational(1)), 0});
  chain.taus.push_back({t(1), 1});
  TauChain back_chain = chain_from_json(chain_to_json(chain));
  REQUIRE(back_chain.taus.size() == 2);
  CHECK(back_chain.taus[1].poly == t(1));

  CHECK_THROWS_AS(
      chain_from_json(Json::parse(R"([{"level":0,"poly":[]},{"level":2,"poly":[]}])")), Error);
}

TEST_CASE("operator serialization keeps the floor") {
  PseudoDiffOp op = PseudoDiffOp::d(1) +
                    PseudoDiffOp::monomial(RationalFunction::fraction(t(2), t(1)), -1);
  op = op.truncated(-4);
  PseudoDiffOp back = psdo_from_json(psdo_to_json(op));
  CHECK(back.floor() == -4);
  CHECK(equal_to_floor(op, back, -4));

  PseudoDiffOp exact = PseudoDiffOp::d(2);
  CHECK(psdo_from_json(psdo_to_json(exact)).is_exact());
}

TEST_CASE("verdict JSON") {
  Verdict pass = Verdict::ok();
  pass.checked.push_back({0, 1, 2});
  Json j = verdict_to_json(pass);
  CHECK(j.at("pass") == true);
  CHECK(j.at("witness").is_null());
  CHECK(j.at("checked")[0] == Json::array({0, 1, 2}));

  Verdict fail = Verdict::failed({Monomial::variable(VarId::y(2), 3), Rational(-7, 2)});
  Json k = verdict_to_json(fail);
  CHECK(k.at("pass") == false);
  CHECK(k.at("witness").at("coeff") == "-7/2");
  CHECK(k.at("witness").at("monomial").at("y2") == 3);
}

TEST_CASE("laurent symbols") {
  LaurentSymbol f;
  f.coeffs[-3] = Rational(1, 2);
  f.coeffs[5] = Rational(-2);
  LaurentSymbol g = laurent_from_json(laurent_to_json(f));
  CHECK(g.coeffs == f.coeffs);
}

TEST_CASE("deterministic dumps") {
  std::mt19937 rng(227);
  Polynomial p = rand_poly(rng, 4, 3, 8);
  CHECK(dump_canonical(poly_to_json(p)) == dump_canonical(poly_to_json(p)));
}
