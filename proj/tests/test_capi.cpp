#include "doctest.h"

#include <cstring>
#include <string>

#include "kptau.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { kptau_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};

struct Tau {
  kptau_tau* p = nullptr;
  ~Tau() { kptau_tau_free(p); }
};

struct Chain {
  kptau_chain* p = nullptr;
  ~Chain() { kptau_chain_free(p); }
};

}  // namespace

TEST_CASE("schur through the C surface") {
  Str s;
  REQUIRE(kptau_schur("2,1", &s.p) == KPTAU_OK);
  CHECK(s.view() == R"([{"coeff":"1/3","exps":{"t1":3}},{"coeff":"-1","exps":{"t3":1}}])");

  Str e;
  REQUIRE(kptau_schur_elementary(2, &e.p) == KPTAU_OK);
  CHECK(e.view() == R"([{"coeff":"1/2","exps":{"t1":2}},{"coeff":"1","exps":{"t2":1}}])");

  Str bad;
  CHECK(kptau_schur("1,2", &bad.p) == KPTAU_EINVAL);
  CHECK(std::strlen(kptau_last_error()) > 0);
}

TEST_CASE("tau handles round trip") {
  Tau tau;
  REQUIRE(kptau_tau_kp("2,1", "[{},{}]", &tau.p) == KPTAU_OK);
  Str json;
  REQUIRE(kptau_tau_to_json(tau.p, &json.p) == KPTAU_OK);
  Tau back;
  REQUIRE(kptau_tau_parse(json.view().c_str(), &back.p) == KPTAU_OK);
  Str again;
  REQUIRE(kptau_tau_to_json(back.p, &again.p) == KPTAU_OK);
  CHECK(json.view() == again.view());
}

TEST_CASE("verification exit semantics") {
  Tau s21, one;
  REQUIRE(kptau_tau_kp("2,1", "[{},{}]", &s21.p) == KPTAU_OK);
  REQUIRE(kptau_tau_parse(R"({"level":0,"poly":[{"coeff":"1"}]})", &one.p) == KPTAU_OK);

  Str v1;
  CHECK(kptau_verify_mkp(s21.p, s21.p, 0, &v1.p) == KPTAU_OK);
  CHECK(v1.view().find("\"pass\":true") != std::string::npos);

  Tau bad;
  REQUIRE(kptau_tau_parse(R"([{"coeff":"1","exps":{"t1":2}}])", &bad.p) == KPTAU_OK);
  Str v2;
  CHECK(kptau_verify_mkp(bad.p, bad.p, 0, &v2.p) == KPTAU_FAIL);
  CHECK(v2.view().find("\"pass\":false") != std::string::npos);
  CHECK(v2.view().find("witness") != std::string::npos);

  Str v3;
  CHECK(kptau_verify_first_mkp(one.p, bad.p, &v3.p) == KPTAU_FAIL);
}

TEST_CASE("periodicity and enumeration") {
  Str rep;
  CHECK(kptau_check_n_periodic(4, "6,3,2,1", &rep.p) == KPTAU_OK);
  CHECK(rep.view().find("\"head\":[6,2,0,-2]") != std::string::npos);
  Str rep2;
  CHECK(kptau_check_n_periodic(2, "2", &rep2.p) == KPTAU_FAIL);

  Str list;
  CHECK(kptau_enumerate_n_periodic(2, 6, &list.p) == KPTAU_OK);
  CHECK(list.view() == R"(["","1","2,1","3,2,1"])");
}

TEST_CASE("mkp extension and nkdv data chain") {
  Str ext;
  REQUIRE(kptau_mkp_extend("2,1", "[{},{}]", "prepend", 3, 0, R"({"1":"1/2"})", &ext.p) ==
          KPTAU_OK);
  CHECK(ext.view().find("\"partition\":\"3,2,1\"") != std::string::npos);

  Str bad;
  CHECK(kptau_mkp_extend("2,1", "[{},{}]", "prepend", 1, 0, "{}", &bad.p) == KPTAU_EINVAL);

  Chain chain;
  REQUIRE(kptau_chain_nkdv_data(2, "1,2", "2,0", R"([{"1":"1/3"},{}])", &chain.p) == KPTAU_OK);
  Str verdict;
  CHECK(kptau_verify_nkdv(chain.p, 2, &verdict.p) == KPTAU_OK);
  CHECK(verdict.view().find("\"checked\"") != std::string::npos);

  Tau tau0;
  REQUIRE(kptau_chain_at(chain.p, 0, &tau0.p) == KPTAU_OK);
  Str v2;
  CHECK(kptau_verify_mkp(tau0.p, tau0.p, 0, &v2.p) == KPTAU_OK);
}

TEST_CASE("nkdv constructor maps non-periodic to FAIL") {
  Tau tau;
  CHECK(kptau_tau_nkdv(2, "2", "{}", &tau.p) == KPTAU_FAIL);
  Tau ok;
  REQUIRE(kptau_tau_nkdv(2, "2,1", R"({"0":{"1":"1/2"},"1":{"1":"1/2"}})", &ok.p) == KPTAU_OK);
}

TEST_CASE("operator-side verifiers through the C surface") {
  Tau s21, s1;
  REQUIRE(kptau_tau_kp("2,1", "[{},{}]", &s21.p) == KPTAU_OK);
  REQUIRE(kptau_tau_parse(R"({"level":1,"poly":[{"coeff":"1","exps":{"t1":1}}]})", &s1.p) ==
          KPTAU_OK);

  Str lax;
  CHECK(kptau_verify_lax(s21.p, "1,2", -4, &lax.p) == KPTAU_OK);

  Str pair;
  CHECK(kptau_verify_pair(s21.p, s1.p, "1,2", -4, &pair.p) == KPTAU_OK);

  Chain chain;
  REQUIRE(kptau_chain_nkdv_data(2, "2,1", "0,2", "[{},{}]", &chain.p) == KPTAU_OK);
  Str mkdv;
  CHECK(kptau_verify_mkdv(chain.p, 2, 3, -4, &mkdv.p) == KPTAU_OK);

  Str crum;
  CHECK(kptau_crum(
            R"([[{"coeff":"1","exps":{"t1":1}}],[{"coeff":"1/2","exps":{"t1":2}},{"coeff":"1","exps":{"t2":1}}]])",
            &crum.p) == KPTAU_OK);
}

TEST_CASE("null arguments and junk are EINVAL") {
  CHECK(kptau_tau_parse(nullptr, nullptr) == KPTAU_EINVAL);
  CHECK(kptau_schur(nullptr, nullptr) == KPTAU_EINVAL);
  Tau t;
  CHECK(kptau_tau_parse("{not json", &t.p) == KPTAU_EINVAL);
  CHECK(t.p == nullptr);
}
