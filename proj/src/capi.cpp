#include "kptau.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "kptau/error.hpp"
#include "kptau/serialize.hpp"

using namespace kptau;

struct kptau_tau {
  TauFunction value;
};

struct kptau_chain {
  TauChain value;
};

namespace {

thread_local std::string g_last_error;

kptau_rc set_error(kptau_rc rc, const std::string& msg) {
  g_last_error = msg;
  return rc;
}

kptau_rc rc_of(const Error& e) {
  switch (e.code()) {
    case Errc::not_periodic:
      return KPTAU_FAIL;
    case Errc::internal:
      return KPTAU_ERROR;
    default:
      return KPTAU_EINVAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
kptau_rc guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return set_error(rc_of(e), e.what());
  } catch (const Json::exception& e) {
    return set_error(KPTAU_EINVAL, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(KPTAU_EINVAL, e.what());
  } catch (const std::exception& e) {
    return set_error(KPTAU_ERROR, e.what());
  }
}

std::vector<int> parse_csv_ints(const char* csv) {
  std::vector<int> out;
  if (!csv) return out;
  std::string s(csv);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    int v = 0;
    auto first = s.data() + pos;
    while (first < s.data() + comma && *first == ' ') ++first;
    auto [p, ec] = std::from_chars(first, s.data() + comma, v);
    if (ec != std::errc() || p != s.data() + comma)
      fail(Errc::invalid_input, "malformed integer list '" + s + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::vector<ShiftTable> parse_shift_list(const char* json) {
  Json j = Json::parse(json ? json : "[]");
  if (!j.is_array()) fail(Errc::invalid_input, "shift list must be a JSON array");
  std::vector<ShiftTable> out;
  for (const auto& item : j) out.push_back(shift_table_from_json(item));
  return out;
}

kptau_rc verdict_out(const Verdict& v, char** verdict_json) {
  if (verdict_json) *verdict_json = dup_string(dump_canonical(verdict_to_json(v)));
  if (v.pass) return KPTAU_OK;
  return set_error(KPTAU_FAIL, "verification failed");
}

}  // namespace

extern "C" {

const char* kptau_version(void) { return "0.1.0"; }

const char* kptau_last_error(void) { return g_last_error.c_str(); }

void kptau_string_free(char* s) { std::free(s); }
void kptau_tau_free(kptau_tau* t) { delete t; }
void kptau_chain_free(kptau_chain* c) { delete c; }

kptau_rc kptau_tau_parse(const char* json, kptau_tau** out) {
  return guarded([&]() {
    if (!json || !out) fail(Errc::invalid_input, "null argument");
    *out = new kptau_tau{tau_from_json(Json::parse(json))};
    return KPTAU_OK;
  });
}

kptau_rc kptau_tau_to_json(const kptau_tau* t, char** json) {
  return guarded([&]() {
    if (!t || !json) fail(Errc::invalid_input, "null argument");
    *json = dup_string(dump_canonical(tau_to_json(t->value)));
    return KPTAU_OK;
  });
}

kptau_rc kptau_tau_kp(const char* partition, const char* shifts_json, kptau_tau** out) {
  return guarded([&]() {
    if (!partition || !out) fail(Errc::invalid_input, "null argument");
    Partition lambda = Partition::parse(partition);
    auto shifts = parse_shift_list(shifts_json);
    if (shifts.empty()) shifts.resize(lambda.size());
    *out = new kptau_tau{tau_kp(lambda, shifts)};
    return KPTAU_OK;
  });
}

kptau_rc kptau_mkp_extend(const char* partition, const char* shifts_json,
                          const char* successor_case, int mu, int index, const char* d_json,
                          char** result_json) {
  return guarded([&]() {
    if (!partition || !successor_case || !result_json)
      fail(Errc::invalid_input, "null argument");
    KpTauSpec spec;
    spec.lambda = Partition::parse(partition);
    spec.shifts = parse_shift_list(shifts_json);
    if (spec.shifts.empty()) spec.shifts.resize(spec.lambda.size());
    std::string c(successor_case);
    SuccessorCase sc;
    if (c == "prepend")
      sc = SuccessorCase::prepend;
    else if (c == "insert")
      sc = SuccessorCase::insert;
    else if (c == "decrement")
      sc = SuccessorCase::decrement;
    else
      fail(Errc::invalid_input, "unknown successor case '" + c + "'");
    ShiftTable d = d_json ? shift_table_from_json(Json::parse(d_json)) : ShiftTable{};
    KpTauSpec next = mkp_successor(spec, sc, mu, index, d);
    TauFunction tau = tau_kp(next);
    Json shifts = Json::array();
    for (const auto& t : next.shifts) shifts.push_back(shift_table_to_json(t));
    Json out{{"partition", next.lambda.to_string()},
             {"shifts", shifts},
             {"tau", poly_to_json(tau.poly)}};
    *result_json = dup_string(dump_canonical(out));
    return KPTAU_OK;
  });
}

kptau_rc kptau_tau_nkdv(int n, const char* partition, const char* class_shifts_json,
                        kptau_tau** out) {
  return guarded([&]() {
    if (!partition || !out) fail(Errc::invalid_input, "null argument");
    Partition lambda = Partition::parse(partition);
    std::map<int, ShiftTable> cls;
    if (class_shifts_json) {
      Json j = Json::parse(class_shifts_json);
      for (const auto& [key, val] : j.items()) cls[std::stoi(key)] = shift_table_from_json(val);
    }
    *out = new kptau_tau{tau_nkdv(lambda, n, cls)};
    return KPTAU_OK;
  });
}

kptau_rc kptau_chain_parse(const char* json, kptau_chain** out) {
  return guarded([&]() {
    if (!json || !out) fail(Errc::invalid_input, "null argument");
    *out = new kptau_chain{chain_from_json(Json::parse(json))};
    return KPTAU_OK;
  });
}

kptau_rc kptau_chain_to_json(const kptau_chain* c, char** json) {
  return guarded([&]() {
    if (!c || !json) fail(Errc::invalid_input, "null argument");
    *json = dup_string(dump_canonical(chain_to_json(c->value)));
    return KPTAU_OK;
  });
}

kptau_rc kptau_chain_at(const kptau_chain* c, int pos, kptau_tau** out) {
  return guarded([&]() {
    if (!c || !out) fail(Errc::invalid_input, "null argument");
    if (pos < 0 || pos >= static_cast<int>(c->value.taus.size()))
      fail(Errc::invalid_input, "chain position out of range");
    *out = new kptau_tau{c->value.taus[static_cast<size_t>(pos)]};
    return KPTAU_OK;
  });
}

kptau_rc kptau_chain_nkdv_data(int n, const char* pi_csv, const char* m_csv,
                               const char* shifts_json, kptau_chain** out) {
  return guarded([&]() {
    if (!pi_csv || !m_csv || !out) fail(Errc::invalid_input, "null argument");
    NkdvData data;
    data.n = n;
    data.pi = parse_csv_ints(pi_csv);
    data.m = parse_csv_ints(m_csv);
    data.shifts = parse_shift_list(shifts_json);
    if (data.shifts.empty()) data.shifts.resize(static_cast<size_t>(n));
    *out = new kptau_chain{tau_nkdv_from_data(data).chain};
    return KPTAU_OK;
  });
}

kptau_rc kptau_schur(const char* partition, char** poly_json) {
  return guarded([&]() {
    if (!partition || !poly_json) fail(Errc::invalid_input, "null argument");
    *poly_json =
        dup_string(dump_canonical(poly_to_json(schur_of_partition(Partition::parse(partition)))));
    return KPTAU_OK;
  });
}

kptau_rc kptau_schur_elementary(int j, char** poly_json) {
  return guarded([&]() {
    if (!poly_json) fail(Errc::invalid_input, "null argument");
    *poly_json = dup_string(dump_canonical(poly_to_json(elementary_schur(j))));
    return KPTAU_OK;
  });
}

kptau_rc kptau_check_n_periodic(int n, const char* partition, char** report_json) {
  return guarded([&]() {
    if (!partition) fail(Errc::invalid_input, "null argument");
    Partition lambda = Partition::parse(partition);
    bool ok = is_n_periodic(lambda, n);
    if (report_json) {
      Json out{{"pass", ok}, {"v_lambda", spectrum_to_json(v_lambda(lambda))}};
      *report_json = dup_string(dump_canonical(out));
    }
    if (!ok) return set_error(KPTAU_FAIL, "partition is not n-periodic");
    return KPTAU_OK;
  });
}

kptau_rc kptau_enumerate_n_periodic(int n, int max_weight, char** json) {
  return guarded([&]() {
    if (!json) fail(Errc::invalid_input, "null argument");
    Json out = Json::array();
    for (const auto& p : enumerate_n_periodic(n, max_weight)) out.push_back(p.to_string());
    *json = dup_string(dump_canonical(out));
    return KPTAU_OK;
  });
}

kptau_rc kptau_verify_mkp(const kptau_tau* tau_k, const kptau_tau* tau_l, int d,
                          char** verdict_json) {
  return guarded([&]() {
    if (!tau_k || !tau_l) fail(Errc::invalid_input, "null argument");
    return verdict_out(verify_mkp(tau_k->value, tau_l->value, d), verdict_json);
  });
}

kptau_rc kptau_verify_first_mkp(const kptau_tau* tau_k, const kptau_tau* tau_k1,
                                char** verdict_json) {
  return guarded([&]() {
    if (!tau_k || !tau_k1) fail(Errc::invalid_input, "null argument");
    return verdict_out(verify_first_mkp(tau_k->value, tau_k1->value), verdict_json);
  });
}

kptau_rc kptau_verify_nkdv(const kptau_chain* chain, int n, char** verdict_json) {
  return guarded([&]() {
    if (!chain) fail(Errc::invalid_input, "null argument");
    return verdict_out(verify_nkdv(chain->value, n), verdict_json);
  });
}

kptau_rc kptau_verify_lax(const kptau_tau* t, const char* flows_csv, int floor,
                          char** verdict_json) {
  return guarded([&]() {
    if (!t) fail(Errc::invalid_input, "null argument");
    auto flows = parse_csv_ints(flows_csv);
    if (flows.empty()) flows = {1, 2, 3};
    Json detail = Json::object();
    Verdict combined;
    Verdict adj = adjoint_consistency_check(t->value, floor);
    detail["adjoint_consistency"] = verdict_to_json(adj);
    if (!adj.pass) combined.pass = false;
    for (int j : flows) {
      Verdict sw = sato_wilson_check(t->value, j, floor);
      detail["sato_wilson_t" + std::to_string(j)] = verdict_to_json(sw);
      Verdict lx = lax_equation_check(t->value, j, floor);
      detail["lax_t" + std::to_string(j)] = verdict_to_json(lx);
      if (!sw.pass || !lx.pass) combined.pass = false;
    }
    combined.detail = dump_canonical(detail);
    return verdict_out(combined, verdict_json);
  });
}

kptau_rc kptau_verify_pair(const kptau_tau* tau_l, const kptau_tau* tau_l1,
                           const char* flows_csv, int floor, char** verdict_json) {
  return guarded([&]() {
    if (!tau_l || !tau_l1) fail(Errc::invalid_input, "null argument");
    auto flows = parse_csv_ints(flows_csv);
    if (flows.empty()) flows = {1, 2, 3};
    Json detail = Json::object();
    Verdict combined;
    Verdict bilinear = verify_mkp(tau_l1->value, tau_l->value, 1);
    detail["bilinear_d1"] = verdict_to_json(bilinear);
    if (!bilinear.pass) combined.pass = false;
    Verdict inter = intertwining_check(tau_l->value, tau_l1->value, floor);
    detail["intertwining"] = verdict_to_json(inter);
    if (!inter.pass) combined.pass = false;
    Verdict ratio = ratio_eigenfunction_check(tau_l->value, tau_l1->value, flows);
    detail["ratio_eigenfunction"] = verdict_to_json(ratio);
    if (!ratio.pass) combined.pass = false;
    combined.detail = dump_canonical(detail);
    return verdict_out(combined, verdict_json);
  });
}

kptau_rc kptau_verify_mkdv(const kptau_chain* chain, int n, int flow, int floor,
                           char** verdict_json) {
  return guarded([&]() {
    if (!chain) fail(Errc::invalid_input, "null argument");
    Json detail = Json::object();
    Verdict combined;
    Verdict fact = nkdv_factorized_check(chain->value, n, floor);
    detail["factorized"] = verdict_to_json(fact);
    if (!fact.pass) combined.pass = false;
    for (int i = 0; i < n; ++i) {
      Verdict fv = mkdv_flow_check(chain->value, n, i, flow);
      detail["flow_row" + std::to_string(i)] = verdict_to_json(fv);
      if (!fv.pass) combined.pass = false;
    }
    combined.detail = dump_canonical(detail);
    return verdict_out(combined, verdict_json);
  });
}

kptau_rc kptau_crum(const char* funcs_json, char** verdict_json) {
  return guarded([&]() {
    if (!funcs_json) fail(Errc::invalid_input, "null argument");
    Json j = Json::parse(funcs_json);
    if (!j.is_array()) fail(Errc::invalid_input, "crum wants a JSON array of functions");
    std::vector<RationalFunction> funcs;
    for (const auto& item : j) funcs.push_back(ratfun_from_json(item));
    return verdict_out(crum_check(funcs), verdict_json);
  });
}

}  // extern "C"
