// kptau command line: construct and verify polynomial tau-functions of the
// KP / MKP / n-KdV hierarchies. Thin veneer over the C API in kptau.h; all
// inputs and outputs are the library's canonical JSON with exact rationals.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kptau.h"

namespace {

// Values starting with '@' are read from the named file.
std::string load_arg(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw CLI::ValidationError("cannot read file '" + value.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Output {
  bool pretty = false;

  int emit(kptau_rc rc, char* json) const {
    if (json) {
      if (pretty) {
        auto parsed = nlohmann::json::parse(json, nullptr, false);
        std::cout << (parsed.is_discarded() ? std::string(json) : parsed.dump(2)) << "\n";
      } else {
        std::cout << json << "\n";
      }
      kptau_string_free(json);
    }
    if (rc == KPTAU_OK) return 0;
    if (rc == KPTAU_FAIL) {
      if (!json) std::cerr << kptau_last_error() << "\n";
      return 1;
    }
    std::cerr << "error: " << kptau_last_error() << "\n";
    return rc == KPTAU_EINVAL ? 2 : 3;
  }
};

struct TauHandle {
  kptau_tau* ptr = nullptr;
  ~TauHandle() { kptau_tau_free(ptr); }
};

struct ChainHandle {
  kptau_chain* ptr = nullptr;
  ~ChainHandle() { kptau_chain_free(ptr); }
};

int parse_tau(const std::string& arg, TauHandle& h) {
  if (kptau_tau_parse(load_arg(arg).c_str(), &h.ptr) != KPTAU_OK) {
    std::cerr << "error: " << kptau_last_error() << "\n";
    return 2;
  }
  return 0;
}

int parse_chain(const std::string& arg, ChainHandle& h) {
  if (kptau_chain_parse(load_arg(arg).c_str(), &h.ptr) != KPTAU_OK) {
    std::cerr << "error: " << kptau_last_error() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructors and verifiers for polynomial KP/MKP/n-KdV tau-functions"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--pretty", out.pretty, "human-readable JSON rendering");
  int floor = -6;
  app.add_option("--floor", floor, "lowest retained d-order for operator checks (default -6)");

  int ret = 0;
  std::string partition, shifts = "[]", d_table = "{}", case_name, chain_arg, funcs;
  std::string tau_a, tau_b, class_shifts = "{}", pi_csv, m_csv, flows = "1,2,3";
  int n = 2, mu = 0, index = 1, d_power = 0, elementary = 0, max_weight = 0, flow = 3;
  bool first_form = false, has_elementary = false, has_tau_b = false;

  auto* schur = app.add_subcommand("schur", "Schur polynomial of a partition");
  schur->add_option("--partition", partition, "comma-separated decreasing parts");
  schur->add_option("--elementary", elementary, "index of an elementary Schur polynomial")
      ->each([&](const std::string&) { has_elementary = true; });
  schur->callback([&]() {
    char* json = nullptr;
    kptau_rc rc = has_elementary ? kptau_schur_elementary(elementary, &json)
                                 : kptau_schur(partition.c_str(), &json);
    ret = out.emit(rc, json);
  });

  auto* taukp = app.add_subcommand("tau-kp", "shifted Jacobi-Trudi tau-function");
  taukp->add_option("--partition", partition)->required();
  taukp->add_option("--shifts", shifts, "JSON array of shift tables, one per row");
  taukp->callback([&]() {
    TauHandle h;
    if (kptau_tau_kp(partition.c_str(), load_arg(shifts).c_str(), &h.ptr) != KPTAU_OK) {
      std::cerr << "error: " << kptau_last_error() << "\n";
      ret = 2;
      return;
    }
    char* json = nullptr;
    kptau_rc rc = kptau_tau_to_json(h.ptr, &json);
    ret = out.emit(rc, json);
  });

  auto* extend = app.add_subcommand("tau-mkp-extend", "apply one MKP successor step");
  extend->add_option("--partition", partition)->required();
  extend->add_option("--shifts", shifts);
  extend->add_option("--case", case_name, "prepend | insert | decrement")->required();
  extend->add_option("--mu", mu, "new part (prepend/insert)");
  extend->add_option("--index", index, "insert position, 1-based");
  extend->add_option("--d", d_table, "shift table for the new part");
  extend->callback([&]() {
    char* json = nullptr;
    kptau_rc rc = kptau_mkp_extend(partition.c_str(), load_arg(shifts).c_str(),
                                   case_name.c_str(), mu, index, load_arg(d_table).c_str(),
                                   &json);
    ret = out.emit(rc, json);
  });

  auto* nkdv = app.add_subcommand("tau-nkdv", "n-KdV tau for an n-periodic partition");
  nkdv->add_option("--n", n)->required();
  nkdv->add_option("--partition", partition)->required();
  nkdv->add_option("--class-shifts", class_shifts, "JSON map residue -> shift table");
  nkdv->callback([&]() {
    TauHandle h;
    kptau_rc rc = kptau_tau_nkdv(n, partition.c_str(), load_arg(class_shifts).c_str(), &h.ptr);
    if (rc != KPTAU_OK) {
      std::cerr << "error: " << kptau_last_error() << "\n";
      ret = rc == KPTAU_FAIL ? 1 : 2;
      return;
    }
    char* json = nullptr;
    kptau_rc rc2 = kptau_tau_to_json(h.ptr, &json);
    ret = out.emit(rc2, json);
  });

  auto* nkdv_data = app.add_subcommand("tau-nkdv-data", "n-KdV chain from eigenfunction data");
  nkdv_data->add_option("--n", n)->required();
  nkdv_data->add_option("--pi", pi_csv, "permutation of 1..n, comma-separated")->required();
  nkdv_data->add_option("--m", m_csv, "multiplicities, comma-separated")->required();
  nkdv_data->add_option("--shifts", shifts, "JSON array of shift tables, one per slot");
  nkdv_data->callback([&]() {
    ChainHandle h;
    kptau_rc rc =
        kptau_chain_nkdv_data(n, pi_csv.c_str(), m_csv.c_str(), load_arg(shifts).c_str(), &h.ptr);
    if (rc != KPTAU_OK) {
      std::cerr << "error: " << kptau_last_error() << "\n";
      ret = 2;
      return;
    }
    char* json = nullptr;
    kptau_rc rc2 = kptau_chain_to_json(h.ptr, &json);
    ret = out.emit(rc2, json);
  });

  auto* periodic = app.add_subcommand("check-n-periodic", "test n-periodicity of a partition");
  periodic->add_option("--n", n)->required();
  periodic->add_option("--partition", partition)->required();
  periodic->callback([&]() {
    char* json = nullptr;
    kptau_rc rc = kptau_check_n_periodic(n, partition.c_str(), &json);
    ret = out.emit(rc, json);
  });

  auto* enumerate = app.add_subcommand("enumerate-n-periodic", "list n-periodic partitions");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--max-weight", max_weight)->required();
  enumerate->callback([&]() {
    char* json = nullptr;
    kptau_rc rc = kptau_enumerate_n_periodic(n, max_weight, &json);
    ret = out.emit(rc, json);
  });

  auto* vmkp = app.add_subcommand("verify-mkp", "bilinear residue check for a tau pair");
  vmkp->add_option("--tau-k", tau_a, "higher-level tau (JSON or @file)")->required();
  vmkp->add_option("--tau-l", tau_b, "lower-level tau (JSON or @file)")->required();
  vmkp->add_option("--d", d_power, "power k - l >= 0");
  vmkp->add_flag("--first", first_form, "also check the inhomogeneous 1-st MKP form");
  vmkp->callback([&]() {
    TauHandle a, b;
    if ((ret = parse_tau(tau_a, a)) || (ret = parse_tau(tau_b, b))) return;
    char* json = nullptr;
    kptau_rc rc = kptau_verify_mkp(a.ptr, b.ptr, d_power, &json);
    if (first_form && rc == KPTAU_OK) {
      kptau_string_free(json);
      json = nullptr;
      rc = kptau_verify_first_mkp(b.ptr, a.ptr, &json);
    }
    ret = out.emit(rc, json);
  });

  auto* vnkdv = app.add_subcommand("verify-nkdv", "full n-KdV residue range for a chain");
  vnkdv->add_option("--n", n)->required();
  vnkdv->add_option("--chain", chain_arg, "chain JSON or @file")->required();
  vnkdv->callback([&]() {
    ChainHandle h;
    if ((ret = parse_chain(chain_arg, h))) return;
    char* json = nullptr;
    kptau_rc rc = kptau_verify_nkdv(h.ptr, n, &json);
    ret = out.emit(rc, json);
  });

  auto* vlax = app.add_subcommand("verify-lax", "operator-side checks for a tau (and a pair)");
  vlax->add_option("--tau", tau_a, "tau JSON or @file")->required();
  vlax->add_option("--tau2", tau_b, "successor tau for pair checks")
      ->each([&](const std::string&) { has_tau_b = true; });
  vlax->add_option("--flows", flows, "comma-separated flow indices");
  vlax->callback([&]() {
    TauHandle a;
    if ((ret = parse_tau(tau_a, a))) return;
    char* json = nullptr;
    kptau_rc rc = kptau_verify_lax(a.ptr, flows.c_str(), floor, &json);
    if (has_tau_b && rc == KPTAU_OK) {
      TauHandle b;
      if ((ret = parse_tau(tau_b, b))) return;
      kptau_string_free(json);
      json = nullptr;
      rc = kptau_verify_pair(a.ptr, b.ptr, flows.c_str(), floor, &json);
    }
    ret = out.emit(rc, json);
  });

  auto* vmkdv = app.add_subcommand("verify-mkdv", "factorized n-MKdV system and v-flow");
  vmkdv->add_option("--n", n)->required();
  vmkdv->add_option("--chain", chain_arg)->required();
  vmkdv->add_option("--flow", flow, "flow index t_j");
  vmkdv->callback([&]() {
    ChainHandle h;
    if ((ret = parse_chain(chain_arg, h))) return;
    char* json = nullptr;
    kptau_rc rc = kptau_verify_mkdv(h.ptr, n, flow, floor, &json);
    ret = out.emit(rc, json);
  });

  auto* crum = app.add_subcommand("crum", "Crum/Desnanot-Jacobi identity for a function list");
  crum->add_option("--funcs", funcs, "JSON array of polynomials or num/den pairs")->required();
  crum->callback([&]() {
    char* json = nullptr;
    kptau_rc rc = kptau_crum(load_arg(funcs).c_str(), &json);
    ret = out.emit(rc, json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  return ret;
}
