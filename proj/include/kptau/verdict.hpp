#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kptau/polynomial.hpp"

namespace kptau {

struct Witness {
  Monomial mono;
  Rational coeff;
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;              // one nonzero monomial on failure
  std::vector<std::array<int, 3>> checked;     // (k, l, j) triples actually verified
  std::string detail;                          // optional JSON payload (operator dumps etc.)

  static Verdict ok() { return {}; }
  static Verdict failed(Witness w) { return {false, std::move(w), {}, {}}; }
  static Verdict failed_with(std::string detail) { return {false, std::nullopt, {}, std::move(detail)}; }
};

}  // namespace kptau
