#pragma once

#include <string>
#include <vector>

#include "kptau/rational.hpp"

namespace kptau {

// Integer partition: weakly decreasing positive parts; the empty partition is
// allowed and denotes the vacuum.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates

  int size() const { return static_cast<int>(parts.size()); }
  long weight() const;
  bool empty() const { return parts.empty(); }

  // "6,3,2,1"; the empty string parses to the empty partition.
  static Partition parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// The set V_lambda = {lambda_i - i + 1} united with the tail {-k, -k-1, ...}:
// `head` holds the k shifted parts (strictly decreasing), and every integer
// <= tail_start lies in V.
struct PeriodicSpectrum {
  std::vector<long> head;
  long tail_start = 0;

  bool contains(long j) const;
};

PeriodicSpectrum v_lambda(const Partition& lambda);
// True iff V_lambda - n is contained in V_lambda. Requires n >= 2.
bool is_n_periodic(const Partition& lambda, int n);
// All n-periodic partitions of weight <= max_weight (brute-force filter).
std::vector<Partition> enumerate_n_periodic(int n, int max_weight);
// All partitions of weight <= max_weight, weight-major order.
std::vector<Partition> all_partitions(int max_weight);

}  // namespace kptau
