#include "kptau/partition.hpp"

#include <algorithm>
#include <charconv>

#include "kptau/error.hpp"

namespace kptau {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) fail(Errc::invalid_input, "partition parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1])
      fail(Errc::invalid_input, "partition parts must be weakly decreasing");
  }
}

long Partition::weight() const {
  long w = 0;
  for (int p : parts) w += p;
  return w;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int v = 0;
    auto first = text.data() + pos;
    auto last = text.data() + comma;
    while (first < last && *first == ' ') ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
      fail(Errc::invalid_input, "malformed partition '" + text + "'");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (int p : parts) {
    if (!s.empty()) s += ",";
    s += std::to_string(p);
  }
  return s;
}

bool PeriodicSpectrum::contains(long j) const {
  if (j <= tail_start) return true;
  return std::find(head.begin(), head.end(), j) != head.end();
}

PeriodicSpectrum v_lambda(const Partition& lambda) {
  PeriodicSpectrum v;
  int k = lambda.size();
  v.head.reserve(k);
  for (int i = 1; i <= k; ++i) v.head.push_back(lambda.parts[i - 1] - i + 1);
  v.tail_start = -k;
  return v;
}

bool is_n_periodic(const Partition& lambda, int n) {
  if (n < 2) fail(Errc::invalid_input, "n-periodicity wants n >= 2");
  PeriodicSpectrum v = v_lambda(lambda);
  for (long j : v.head)
    if (!v.contains(j - n)) return false;
  return true;
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  out.push_back(Partition(acc));
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> all_partitions(int max_weight) {
  std::vector<int> acc;
  std::vector<Partition> out;
  gen_partitions(std::max(max_weight, 0), std::max(max_weight, 0), acc, out);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.weight() < b.weight();
  });
  return out;
}

std::vector<Partition> enumerate_n_periodic(int n, int max_weight) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(max_weight))
    if (is_n_periodic(p, n)) out.push_back(std::move(p));
  return out;
}

}  // namespace kptau
