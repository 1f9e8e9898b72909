#include "ctsurg/ftau.hpp"

#include <algorithm>
#include <mutex>

namespace ctsurg {

namespace {

std::mutex table_mutex;
std::vector<i64> table{0};  // table[t] = f(t); index 0 seeded

// Extends the memo up to t inclusive. Caller holds the lock.
void extend_table(i64 t) {
  for (i64 s = static_cast<i64>(table.size()); s <= t; ++s) {
    i64 best = -1;
    for (i64 d = 2;; ++d) {
      i64 weight = d * (d - 1) / 2;
      i64 rest = s - weight;
      i64 candidate = d * d + (rest > 0 ? table[rest] : 0);
      if (best < 0 || candidate < best) best = candidate;
      if (weight >= s) break;
    }
    table.push_back(best);
  }
}

}  // namespace

constexpr i64 kMaxArgument = 1'000'000;

i64 f_of_tau(i64 t) {
  if (t < 0) throw input_error("f is defined for non-negative arguments only");
  if (t > kMaxArgument) throw input_error("f arguments beyond 10^6 are not supported");
  std::lock_guard<std::mutex> lock(table_mutex);
  extend_table(t);
  return table[t];
}

std::vector<i64> f_witness(i64 t) {
  if (t < 0) throw input_error("f is defined for non-negative arguments only");
  if (t > kMaxArgument) throw input_error("f arguments beyond 10^6 are not supported");
  std::lock_guard<std::mutex> lock(table_mutex);
  extend_table(t);
  std::vector<i64> out;
  i64 s = t;
  while (s > 0) {
    for (i64 d = 2;; ++d) {
      i64 weight = d * (d - 1) / 2;
      i64 rest = s - weight;
      if (d * d + (rest > 0 ? table[rest] : 0) == table[s]) {
        out.push_back(d);
        s = std::max<i64>(rest, 0);
        break;
      }
      if (weight >= s) throw consistency_error("f witness reconstruction failed");
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

i64 f_lower_bound(i64 t) {
  if (t < 0) throw input_error("f is defined for non-negative arguments only");
  const std::uint64_t D = 8 * static_cast<std::uint64_t>(t) + 1;
  const std::uint64_t s = isqrt(D);
  i64 ceil_term;
  if (s * s == D) {
    ceil_term = static_cast<i64>((s + 2) / 2);  // ceil((s+1)/2), s odd here
  } else {
    ceil_term = static_cast<i64>((s + 1) / 2) + 1;  // sqrt irrational: strictly between
  }
  return 2 * t + ceil_term;
}

bool slice_genus_bound_check(const std::vector<i64>& d, i64 tau, i64 genus) {
  i64 lhs = 2 * tau;
  for (i64 di : d) lhs += (di < 0 ? -di : di) - di * di;
  return lhs <= 2 * genus;
}

}  // namespace ctsurg
