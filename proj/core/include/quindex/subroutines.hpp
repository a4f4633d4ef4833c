#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quindex/oracle.hpp"

namespace quindex {

using Predicate = std::function<bool(std::size_t)>;
using KeyFn = std::function<std::uint64_t(std::size_t)>;

// ceil(c * sqrt(m)), the per-unit charge of a simulated quantum subroutine
// over a range of m positions.
std::uint64_t sqrt_charge(std::size_t m, double c);

// Grover-style existence search over [range.a, range.b]. Evaluated by a
// classical scan, charged q_pred * ceil(c*sqrt(m)). Exact mode returns the
// smallest witness, or nullopt if none exists.
std::optional<std::size_t> grover_any(TextOracle& oracle, PosRange range,
                                      const Predicate& pred,
                                      std::uint64_t q_pred);

// Durr-Hoyer minimum finding; ties broken toward the smallest index in
// exact mode. Charged q_key * ceil(c*sqrt(m)).
std::size_t durr_hoyer_min(TextOracle& oracle, PosRange range,
                           const KeyFn& key, std::uint64_t q_key);

// Smallest k in [1..len] with T[i-k+1] != T[j-k+1], or nullopt when the
// two length-len substrings ending at i and j are equal. Runs minimum
// finding over the mismatch-position key; each key evaluation reads two
// symbols, so the charge is 2 * ceil(c*sqrt(len)).
std::optional<std::size_t> rightmost_mismatch(TextOracle& oracle,
                                              std::size_t i, std::size_t j,
                                              std::size_t len);

// t = ceil(18 ln(6 n log2^2 n)), the repetition count that drives the
// whole-run failure probability below 1/3.
unsigned repetition_count(std::size_t n);

// Repeated versions of the subroutines above: one classical evaluation,
// t independent noise draws, t charges. Ledger effect and RNG stream are
// identical to calling the single-shot version t times.
std::optional<std::size_t> amplified_grover_any(TextOracle& oracle,
                                                PosRange range,
                                                const Predicate& pred,
                                                std::uint64_t q_pred,
                                                unsigned t);
std::size_t amplified_durr_hoyer_min(TextOracle& oracle, PosRange range,
                                     const KeyFn& key, std::uint64_t q_key,
                                     unsigned t);
std::optional<std::size_t> amplified_rightmost_mismatch(TextOracle& oracle,
                                                        std::size_t i,
                                                        std::size_t j,
                                                        std::size_t len,
                                                        unsigned t);

namespace detail {

template <typename T>
class MajorityTally {
 public:
  void add(const T& v) {
    for (auto& e : entries_) {
      if (e.first == v) {
        ++e.second;
        return;
      }
    }
    entries_.emplace_back(v, 1u);
  }

  // Majority if one exists, else the first-seen most frequent value.
  const T& result() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < entries_.size(); ++k)
      if (entries_[k].second > entries_[best].second) best = k;
    return entries_[best].first;
  }

  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<T, unsigned>> entries_;
};

}  // namespace detail

// Runs the callable t times and returns the majority result (or any most
// frequent result when there is no majority). Cost is whatever the t
// invocations charge.
template <typename Call>
auto amplify(Call&& call, unsigned t) {
  if (t < 1) throw error("amplify: repetition count must be >= 1");
  using R = decltype(call());
  detail::MajorityTally<R> tally;
  for (unsigned k = 0; k < t; ++k) tally.add(call());
  return tally.result();
}

}  // namespace quindex
