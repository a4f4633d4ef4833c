#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace quindex {

// Per-phase oracle query accounting. Counters only ever grow; the total
// always equals the sum over phases.
class QueryLedger {
 public:
  void charge(const std::string& phase, std::uint64_t amount) {
    counters_[phase] += amount;
    total_ += amount;
  }

  std::uint64_t total() const { return total_; }

  std::uint64_t phase(const std::string& label) const {
    auto it = counters_.find(label);
    return it == counters_.end() ? 0 : it->second;
  }

  const std::map<std::string, std::uint64_t>& counters() const {
    return counters_;
  }

  void reset() {
    counters_.clear();
    total_ = 0;
  }

 private:
  std::map<std::string, std::uint64_t> counters_;
  std::uint64_t total_ = 0;
};

// One line per accounted event; consumed by trace files and tests.
struct TraceEvent {
  std::string phase;
  std::string kind;       // "read", "grover", "min", "rmm"
  std::size_t range_size = 0;
  std::uint64_t charge = 0;
  std::string outcome;
};

using TraceSink = std::function<void(const TraceEvent&)>;

}  // namespace quindex
