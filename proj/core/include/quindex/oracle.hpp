#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "quindex/ledger.hpp"
#include "quindex/types.hpp"

namespace quindex {

enum class NoiseMode { exact, bernoulli };

// Simulated-subroutine failure model. In exact mode every subroutine
// returns the true answer; in bernoulli mode each invocation independently
// returns a uniformly random wrong answer with probability p.
struct NoiseConfig {
  NoiseMode mode = NoiseMode::exact;
  double p = 0.0;  // failure probability, in [0, 1/3]
  std::uint64_t rng_seed = 0;
};

struct SimConfig {
  double charge_c = 1.0;  // multiplier inside the sqrt-charge formula
};

// The hidden input string behind a counted query interface. Position-wise
// reads via read() cost one query each. Simulated quantum subroutines scan
// symbols through a SubroutineScope without per-symbol charges; the
// sqrt-formula charge is applied by the subroutine instead. Any other
// access path to the symbols does not exist, and superposed() outside an
// active scope throws (the read-tripwire).
class TextOracle {
 public:
  TextOracle() = default;

  explicit TextOracle(Text symbols, NoiseConfig noise = {}, SimConfig sim = {})
      : symbols_(std::move(symbols)),
        n_(symbols_.size()),
        noise_(noise),
        sim_(sim),
        rng_(noise.rng_seed) {}

  // Lazily evaluated oracle: symbols come from a generator function.
  TextOracle(std::size_t n, std::function<Symbol(std::size_t)> gen,
             NoiseConfig noise = {}, SimConfig sim = {})
      : gen_(std::move(gen)), n_(n), noise_(noise), sim_(sim),
        rng_(noise.rng_seed) {}

  std::size_t size() const { return n_; }

  // Classical read of T[i], 1-based. Charges exactly one query.
  Symbol read(std::size_t i) {
    check_range(i);
    ledger_.charge(phase_, 1);
    if (trace_) trace_({phase_, "read", 1, 1, std::to_string(i)});
    return at(i);
  }

  // Uncharged access for predicate evaluation inside a simulated
  // subroutine. Throws unless a SubroutineScope is active.
  Symbol superposed(std::size_t i) const {
    if (scope_depth_ == 0)
      throw error("superposed access outside a quantum subroutine");
    check_range(i);
    return at(i);
  }

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

  const NoiseConfig& noise() const { return noise_; }
  const SimConfig& sim() const { return sim_; }

  void set_phase(std::string phase) { phase_ = std::move(phase); }
  const std::string& phase() const { return phase_; }

  void set_trace(TraceSink sink) { trace_ = std::move(sink); }

  std::mt19937_64& rng() { return rng_; }

 private:
  friend class SubroutineScope;
  friend class PhaseScope;
  friend TextOracle join_oracles(const TextOracle&, const TextOracle&);

  Symbol at(std::size_t i) const {
    return gen_ ? gen_(i) : symbols_[i - 1];
  }

  void check_range(std::size_t i) const {
    if (i < 1 || i > n_)
      throw error("oracle position " + std::to_string(i) +
                  " out of range 1.." + std::to_string(n_));
  }

  void charge_subroutine(const std::string& kind, std::size_t range_size,
                         std::uint64_t amount, const std::string& outcome) {
    ledger_.charge(phase_, amount);
    if (trace_) trace_({phase_, kind, range_size, amount, outcome});
  }

  Text symbols_;
  std::function<Symbol(std::size_t)> gen_;
  std::size_t n_ = 0;
  NoiseConfig noise_;
  SimConfig sim_;
  QueryLedger ledger_;
  std::string phase_ = "default";
  TraceSink trace_;
  std::mt19937_64 rng_{0};
  mutable int scope_depth_ = 0;
};

// RAII guard enabling superposition access while a simulated subroutine
// evaluates its predicate.
class SubroutineScope {
 public:
  explicit SubroutineScope(const TextOracle& o) : o_(o) { ++o_.scope_depth_; }
  ~SubroutineScope() { --o_.scope_depth_; }
  SubroutineScope(const SubroutineScope&) = delete;
  SubroutineScope& operator=(const SubroutineScope&) = delete;

 private:
  const TextOracle& o_;
};

class PhaseScope {
 public:
  PhaseScope(TextOracle& o, std::string phase) : o_(o), saved_(o.phase()) {
    o_.set_phase(std::move(phase));
  }
  ~PhaseScope() { o_.set_phase(saved_); }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  TextOracle& o_;
  std::string saved_;
};

// S1 . separator . S2 . sentinel as one oracle. Symbol composition is
// constant-time per position; the joined ledger is fresh.
TextOracle join_oracles(const TextOracle& s1, const TextOracle& s2);

}  // namespace quindex
