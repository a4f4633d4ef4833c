#include "quindex/subroutines.hpp"

#include <algorithm>
#include <cmath>

namespace quindex {

std::uint64_t sqrt_charge(std::size_t m, double c) {
  if (m == 0) return 0;
  long double v = std::ceil(static_cast<long double>(c) *
                            std::sqrt(static_cast<long double>(m)));
  return static_cast<std::uint64_t>(v);
}

unsigned repetition_count(std::size_t n) {
  long double lg = std::max<long double>(
      1.0L, std::log2(static_cast<long double>(std::max<std::size_t>(n, 1))));
  long double t = std::ceil(18.0L * std::log(6.0L * n * lg * lg));
  return static_cast<unsigned>(std::max<long double>(t, 1.0L));
}

namespace {

// Classical evaluation of an existence search: exact answer plus the
// material needed to draw uniform wrong answers cheaply. Whichever of
// {witnesses, non-witnesses} is smaller is materialized.
struct GroverOutcome {
  std::optional<std::size_t> exact;
  PosRange range;
  std::size_t witness_count = 0;
  std::vector<std::size_t> stored;
  bool stored_are_witnesses = true;
  std::uint64_t charge = 0;
};

GroverOutcome grover_eval(TextOracle& oracle, PosRange range,
                          const Predicate& pred, std::uint64_t q_pred) {
  if (range.empty() || range.a < 1) throw error("grover_any: empty range");
  if (q_pred < 1) throw error("grover_any: q_pred must be >= 1");
  GroverOutcome out;
  out.range = range;
  out.charge = q_pred * sqrt_charge(range.size(), oracle.sim().charge_c);

  SubroutineScope scope(oracle);
  std::vector<std::size_t> wit, non;
  for (std::size_t i = range.a; i <= range.b; ++i) {
    if (pred(i))
      wit.push_back(i);
    else
      non.push_back(i);
  }
  out.witness_count = wit.size();
  if (!wit.empty()) out.exact = wit.front();
  if (wit.size() <= non.size()) {
    out.stored = std::move(wit);
    out.stored_are_witnesses = true;
  } else {
    out.stored = std::move(non);
    out.stored_are_witnesses = false;
  }
  return out;
}

// Draws a result for one noisy repetition. Wrong answers are uniform over
// the result domain {none} + [a..b] minus the set of correct answers
// (every witness counts as correct).
std::optional<std::size_t> grover_sample(TextOracle& oracle,
                                         const GroverOutcome& out) {
  const NoiseConfig& nc = oracle.noise();
  if (nc.mode == NoiseMode::exact) return out.exact;
  std::bernoulli_distribution fail(nc.p);
  if (!fail(oracle.rng())) return out.exact;

  const std::size_t m = out.range.size();
  if (out.witness_count == 0) {
    // correct answer is "none"; wrong answers are all m positions
    std::uniform_int_distribution<std::size_t> d(out.range.a, out.range.b);
    return d(oracle.rng());
  }
  if (out.witness_count == m) {
    // every position is a witness; the only wrong answer is "none"
    return std::nullopt;
  }
  if (out.stored_are_witnesses) {
    // rejection over {none}+[a..b]; acceptance probability >= 1/2
    std::uniform_int_distribution<std::size_t> d(0, m);  // 0 encodes none
    for (;;) {
      std::size_t v = d(oracle.rng());
      if (v == 0) return std::nullopt;
      std::size_t pos = out.range.a + v - 1;
      if (!std::binary_search(out.stored.begin(), out.stored.end(), pos))
        return pos;
    }
  }
  // non-witnesses are materialized: wrong = {none} + non-witnesses
  std::uniform_int_distribution<std::size_t> d(0, out.stored.size());
  std::size_t v = d(oracle.rng());
  if (v == 0) return std::nullopt;
  return out.stored[v - 1];
}

struct MinOutcome {
  std::size_t exact = 0;
  PosRange range;
  std::size_t min_count = 0;
  std::vector<std::size_t> stored;
  bool stored_are_minimizers = true;
  std::uint64_t charge = 0;
};

MinOutcome min_eval(TextOracle& oracle, PosRange range, const KeyFn& key,
                    std::uint64_t q_key) {
  if (range.empty() || range.a < 1) throw error("durr_hoyer_min: empty range");
  if (q_key < 1) throw error("durr_hoyer_min: q_key must be >= 1");
  MinOutcome out;
  out.range = range;
  out.charge = q_key * sqrt_charge(range.size(), oracle.sim().charge_c);

  SubroutineScope scope(oracle);
  std::uint64_t best = key(range.a);
  std::vector<std::size_t> mins{range.a};
  std::vector<std::size_t> rest;
  for (std::size_t i = range.a + 1; i <= range.b; ++i) {
    std::uint64_t k = key(i);
    if (k < best) {
      rest.insert(rest.end(), mins.begin(), mins.end());
      mins.assign(1, i);
      best = k;
    } else if (k == best) {
      mins.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  out.exact = mins.front();
  out.min_count = mins.size();
  if (mins.size() <= rest.size()) {
    out.stored = std::move(mins);
    out.stored_are_minimizers = true;
  } else {
    std::sort(rest.begin(), rest.end());
    out.stored = std::move(rest);
    out.stored_are_minimizers = false;
  }
  std::sort(out.stored.begin(), out.stored.end());
  return out;
}

std::size_t min_sample(TextOracle& oracle, const MinOutcome& out) {
  const NoiseConfig& nc = oracle.noise();
  if (nc.mode == NoiseMode::exact) return out.exact;
  std::bernoulli_distribution fail(nc.p);
  if (!fail(oracle.rng())) return out.exact;

  const std::size_t m = out.range.size();
  if (out.min_count == m) return out.exact;  // no wrong answer exists
  if (out.stored_are_minimizers) {
    std::uniform_int_distribution<std::size_t> d(out.range.a, out.range.b);
    for (;;) {
      std::size_t pos = d(oracle.rng());
      if (!std::binary_search(out.stored.begin(), out.stored.end(), pos))
        return pos;
    }
  }
  std::uniform_int_distribution<std::size_t> d(0, out.stored.size() - 1);
  return out.stored[d(oracle.rng())];
}

void check_rmm_args(const TextOracle& oracle, std::size_t i, std::size_t j,
                    std::size_t len) {
  if (len < 1) throw error("rightmost_mismatch: len must be >= 1");
  if (i < len || j < len)
    throw error("rightmost_mismatch: len exceeds a prefix length");
  if (i > oracle.size() || j > oracle.size())
    throw error("rightmost_mismatch: position out of range");
}

KeyFn rmm_key(TextOracle& oracle, std::size_t i, std::size_t j,
              std::size_t len) {
  return [&oracle, i, j, len](std::size_t k) -> std::uint64_t {
    return oracle.superposed(i - k + 1) != oracle.superposed(j - k + 1)
               ? k
               : len + 1;
  };
}

std::optional<std::size_t> rmm_interpret(TextOracle& oracle, std::size_t i,
                                         std::size_t j, std::size_t k) {
  SubroutineScope scope(oracle);
  if (oracle.superposed(i - k + 1) != oracle.superposed(j - k + 1)) return k;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> grover_any(TextOracle& oracle, PosRange range,
                                      const Predicate& pred,
                                      std::uint64_t q_pred) {
  GroverOutcome out = grover_eval(oracle, range, pred, q_pred);
  auto r = grover_sample(oracle, out);
  oracle.charge_subroutine("grover", range.size(), out.charge,
                           r ? std::to_string(*r) : "none");
  return r;
}

std::size_t durr_hoyer_min(TextOracle& oracle, PosRange range,
                           const KeyFn& key, std::uint64_t q_key) {
  MinOutcome out = min_eval(oracle, range, key, q_key);
  std::size_t r = min_sample(oracle, out);
  oracle.charge_subroutine("min", range.size(), out.charge,
                           std::to_string(r));
  return r;
}

std::optional<std::size_t> rightmost_mismatch(TextOracle& oracle,
                                              std::size_t i, std::size_t j,
                                              std::size_t len) {
  check_rmm_args(oracle, i, j, len);
  MinOutcome out = min_eval(oracle, PosRange{1, len},
                            rmm_key(oracle, i, j, len), 2);
  std::size_t k = min_sample(oracle, out);
  auto r = rmm_interpret(oracle, i, j, k);
  oracle.charge_subroutine("rmm", len, out.charge,
                           r ? std::to_string(*r) : "none");
  return r;
}

std::optional<std::size_t> amplified_grover_any(TextOracle& oracle,
                                                PosRange range,
                                                const Predicate& pred,
                                                std::uint64_t q_pred,
                                                unsigned t) {
  if (t < 1) throw error("amplified_grover_any: t must be >= 1");
  GroverOutcome out = grover_eval(oracle, range, pred, q_pred);
  detail::MajorityTally<std::optional<std::size_t>> tally;
  for (unsigned rep = 0; rep < t; ++rep) {
    auto r = grover_sample(oracle, out);
    oracle.charge_subroutine("grover", range.size(), out.charge,
                             r ? std::to_string(*r) : "none");
    tally.add(r);
  }
  return tally.result();
}

std::size_t amplified_durr_hoyer_min(TextOracle& oracle, PosRange range,
                                     const KeyFn& key, std::uint64_t q_key,
                                     unsigned t) {
  if (t < 1) throw error("amplified_durr_hoyer_min: t must be >= 1");
  MinOutcome out = min_eval(oracle, range, key, q_key);
  detail::MajorityTally<std::size_t> tally;
  for (unsigned rep = 0; rep < t; ++rep) {
    std::size_t r = min_sample(oracle, out);
    oracle.charge_subroutine("min", range.size(), out.charge,
                             std::to_string(r));
    tally.add(r);
  }
  return tally.result();
}

std::optional<std::size_t> amplified_rightmost_mismatch(TextOracle& oracle,
                                                        std::size_t i,
                                                        std::size_t j,
                                                        std::size_t len,
                                                        unsigned t) {
  if (t < 1) throw error("amplified_rightmost_mismatch: t must be >= 1");
  check_rmm_args(oracle, i, j, len);
  MinOutcome out = min_eval(oracle, PosRange{1, len},
                            rmm_key(oracle, i, j, len), 2);
  detail::MajorityTally<std::optional<std::size_t>> tally;
  for (unsigned rep = 0; rep < t; ++rep) {
    std::size_t k = min_sample(oracle, out);
    auto r = rmm_interpret(oracle, i, j, k);
    oracle.charge_subroutine("rmm", len, out.charge,
                             r ? std::to_string(*r) : "none");
    tally.add(r);
  }
  return tally.result();
}

}  // namespace quindex
