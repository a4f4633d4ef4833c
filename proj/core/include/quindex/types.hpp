#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quindex {

// Texts are sequences of non-negative integer symbols. Symbol 0 is the
// reserved sentinel, symbol 1 the reserved separator for joined texts;
// ordinary alphabets start at 2.
using Symbol = std::uint32_t;
using Text = std::vector<Symbol>;

inline constexpr Symbol kSentinel = 0;
inline constexpr Symbol kSeparator = 1;

// 1-based inclusive position range [a, b].
struct PosRange {
  std::size_t a = 1;
  std::size_t b = 0;

  std::size_t size() const { return b >= a ? b - a + 1 : 0; }
  bool empty() const { return b < a; }
};

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Text make_text(const std::string& s, bool sentinel = false) {
  Text t;
  t.reserve(s.size() + 1);
  for (unsigned char c : s) t.push_back(static_cast<Symbol>(c) + 2);
  if (sentinel) t.push_back(kSentinel);
  return t;
}

inline bool has_sentinel(const Text& t) {
  if (t.empty() || t.back() != kSentinel) return false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == kSentinel) return false;
  return true;
}

}  // namespace quindex
