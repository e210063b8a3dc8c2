#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gcg/alphabet.hpp"

namespace gcg {

/// One letter of the path alphabet: leave through `out`, arrive through `in`.
struct Step {
  Port out = 0;
  Port in = 0;
  auto operator<=>(const Step&) const = default;
};

/// A word over pi^2. The empty word is the pointer.
using PathWord = std::vector<Step>;

/// Length first, then lexicographic on (out, in) under the alphabet order.
bool shortlex_less(const PathWord& a, const PathWord& b);

PathWord concat(PathWord a, const PathWord& b);

/// "ab.ba"; the empty word prints as "".
std::string format_word(const PathWord& w, const Alphabet& alphabet);

/// Accepts "", "e" or "ε" for the empty word, otherwise dot-separated port
/// pairs. Throws Error on unknown ports or malformed pairs.
PathWord parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace gcg
