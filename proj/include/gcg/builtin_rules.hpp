#pragma once

#include <string>
#include <vector>

#include "gcg/local_rule.hpp"

namespace gcg {

/// Radius r; reproduces the disk with names {w.eps}.
LocalRule identity_rule(const AlphabetPtr& alphabet, unsigned radius = 0);

/// Requires ports "abcd". Every vertex splits into four offspring
/// eps, 1, 2, 3 (bottom-left, bottom-right, top-left, top-right) wired so
/// that a grid becomes a grid of twice the size. Labels are dropped.
LocalRule inflate_rule(const AlphabetPtr& alphabet);

/// Adds a fresh vertex eps.(k+1) on every free port k, attached through the
/// same port on both sides.
LocalRule sprout_rule(const AlphabetPtr& alphabet);

/// Requires ports "ab". On (a,b)-cycles swaps the ports of every edge, so
/// the configuration is unchanged while the vertex reached by k steps along
/// a is tracked to the vertex reached by k steps along b. Elsewhere it acts
/// as the identity.
LocalRule turtle_rule(const AlphabetPtr& alphabet);

/// Requires sigma {"0","1"}. Radius 1; the new state of a vertex is the XOR
/// of its neighbours' states (unlabelled counts as 0), one term per
/// occupied port. The graph is unchanged.
LocalRule xor_state_rule(const AlphabetPtr& alphabet);

/// The identity of radius 0 except on `target`, where every atom other
/// than the pointer's gets the suffix 1. Used to exhibit a failing check.
LocalRule sabotaged_identity_rule(const AlphabetPtr& alphabet, const Gcg& target);

std::vector<std::string> builtin_rule_names();
/// Throws Error for unknown names or an unsuitable alphabet.
LocalRule builtin_rule(const std::string& name, const AlphabetPtr& alphabet);

/// The alphabet a builtin rule is designed for: abcd for inflate, ab for
/// turtle and sprout, ab with sigma {0,1} for xor_state, ab otherwise.
AlphabetPtr default_alphabet(const std::string& name);

}  // namespace gcg
