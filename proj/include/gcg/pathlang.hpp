#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcg/gcg.hpp"

namespace gcg {

/// A language of path words with an equivalence, given by oracles. The
/// equivalence is realized by class keys: u and v are equivalent iff both
/// are members and their keys coincide.
struct PathStructure {
  AlphabetPtr alphabet;
  std::function<bool(const PathWord&)> contains;
  std::function<std::optional<std::uint64_t>(const PathWord&)> class_of;
  /// Words stated explicitly (hand-built structures). They are enumerated
  /// even when their prefixes are not members, so clause (i) is exact on them.
  std::vector<PathWord> listed;

  bool equivalent(const PathWord& u, const PathWord& v) const;
};

/// The path structure of a canonical graph.
PathStructure structure_of(const Gcg& x);

/// Text format: one member word per line, `w1 == w2` for equivalences
/// (both sides become members), `#` comments, blank lines ignored.
PathStructure parse_structure(std::string_view text, const AlphabetPtr& alphabet);

/// All paths of length <= n from the pointer, in shortlex order.
std::vector<PathWord> paths_up_to(const Gcg& x, unsigned n);

/// The canonical vertex reached by `w`, if `w` is a path.
std::optional<VertexId> resolve(const Gcg& x, const PathWord& w);

struct AxiomViolation {
  std::string clause;  // "i", "ii", "iii" or "adjacency"
  std::vector<PathWord> words;
  std::string detail;
};

struct AxiomReport {
  unsigned bound = 0;
  bool completeness_i = true;
  bool completeness_ii = true;
  bool completeness_iii = true;
  bool adjacency = true;
  std::size_t words_checked = 0;
  std::vector<AxiomViolation> counterexamples;

  bool ok() const { return completeness_i && completeness_ii && completeness_iii && adjacency; }
};

/// Exhaustive check of completeness (i)-(iii) and port determinism over
/// every member word of length <= bound.
AxiomReport check_axioms(const PathStructure& s, unsigned bound);

/// The associated graph: one vertex per equivalence class, edge
/// {[u]:a, [u.ab]:b} whenever u.ab is a member. Every class must have a
/// representative shorter than `bound`.
Gcg graph_from_structure(const PathStructure& s, unsigned bound);

/// Multiplication table of a finite group; `product[i][j]` is the index of
/// elements[i] * elements[j].
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> product;
  std::vector<std::string> generators;
};

/// Cayley graph of the group. Generator k uses port 'a'+2k, its inverse
/// 'a'+2k+1; the pointer is the identity.
Gcg cayley_from_group(const GroupTable& group);

/// Petersen graph: outer 5-cycle on (a,b), spokes on c, inner pentagram on
/// (a,b); pointed at an outer vertex.
Gcg petersen();

/// n x m grid over {a,b,c,d}: {(x,y):a, (x+1,y):b} and {(x,y):c, (x,y+1):d},
/// closed into a torus when `wrap`. Pointed at (0,0).
Gcg grid(unsigned n, unsigned m, bool wrap);

/// Cycle of length n over {a,b}: {i:a, i+1:b}.
Gcg cycle(unsigned n);

}  // namespace gcg
