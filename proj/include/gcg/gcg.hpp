#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcg/alphabet.hpp"
#include "gcg/named_graph.hpp"
#include "gcg/path_word.hpp"
#include "gcg/port_table.hpp"

namespace gcg {

struct Rooted;

/// A generalized Cayley graph: the canonical representative of a pointed
/// labelled port graph modulo pointer-preserving isomorphism.
///
/// Vertices are numbered in breadth-first order from the pointer (vertex 0),
/// expanding ports in alphabet order. That order is also the shortlex order
/// of the vertices' minimal path words, so two canonical forms are equal iff
/// their port tables and labels coincide.
class Gcg {
 public:
  Gcg() = default;

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return table_.size(); }
  std::size_t edge_count() const { return table_.edge_count(); }
  const PortTable& table() const { return table_; }

  const HalfEdge& slot(VertexId v, Port p) const { return table_.at(v, p); }
  std::optional<Label> label(VertexId v) const { return table_.labels[v]; }

  /// Minimal path word naming `v`.
  const PathWord& word(VertexId v) const { return words_[v]; }
  std::string word_string(VertexId v) const { return format_word(words_[v], *alphabet_); }
  /// Graph distance from the pointer.
  unsigned distance(VertexId v) const { return static_cast<unsigned>(words_[v].size()); }
  unsigned eccentricity() const;

  /// Follows `w` from `from`; nullopt when a step is not available.
  std::optional<VertexId> walk(VertexId from, const PathWord& w) const;
  std::optional<VertexId> resolve(const PathWord& w) const { return walk(0, w); }
  /// Parses then resolves; throws Error if the word is not a path.
  VertexId vertex(std::string_view word) const;

  Gcg without_labels() const;
  /// Pointed named graph with names {(word, eps)}.
  NamedGraph to_named() const;

  /// Deterministic text form, suitable for hashing and byte comparison.
  std::string serialize() const;
  std::size_t hash() const;

  bool operator==(const Gcg& other) const;

 private:
  friend Rooted canonical_form(const AlphabetPtr&, const PortTable&, VertexId, std::optional<unsigned>);

  AlphabetPtr alphabet_;
  PortTable table_;
  std::vector<PathWord> words_;
};

struct GcgHash {
  std::size_t operator()(const Gcg& g) const { return g.hash(); }
};

/// A canonical form plus, for each of its vertices, the vertex of the source
/// it came from.
struct Rooted {
  Gcg graph;
  std::vector<VertexId> origin;
};

/// Canonical form of `table` pointed at `root`. With `disk_radius = r`, the
/// disk of radius r around the root: ball r+1, edges touching ball r, labels
/// restricted to ball r. Without it, unreachable vertices are dropped.
Rooted canonical_form(const AlphabetPtr& alphabet, const PortTable& table, VertexId root,
                      std::optional<unsigned> disk_radius = std::nullopt);

/// Throws Error if `g` is not a valid pointed graph.
Gcg canonicalize(const NamedGraph& g);
/// As canonicalize, with origin[i] the index in `g` of canonical vertex i.
Rooted canonicalize_rooted(const NamedGraph& g);

/// Disk of radius r of X shifted by u, with origins in X.
Rooted local_disk(const Gcg& x, VertexId u, unsigned r);
Gcg disk(const Gcg& x, unsigned r);

/// X shifted by u, with origins in X.
Rooted reroot(const Gcg& x, VertexId u);
Gcg shift(const Gcg& x, VertexId u);

/// u.v: the vertex of X reached from u along v, where v names a vertex of
/// shift(x, u) or of one of its disks.
VertexId concat(const Gcg& x, VertexId u, const PathWord& v);
/// The word, in shift(x, u), of the old pointer.
PathWord inverse(const Gcg& x, VertexId u);

/// Smallest r + 1 such that u belongs to disk(x, r).
unsigned vertex_size(const Gcg& x, VertexId u);

/// u.G: rewrites every atom (w, z) of `g`, where w names a vertex of
/// shift(x, u), into (u.w, z) named over V(x).
NamedGraph prefix_graph(const Gcg& x, VertexId u, const NamedGraph& g);

}  // namespace gcg
