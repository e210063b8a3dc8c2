#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcg/alphabet.hpp"
#include "gcg/port_table.hpp"

namespace gcg {

/// 0 is the empty suffix; 1..b name successors.
using Suffix = std::uint16_t;

/// One element v.z of V(X).S. `base` is a formatted path word for names
/// produced by rules, or an opaque identifier for hand-written graphs.
struct Atom {
  std::string base;
  Suffix suffix = 0;
  auto operator<=>(const Atom&) const = default;
};

/// A vertex name: a non-empty set of atoms, kept sorted and duplicate-free
/// so that set equality is plain vector equality.
using VertexName = std::vector<Atom>;

VertexName make_name(std::vector<Atom> atoms);
VertexName single_name(std::string base, Suffix suffix = 0);
std::string format_atom(const Atom& atom);
std::string format_name(const VertexName& name);

struct Slot {
  VertexId vertex = 0;
  Port port = 0;
  auto operator<=>(const Slot&) const = default;
};

struct NamedEdge {
  Slot a;
  Slot b;
  std::optional<Label> label;
  bool operator==(const NamedEdge&) const = default;
};

/// A concrete labelled port graph whose vertices carry explicit names. With
/// a pointer it is a pointed graph; rule outputs and unions leave it unset.
struct NamedGraph {
  AlphabetPtr alphabet;
  std::vector<VertexName> names;
  std::vector<std::optional<Label>> labels;
  std::vector<NamedEdge> edges;
  std::optional<VertexId> pointer;

  NamedGraph() = default;
  explicit NamedGraph(AlphabetPtr a) : alphabet(std::move(a)) {}

  std::size_t size() const { return names.size(); }
  VertexId add_vertex(VertexName name, std::optional<Label> label = std::nullopt);
  void add_edge(VertexId u, Port p, VertexId v, Port q, std::optional<Label> label = std::nullopt);
  std::optional<VertexId> find(const VertexName& name) const;
  /// The vertex whose name contains `atom`, if any.
  std::optional<VertexId> find_atom(const Atom& atom) const;

  /// Throws Error on slot reuse; assumes vertex indices are in range.
  PortTable to_port_table() const;

  bool operator==(const NamedGraph& other) const;
};

/// Vertices sorted by name, edges oriented and sorted; equal graphs (as sets
/// of names, edges and labels) normalize to identical values.
NamedGraph normalized(const NamedGraph& g);

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Full check of a pointed graph: names, port slots, labels, pointer and
/// connectivity.
ValidationReport validate(const NamedGraph& g);
/// Everything except the pointer and connectivity (rule outputs, unions).
ValidationReport validate_structure(const NamedGraph& g);

/// Vertices at distance <= r from the pointer, in index order.
std::vector<VertexId> ball(const NamedGraph& g, unsigned r);

/// Subgraph on ball(r + 1); keeps edges touching ball(r), vertex labels on
/// ball(r), edge labels when both ends lie in ball(r). Names are unchanged.
NamedGraph induced_disk(const NamedGraph& g, unsigned r);

/// Image under a renaming that must be total on V(g) and injective with
/// pairwise disjoint images.
NamedGraph apply_isomorphism(const NamedGraph& g, const std::map<VertexName, VertexName>& rename);

enum class Agreement { kTriviallyConsistent, kConsistent, kInconsistent };

struct ConsistencyVerdict {
  Agreement kind = Agreement::kTriviallyConsistent;
  /// Violated clause (1..4) when inconsistent.
  int clause = 0;
  std::string reason;

  bool consistent() const { return kind != Agreement::kInconsistent; }
  /// Consistent and overlapping.
  bool non_trivial() const { return kind == Agreement::kConsistent; }
};

ConsistencyVerdict consistency(const NamedGraph& g, const NamedGraph& h);

class InconsistentUnion : public Error {
 public:
  InconsistentUnion(int clause, const std::string& reason)
      : Error("inconsistent union (clause " + std::to_string(clause) + "): " + reason), clause_(clause) {}
  int clause() const { return clause_; }

 private:
  int clause_;
};

/// Throws InconsistentUnion. The pointer of `g` wins, else that of `h`.
NamedGraph graph_union(const NamedGraph& g, const NamedGraph& h);

/// Accumulates a union of many named graphs with per-merge cost
/// proportional to the operand.
class UnionBuilder {
 public:
  explicit UnionBuilder(AlphabetPtr alphabet);

  /// Merges `g` if consistent with everything so far; otherwise returns the
  /// verdict and leaves the accumulated graph untouched.
  ConsistencyVerdict merge(const NamedGraph& g);
  const NamedGraph& graph() const { return graph_; }
  NamedGraph take() { return std::move(graph_); }

 private:
  struct Peer {
    VertexId vertex;
    Port port;
    std::optional<Label> label;
    std::size_t edge;
  };
  ConsistencyVerdict check(const NamedGraph& g, std::vector<VertexId>& image) const;

  NamedGraph graph_;
  std::map<Atom, VertexId> atom_owner_;
  std::map<Slot, Peer> slot_peer_;
};

}  // namespace gcg
