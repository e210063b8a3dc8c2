#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcg/alphabet.hpp"

namespace gcg {

/// One side of an edge as seen from the slot that owns it.
struct HalfEdge {
  VertexId target = kNoVertex;
  Port port = 0;
  std::optional<Label> label;

  bool free() const { return target == kNoVertex; }
  bool operator==(const HalfEdge&) const = default;
};

/// Dense adjacency: slot (v, p) lives at index v * ports + p. Both halves of
/// an edge are stored and carry the same label.
struct PortTable {
  std::size_t ports = 0;
  std::vector<HalfEdge> slots;
  std::vector<std::optional<Label>> labels;

  explicit PortTable(std::size_t port_count = 0) : ports(port_count) {}

  std::size_t size() const { return labels.size(); }
  const HalfEdge& at(VertexId v, Port p) const { return slots[v * ports + p]; }
  HalfEdge& at(VertexId v, Port p) { return slots[v * ports + p]; }

  VertexId add_vertex(std::optional<Label> label = std::nullopt);
  /// Throws Error if either slot is taken or both slots coincide.
  void connect(VertexId u, Port p, VertexId v, Port q, std::optional<Label> label = std::nullopt);
  std::size_t edge_count() const;

  /// Breadth-first distances from `root`; unreachable vertices get -1.
  std::vector<int> distances_from(VertexId root) const;

  bool operator==(const PortTable&) const = default;
};

}  // namespace gcg
