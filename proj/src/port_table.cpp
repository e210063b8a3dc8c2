#include "gcg/port_table.hpp"

#include <deque>

namespace gcg {

VertexId PortTable::add_vertex(std::optional<Label> label) {
  labels.push_back(label);
  slots.resize(labels.size() * ports);
  return static_cast<VertexId>(labels.size() - 1);
}

void PortTable::connect(VertexId u, Port p, VertexId v, Port q, std::optional<Label> label) {
  if (u == v && p == q) throw Error("edge joins a slot to itself");
  HalfEdge& a = at(u, p);
  HalfEdge& b = at(v, q);
  if (!a.free() || !b.free()) throw Error("port reuse");
  a = HalfEdge{v, q, label};
  b = HalfEdge{u, p, label};
}

std::size_t PortTable::edge_count() const {
  std::size_t half = 0;
  for (const auto& s : slots) half += s.free() ? 0 : 1;
  return half / 2;
}

std::vector<int> PortTable::distances_from(VertexId root) const {
  std::vector<int> dist(size(), -1);
  std::deque<VertexId> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (Port p = 0; p < ports; ++p) {
      const HalfEdge& h = at(v, p);
      if (!h.free() && dist[h.target] < 0) {
        dist[h.target] = dist[v] + 1;
        queue.push_back(h.target);
      }
    }
  }
  return dist;
}

}  // namespace gcg
