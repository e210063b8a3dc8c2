#include "gcg/named_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gcg {

VertexName make_name(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

VertexName single_name(std::string base, Suffix suffix) {
  return VertexName{Atom{std::move(base), suffix}};
}

std::string format_atom(const Atom& atom) {
  if (atom.suffix == 0) return atom.base.empty() ? std::string("\xCE\xB5") : atom.base;
  return atom.base + "#" + std::to_string(atom.suffix);
}

std::string format_name(const VertexName& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (i) out += ",";
    out += format_atom(name[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

VertexId NamedGraph::add_vertex(VertexName name, std::optional<Label> label) {
  names.push_back(make_name(std::move(name)));
  labels.push_back(label);
  return static_cast<VertexId>(names.size() - 1);
}

void NamedGraph::add_edge(VertexId u, Port p, VertexId v, Port q, std::optional<Label> label) {
  edges.push_back(NamedEdge{{u, p}, {v, q}, label});
}

std::optional<VertexId> NamedGraph::find(const VertexName& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<VertexId>(it - names.begin());
}

std::optional<VertexId> NamedGraph::find_atom(const Atom& atom) const {
  for (VertexId v = 0; v < names.size(); ++v) {
    if (std::binary_search(names[v].begin(), names[v].end(), atom)) return v;
  }
  return std::nullopt;
}

PortTable NamedGraph::to_port_table() const {
  PortTable t(alphabet->port_count());
  for (const auto& l : labels) t.add_vertex(l);
  for (const auto& e : edges) t.connect(e.a.vertex, e.a.port, e.b.vertex, e.b.port, e.label);
  return t;
}

bool NamedGraph::operator==(const NamedGraph& other) const {
  return same_alphabet(alphabet, other.alphabet) && names == other.names && labels == other.labels &&
         edges == other.edges && pointer == other.pointer;
}

NamedGraph normalized(const NamedGraph& g) {
  std::vector<VertexId> order(g.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.names[a] < g.names[b]; });
  std::vector<VertexId> position(g.size());
  for (VertexId i = 0; i < order.size(); ++i) position[order[i]] = i;

  NamedGraph out(g.alphabet);
  for (VertexId old : order) out.add_vertex(g.names[old], g.labels[old]);
  for (const auto& e : g.edges) {
    Slot a{position[e.a.vertex], e.a.port};
    Slot b{position[e.b.vertex], e.b.port};
    if (b < a) std::swap(a, b);
    out.edges.push_back(NamedEdge{a, b, e.label});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const NamedEdge& x, const NamedEdge& y) {
    return std::tie(x.a, x.b, x.label) < std::tie(y.a, y.b, y.label);
  });
  if (g.pointer) out.pointer = position[*g.pointer];
  return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate_structure(const NamedGraph& g) {
  ValidationReport report;
  auto problem = [&](std::string msg) { report.problems.push_back(std::move(msg)); };
  if (!g.alphabet) {
    problem("missing alphabet");
    return report;
  }
  const Alphabet& alpha = *g.alphabet;
  if (g.labels.size() != g.names.size()) problem("label table size mismatch");

  std::map<Atom, VertexId> owner;
  for (VertexId v = 0; v < g.names.size(); ++v) {
    const VertexName& name = g.names[v];
    if (name.empty()) problem("vertex " + std::to_string(v) + " has an empty name");
    if (make_name(name) != name) problem("name of vertex " + std::to_string(v) + " is not normalized");
    for (const auto& atom : name) {
      auto [it, fresh] = owner.emplace(atom, v);
      if (!fresh && it->second != v)
        problem("names not disjoint: atom " + format_atom(atom) + " shared by two vertices");
    }
    if (v < g.labels.size() && g.labels[v] && *g.labels[v] >= alpha.sigma.size())
      problem("vertex label out of range");
  }

  std::set<Slot> used;
  for (const auto& e : g.edges) {
    bool in_range = true;
    for (const Slot& s : {e.a, e.b}) {
      if (s.vertex >= g.names.size() || s.port >= alpha.port_count()) {
        problem("edge endpoint out of range");
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (e.a == e.b) {
      problem("edge joins a slot to itself");
      continue;
    }
    for (const Slot& s : {e.a, e.b}) {
      if (!used.insert(s).second)
        problem("port reuse at " + format_name(g.names[s.vertex]) + ":" + alpha.port_symbol(s.port));
    }
    if (e.label && *e.label >= alpha.delta.size()) problem("edge label out of range");
  }
  return report;
}

ValidationReport validate(const NamedGraph& g) {
  ValidationReport report = validate_structure(g);
  if (!report.ok()) return report;
  if (!g.pointer || *g.pointer >= g.size()) {
    report.problems.push_back("pointer is not a vertex");
    return report;
  }
  const auto dist = g.to_port_table().distances_from(*g.pointer);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
    report.problems.push_back("not connected");
  return report;
}

std::vector<VertexId> ball(const NamedGraph& g, unsigned r) {
  const auto dist = g.to_port_table().distances_from(g.pointer.value());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (dist[v] >= 0 && dist[v] <= static_cast<int>(r)) out.push_back(v);
  }
  return out;
}

NamedGraph induced_disk(const NamedGraph& g, unsigned r) {
  const auto dist = g.to_port_table().distances_from(g.pointer.value());
  const int inner = static_cast<int>(r);
  auto within = [&](VertexId v, int limit) { return dist[v] >= 0 && dist[v] <= limit; };

  NamedGraph out(g.alphabet);
  std::vector<VertexId> image(g.size(), kNoVertex);
  for (VertexId v = 0; v < g.size(); ++v) {
    if (!within(v, inner + 1)) continue;
    image[v] = out.add_vertex(g.names[v], within(v, inner) ? g.labels[v] : std::nullopt);
  }
  for (const auto& e : g.edges) {
    const bool a_in = within(e.a.vertex, inner);
    const bool b_in = within(e.b.vertex, inner);
    if (!a_in && !b_in) continue;
    out.add_edge(image[e.a.vertex], e.a.port, image[e.b.vertex], e.b.port,
                 a_in && b_in ? e.label : std::nullopt);
  }
  out.pointer = image[*g.pointer];
  return out;
}

NamedGraph apply_isomorphism(const NamedGraph& g, const std::map<VertexName, VertexName>& rename) {
  NamedGraph out = g;
  std::set<Atom> seen;
  for (auto& name : out.names) {
    const auto it = rename.find(name);
    if (it == rename.end()) throw Error("renaming is not total: " + format_name(name));
    name = make_name(it->second);
    if (name.empty()) throw Error("renaming produced an empty name");
    for (const auto& atom : name) {
      if (!seen.insert(atom).second) throw Error("renaming is not injective");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

UnionBuilder::UnionBuilder(AlphabetPtr alphabet) : graph_(std::move(alphabet)) {}

ConsistencyVerdict UnionBuilder::check(const NamedGraph& g, std::vector<VertexId>& image) const {
  image.assign(g.size(), kNoVertex);
  ConsistencyVerdict verdict;
  bool overlap = false;
  auto fail = [&](int clause, std::string reason) {
    if (verdict.clause == 0 || clause < verdict.clause) {
      verdict.clause = clause;
      verdict.reason = std::move(reason);
    }
  };

  for (VertexId x = 0; x < g.size(); ++x) {
    std::set<VertexId> hits;
    for (const auto& atom : g.names[x]) {
      if (auto it = atom_owner_.find(atom); it != atom_owner_.end()) hits.insert(it->second);
    }
    if (hits.empty()) continue;
    overlap = true;
    const VertexId y = *hits.begin();
    if (hits.size() != 1 || graph_.names[y] != g.names[x]) {
      fail(1, "names " + format_name(g.names[x]) + " and " + format_name(graph_.names[y]) +
                  " intersect without being equal");
      continue;
    }
    image[x] = y;
    if (g.labels[x] && graph_.labels[y] && *g.labels[x] != *graph_.labels[y])
      fail(4, "vertex " + format_name(g.names[x]) + " carries two different states");
  }

  const Alphabet& alpha = *graph_.alphabet;
  for (const auto& e : g.edges) {
    for (int side = 0; side < 2; ++side) {
      const Slot from = side ? e.b : e.a;
      const Slot to = side ? e.a : e.b;
      if (image[from.vertex] == kNoVertex) continue;
      const auto it = slot_peer_.find(Slot{image[from.vertex], from.port});
      if (it == slot_peer_.end()) continue;
      const Peer& peer = it->second;
      if (peer.vertex != image[to.vertex] || peer.port != to.port) {
        fail(2, "slot " + format_name(g.names[from.vertex]) + ":" + alpha.port_symbol(from.port) +
                    " leads to different places");
      } else if (peer.label && e.label && *peer.label != *e.label) {
        fail(3, "edge at " + format_name(g.names[from.vertex]) + ":" + alpha.port_symbol(from.port) +
                    " carries two different states");
      }
    }
  }

  if (verdict.clause != 0) {
    verdict.kind = Agreement::kInconsistent;
  } else {
    verdict.kind = overlap ? Agreement::kConsistent : Agreement::kTriviallyConsistent;
  }
  return verdict;
}

ConsistencyVerdict UnionBuilder::merge(const NamedGraph& g) {
  std::vector<VertexId> image;
  ConsistencyVerdict verdict = check(g, image);
  if (!verdict.consistent()) return verdict;

  for (VertexId x = 0; x < g.size(); ++x) {
    if (image[x] == kNoVertex) {
      image[x] = graph_.add_vertex(g.names[x], g.labels[x]);
      for (const auto& atom : g.names[x]) atom_owner_.emplace(atom, image[x]);
    } else if (!graph_.labels[image[x]]) {
      graph_.labels[image[x]] = g.labels[x];
    }
  }
  for (const auto& e : g.edges) {
    const Slot a{image[e.a.vertex], e.a.port};
    const Slot b{image[e.b.vertex], e.b.port};
    if (auto it = slot_peer_.find(a); it != slot_peer_.end()) {
      if (!it->second.label && e.label) {
        const std::size_t index = it->second.edge;
        graph_.edges[index].label = e.label;
        slot_peer_[a].label = e.label;
        slot_peer_[b].label = e.label;
      }
      continue;
    }
    const std::size_t index = graph_.edges.size();
    graph_.edges.push_back(NamedEdge{a, b, e.label});
    slot_peer_[a] = Peer{b.vertex, b.port, e.label, index};
    slot_peer_[b] = Peer{a.vertex, a.port, e.label, index};
  }
  if (!graph_.pointer && g.pointer) graph_.pointer = image[*g.pointer];
  return verdict;
}

ConsistencyVerdict consistency(const NamedGraph& g, const NamedGraph& h) {
  UnionBuilder builder(g.alphabet);
  builder.merge(g);
  return builder.merge(h);
}

NamedGraph graph_union(const NamedGraph& g, const NamedGraph& h) {
  if (!same_alphabet(g.alphabet, h.alphabet)) throw Error("union of graphs over different alphabets");
  UnionBuilder builder(g.alphabet);
  builder.merge(g);
  const auto verdict = builder.merge(h);
  if (!verdict.consistent()) throw InconsistentUnion(verdict.clause, verdict.reason);
  return builder.take();
}

}  // namespace gcg
