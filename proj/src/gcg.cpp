#include "gcg/gcg.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace gcg {

unsigned Gcg::eccentricity() const {
  return words_.empty() ? 0 : static_cast<unsigned>(words_.back().size());
}

std::optional<VertexId> Gcg::walk(VertexId from, const PathWord& w) const {
  VertexId at = from;
  for (const Step& s : w) {
    if (s.out >= table_.ports) return std::nullopt;
    const HalfEdge& h = table_.at(at, s.out);
    if (h.free() || h.port != s.in) return std::nullopt;
    at = h.target;
  }
  return at;
}

VertexId Gcg::vertex(std::string_view word) const {
  const auto v = resolve(parse_word(word, *alphabet_));
  if (!v) throw Error("'" + std::string(word) + "' is not a path of the graph");
  return *v;
}

Gcg Gcg::without_labels() const {
  Gcg out = *this;
  for (auto& l : out.table_.labels) l.reset();
  for (auto& s : out.table_.slots) s.label.reset();
  return out;
}

NamedGraph Gcg::to_named() const {
  NamedGraph g(alphabet_);
  for (VertexId v = 0; v < size(); ++v) g.add_vertex(single_name(word_string(v)), label(v));
  for (VertexId v = 0; v < size(); ++v) {
    for (Port p = 0; p < table_.ports; ++p) {
      const HalfEdge& h = slot(v, p);
      if (h.free()) continue;
      if (std::make_pair(v, p) < std::make_pair(h.target, h.port)) g.add_edge(v, p, h.target, h.port, h.label);
    }
  }
  g.pointer = 0;
  return g;
}

std::string Gcg::serialize() const {
  std::ostringstream os;
  const Alphabet& a = *alphabet_;
  os << a.ports << '|';
  for (const auto& s : a.sigma) os << s << ',';
  os << '|';
  for (const auto& s : a.delta) os << s << ',';
  os << '|' << size() << '\n';
  for (VertexId v = 0; v < size(); ++v) {
    os << v;
    if (auto l = label(v)) os << '=' << *l;
    for (Port p = 0; p < table_.ports; ++p) {
      const HalfEdge& h = slot(v, p);
      os << ' ';
      if (h.free()) {
        os << '-';
      } else {
        os << h.target << ':' << int(h.port);
        if (h.label) os << '=' << *h.label;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::size_t Gcg::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(size());
  mix(std::hash<std::string>{}(alphabet_->ports));
  for (const auto& l : table_.labels) mix(l ? *l + 1 : 0);
  for (const auto& s : table_.slots) {
    mix(s.target);
    mix(s.port);
    mix(s.label ? *s.label + 1 : 0);
  }
  return static_cast<std::size_t>(h);
}

bool Gcg::operator==(const Gcg& other) const {
  return same_alphabet(alphabet_, other.alphabet_) && table_ == other.table_;
}

// ---------------------------------------------------------------------------

Rooted canonical_form(const AlphabetPtr& alphabet, const PortTable& table, VertexId root,
                      std::optional<unsigned> disk_radius) {
  const std::size_t n = table.size();
  const std::size_t k = table.ports;
  const int inner = disk_radius ? static_cast<int>(*disk_radius) : std::numeric_limits<int>::max() - 1;

  std::vector<int> dist(n, -1);
  std::vector<VertexId> index(n, kNoVertex);
  Rooted out;
  std::vector<VertexId>& order = out.origin;
  std::vector<PathWord> words;

  dist[root] = 0;
  index[root] = 0;
  order.push_back(root);
  words.emplace_back();
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    if (dist[v] > inner) continue;
    for (Port p = 0; p < k; ++p) {
      const HalfEdge& h = table.at(v, p);
      if (h.free() || dist[h.target] >= 0) continue;
      dist[h.target] = dist[v] + 1;
      index[h.target] = static_cast<VertexId>(order.size());
      order.push_back(h.target);
      PathWord w = words[head];
      w.push_back(Step{p, h.port});
      words.push_back(std::move(w));
    }
  }

  Gcg& g = out.graph;
  g.alphabet_ = alphabet;
  g.table_ = PortTable(k);
  for (VertexId old : order) g.table_.add_vertex(dist[old] <= inner ? table.labels[old] : std::nullopt);
  for (VertexId i = 0; i < order.size(); ++i) {
    const VertexId old = order[i];
    for (Port p = 0; p < k; ++p) {
      const HalfEdge& h = table.at(old, p);
      if (h.free() || index[h.target] == kNoVertex) continue;
      const int near = std::min(dist[old], dist[h.target]);
      if (near > inner) continue;
      const bool both_inside = std::max(dist[old], dist[h.target]) <= inner;
      g.table_.at(i, p) = HalfEdge{index[h.target], h.port, both_inside ? h.label : std::nullopt};
    }
  }
  g.words_ = std::move(words);
  return out;
}

Rooted canonicalize_rooted(const NamedGraph& g) {
  const ValidationReport report = validate(g);
  if (!report.ok()) throw Error("invalid graph: " + report.problems.front());
  return canonical_form(g.alphabet, g.to_port_table(), *g.pointer);
}

Gcg canonicalize(const NamedGraph& g) { return canonicalize_rooted(g).graph; }

Rooted local_disk(const Gcg& x, VertexId u, unsigned r) {
  if (u >= x.size()) throw Error("unknown vertex");
  return canonical_form(x.alphabet(), x.table(), u, r);
}

Gcg disk(const Gcg& x, unsigned r) { return local_disk(x, 0, r).graph; }

Rooted reroot(const Gcg& x, VertexId u) {
  if (u >= x.size()) throw Error("unknown vertex");
  return canonical_form(x.alphabet(), x.table(), u);
}

Gcg shift(const Gcg& x, VertexId u) { return reroot(x, u).graph; }

VertexId concat(const Gcg& x, VertexId u, const PathWord& v) {
  if (u >= x.size()) throw Error("unknown vertex");
  const auto target = x.walk(u, v);
  if (!target) throw Error("'" + format_word(v, *x.alphabet()) + "' is not a vertex of the shifted graph");
  return *target;
}

PathWord inverse(const Gcg& x, VertexId u) {
  const Rooted shifted = reroot(x, u);
  const auto it = std::find(shifted.origin.begin(), shifted.origin.end(), VertexId{0});
  return shifted.graph.word(static_cast<VertexId>(it - shifted.origin.begin()));
}

unsigned vertex_size(const Gcg& x, VertexId u) {
  if (u >= x.size()) throw Error("unknown vertex");
  return std::max(1u, x.distance(u));
}

NamedGraph prefix_graph(const Gcg& x, VertexId u, const NamedGraph& g) {
  if (u >= x.size()) throw Error("unknown vertex");
  NamedGraph out = g;
  for (auto& name : out.names) {
    for (auto& atom : name) {
      const PathWord w = parse_word(atom.base, *x.alphabet());
      const auto target = x.walk(u, w);
      if (!target) throw Error("atom '" + format_atom(atom) + "' does not resolve");
      atom.base = x.word_string(*target);
    }
    name = make_name(std::move(name));
  }
  return out;
}

}  // namespace gcg
