#include "gcg/builtin_rules.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace gcg {

namespace {

void require_ports(const AlphabetPtr& alphabet, const std::string& ports, const std::string& rule) {
  if (alphabet->ports != ports) throw Error("rule " + rule + " needs ports '" + ports + "'");
}

/// The disk as a named graph, names {w.eps}, labels as in the disk.
NamedGraph copy_disk(const Gcg& d) {
  NamedGraph out = d.to_named();
  out.pointer.reset();
  return out;
}

/// eps, its neighbours and the edges at eps; only eps keeps its label.
NamedGraph star(const Gcg& d) {
  NamedGraph out(d.alphabet());
  out.add_vertex(single_name(""), d.label(0));
  const auto& alpha = *d.alphabet();
  std::vector<VertexId> image(d.size(), kNoVertex);
  image[0] = 0;
  for (Port p = 0; p < alpha.port_count(); ++p) {
    const HalfEdge& h = d.slot(0, p);
    if (h.free()) continue;
    if (image[h.target] == kNoVertex) image[h.target] = out.add_vertex(single_name(d.word_string(h.target)));
    if (h.target == 0 && h.port < p) continue;  // loop already added from its other end
    out.add_edge(0, p, image[h.target], h.port, h.label);
  }
  return out;
}

}  // namespace

LocalRule identity_rule(const AlphabetPtr& alphabet, unsigned radius) {
  LocalRule f;
  f.name = "identity";
  f.alphabet = alphabet;
  f.radius = radius;
  f.suffix_bound = 0;
  f.output_bound = 0;
  f.inflation = 1;
  f.eval = copy_disk;
  return f;
}

LocalRule inflate_rule(const AlphabetPtr& alphabet) {
  require_ports(alphabet, "abcd", "inflate");
  LocalRule f;
  f.name = "inflate";
  f.alphabet = alphabet;
  f.radius = 0;
  f.suffix_bound = 3;
  f.output_bound = 1;
  f.inflation = 2;
  f.eval = [alphabet](const Gcg& d) {
    // Offspring on each side, in matching order: a (right), b (left),
    // c (top), d (bottom).
    static constexpr std::array<std::array<Suffix, 2>, 4> side{{{1, 3}, {0, 2}, {2, 3}, {0, 1}}};
    NamedGraph out(alphabet);
    auto vertex = [&out](const std::string& base, Suffix z) {
      const VertexName name = single_name(base, z);
      if (auto v = out.find(name)) return *v;
      return out.add_vertex(name);
    };
    std::set<std::pair<Slot, Slot>> edges;
    auto edge = [&](VertexId u, Port p, VertexId v, Port q) {
      Slot a{u, p}, b{v, q};
      if (b < a) std::swap(a, b);
      if (edges.insert({a, b}).second) out.add_edge(a.vertex, a.port, b.vertex, b.port);
    };

    for (Suffix z = 0; z < 4; ++z) vertex("", z);
    edge(0, 0, 1, 1);
    edge(0, 2, 2, 3);
    edge(1, 2, 3, 3);
    edge(2, 0, 3, 1);
    for (Port p = 0; p < 4; ++p) {
      const HalfEdge& h = d.slot(0, p);
      if (h.free()) continue;
      const std::string neighbour = d.word_string(h.target);
      for (int i = 0; i < 2; ++i) {
        const VertexId mine = vertex("", side[p][i]);
        const VertexId theirs = vertex(neighbour, side[h.port][i]);
        edge(mine, p, theirs, h.port);
      }
    }
    return out;
  };
  return f;
}

LocalRule sprout_rule(const AlphabetPtr& alphabet) {
  LocalRule f;
  f.name = "sprout";
  f.alphabet = alphabet;
  f.radius = 0;
  f.suffix_bound = static_cast<Suffix>(alphabet->port_count());
  f.output_bound = 1;
  f.inflation = 1;
  f.eval = [](const Gcg& d) {
    NamedGraph out = star(d);
    for (Port p = 0; p < d.alphabet()->port_count(); ++p) {
      if (!d.slot(0, p).free()) continue;
      const VertexId leaf = out.add_vertex(single_name("", static_cast<Suffix>(p + 1)));
      out.add_edge(0, p, leaf, p);
    }
    return out;
  };
  return f;
}

LocalRule turtle_rule(const AlphabetPtr& alphabet) {
  require_ports(alphabet, "ab", "turtle");
  LocalRule f;
  f.name = "turtle";
  f.alphabet = alphabet;
  f.radius = 0;
  f.suffix_bound = 0;
  f.output_bound = 0;
  f.inflation = 1;
  f.eval = [](const Gcg& d) {
    const HalfEdge& a = d.slot(0, 0);
    const HalfEdge& b = d.slot(0, 1);
    const bool on_cycle = !a.free() && !b.free() && a.port == 1 && b.port == 0;
    if (!on_cycle) return copy_disk(d);
    NamedGraph out(d.alphabet());
    out.add_vertex(single_name(""), d.label(0));
    if (a.target == 0) {
      out.add_edge(0, 0, 0, 1, a.label);
      return out;
    }
    auto node = [&](VertexId t) {
      const VertexName name = single_name(d.word_string(t));
      if (auto v = out.find(name)) return *v;
      return out.add_vertex(name);
    };
    out.add_edge(0, 1, node(a.target), 0, a.label);
    out.add_edge(0, 0, node(b.target), 1, b.label);
    return out;
  };
  return f;
}

LocalRule xor_state_rule(const AlphabetPtr& alphabet) {
  if (alphabet->sigma != std::vector<std::string>{"0", "1"}) throw Error("rule xor_state needs sigma {0,1}");
  LocalRule f;
  f.name = "xor_state";
  f.alphabet = alphabet;
  f.radius = 1;
  f.suffix_bound = 0;
  f.output_bound = 0;
  f.inflation = 1;
  f.eval = [](const Gcg& d) {
    NamedGraph out = star(d);
    Label bit = 0;
    for (Port p = 0; p < d.alphabet()->port_count(); ++p) {
      const HalfEdge& h = d.slot(0, p);
      if (!h.free()) bit ^= d.label(h.target).value_or(0);
    }
    out.labels[0] = bit;
    return out;
  };
  return f;
}

LocalRule sabotaged_identity_rule(const AlphabetPtr& alphabet, const Gcg& target) {
  LocalRule f = identity_rule(alphabet, 0);
  f.name = "sabotaged_identity";
  f.suffix_bound = 1;
  f.eval = [target](const Gcg& d) {
    NamedGraph out = copy_disk(d);
    if (d == target) {
      for (auto& name : out.names) {
        for (auto& atom : name) {
          if (!atom.base.empty()) atom.suffix = 1;
        }
      }
    }
    return out;
  };
  return f;
}

std::vector<std::string> builtin_rule_names() { return {"identity", "inflate", "turtle", "sprout", "xor_state"}; }

LocalRule builtin_rule(const std::string& name, const AlphabetPtr& alphabet) {
  if (name == "identity") return identity_rule(alphabet);
  if (name == "inflate") return inflate_rule(alphabet);
  if (name == "turtle") return turtle_rule(alphabet);
  if (name == "sprout") return sprout_rule(alphabet);
  if (name == "xor_state") return xor_state_rule(alphabet);
  throw Error("unknown rule '" + name + "'");
}

AlphabetPtr default_alphabet(const std::string& name) {
  if (name == "inflate") return make_alphabet("abcd");
  if (name == "xor_state") return make_alphabet("ab", {"0", "1"});
  return make_alphabet("ab");
}

}  // namespace gcg
