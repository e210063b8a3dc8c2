#include "gcg/pathlang.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

namespace gcg {

bool PathStructure::equivalent(const PathWord& u, const PathWord& v) const {
  const auto cu = class_of(u);
  const auto cv = class_of(v);
  return cu && cv && *cu == *cv;
}

PathStructure structure_of(const Gcg& x) {
  auto graph = std::make_shared<const Gcg>(x);
  PathStructure s;
  s.alphabet = x.alphabet();
  s.contains = [graph](const PathWord& w) { return graph->resolve(w).has_value(); };
  s.class_of = [graph](const PathWord& w) -> std::optional<std::uint64_t> {
    if (auto v = graph->resolve(w)) return *v;
    return std::nullopt;
  };
  return s;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

PathStructure parse_structure(std::string_view text, const AlphabetPtr& alphabet) {
  std::map<PathWord, std::size_t> index;
  std::vector<std::size_t> parent;
  auto intern = [&](const PathWord& w) {
    auto [it, fresh] = index.emplace(w, parent.size());
    if (fresh) parent.push_back(parent.size());
    return it->second;
  };
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  intern(PathWord{});
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find("==");
    if (eq == std::string::npos) {
      intern(parse_word(line, *alphabet));
      continue;
    }
    const auto a = intern(parse_word(trim(std::string_view(line).substr(0, eq)), *alphabet));
    const auto b = intern(parse_word(trim(std::string_view(line).substr(eq + 2)), *alphabet));
    parent[root(a)] = root(b);
  }

  auto classes = std::make_shared<std::map<PathWord, std::uint64_t>>();
  PathStructure s;
  s.alphabet = alphabet;
  for (const auto& [w, i] : index) {
    (*classes)[w] = root(i);
    s.listed.push_back(w);
  }
  std::sort(s.listed.begin(), s.listed.end(), shortlex_less);
  s.contains = [classes](const PathWord& w) { return classes->count(w) > 0; };
  s.class_of = [classes](const PathWord& w) -> std::optional<std::uint64_t> {
    const auto it = classes->find(w);
    if (it == classes->end()) return std::nullopt;
    return it->second;
  };
  return s;
}

std::vector<PathWord> paths_up_to(const Gcg& x, unsigned n) {
  std::vector<PathWord> out{PathWord{}};
  std::vector<std::pair<PathWord, VertexId>> layer{{PathWord{}, 0}};
  for (unsigned len = 0; len < n; ++len) {
    std::vector<std::pair<PathWord, VertexId>> next;
    for (const auto& [w, v] : layer) {
      for (Port p = 0; p < x.alphabet()->port_count(); ++p) {
        const HalfEdge& h = x.slot(v, p);
        if (h.free()) continue;
        PathWord longer = w;
        longer.push_back(Step{p, h.port});
        next.emplace_back(std::move(longer), h.target);
      }
    }
    for (const auto& [w, v] : next) out.push_back(w);
    layer = std::move(next);
  }
  return out;
}

std::optional<VertexId> resolve(const Gcg& x, const PathWord& w) { return x.resolve(w); }

namespace {

std::vector<Step> all_steps(const Alphabet& a) {
  std::vector<Step> steps;
  for (Port p = 0; p < a.port_count(); ++p) {
    for (Port q = 0; q < a.port_count(); ++q) steps.push_back(Step{p, q});
  }
  return steps;
}

PathWord extended(const PathWord& w, Step s) {
  PathWord out = w;
  out.push_back(s);
  return out;
}

/// Members of length <= bound, shortlex ordered: one-letter extensions of
/// members plus every listed word within the bound.
std::vector<PathWord> enumerate_members(const PathStructure& s, unsigned bound) {
  const auto steps = all_steps(*s.alphabet);
  std::set<PathWord> listed;
  for (const auto& w : s.listed) {
    if (w.size() <= bound && s.contains(w)) listed.insert(w);
  }
  std::vector<PathWord> members;
  std::vector<PathWord> layer;
  if (s.contains(PathWord{})) layer.push_back(PathWord{});
  for (unsigned len = 0;; ++len) {
    for (const auto& w : listed) {
      if (w.size() == len && !std::binary_search(layer.begin(), layer.end(), w)) layer.push_back(w);
    }
    std::sort(layer.begin(), layer.end());
    members.insert(members.end(), layer.begin(), layer.end());
    if (len == bound) break;
    std::vector<PathWord> next;
    for (const auto& w : layer) {
      for (Step st : steps) {
        PathWord longer = extended(w, st);
        if (s.contains(longer)) next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return members;
}

}  // namespace

AxiomReport check_axioms(const PathStructure& s, unsigned bound) {
  if (bound < 1) throw Error("axiom bound must be at least 1");
  AxiomReport report;
  report.bound = bound;
  const Alphabet& alpha = *s.alphabet;
  const auto steps = all_steps(alpha);
  const auto members = enumerate_members(s, bound);
  report.words_checked = members.size();

  auto violate = [&](bool AxiomReport::*flag, std::string clause, std::vector<PathWord> words, std::string detail) {
    report.*flag = false;
    if (report.counterexamples.size() < 32)
      report.counterexamples.push_back({std::move(clause), std::move(words), std::move(detail)});
  };

  // (i) prefix closure; checking the immediate prefix suffices by induction.
  for (const auto& w : members) {
    if (w.empty()) continue;
    const PathWord prefix(w.begin(), w.end() - 1);
    if (!s.contains(prefix)) violate(&AxiomReport::completeness_i, "i", {w, prefix}, "prefix is not a path");
  }

  // Shortlex-first member of each class. Members are enumerated by length,
  // so every representative is the shortest word of its class seen so far.
  std::map<std::uint64_t, PathWord> rep;
  for (const auto& w : members) {
    if (auto c = s.class_of(w)) rep.emplace(*c, w);
  }

  // (ii) equivalent words extend alike. By induction on the extension and
  // transitivity, comparing every word with its class representative one
  // letter at a time is exhaustive up to the bound.
  for (const auto& u : members) {
    if (u.size() + 1 > bound) continue;
    const auto c = s.class_of(u);
    if (!c) continue;
    const PathWord& r = rep.at(*c);
    if (r == u) continue;
    for (Step st : steps) {
      const PathWord ux = extended(u, st);
      const PathWord rx = extended(r, st);
      const bool in_u = s.contains(ux);
      const bool in_r = s.contains(rx);
      if (in_u != in_r) {
        violate(&AxiomReport::completeness_ii, "ii", {u, r, {st}}, "equivalent words extend differently");
      } else if (in_u && !s.equivalent(ux, rx)) {
        violate(&AxiomReport::completeness_ii, "ii", {u, r, {st}}, "extensions are not equivalent");
      }
    }
  }

  // (iii) backtracking.
  for (const auto& u : members) {
    if (u.size() + 2 > bound) continue;
    for (Step st : steps) {
      const PathWord ux = extended(u, st);
      if (!s.contains(ux)) continue;
      const PathWord back = extended(ux, Step{st.in, st.out});
      if (!s.contains(back)) {
        violate(&AxiomReport::completeness_iii, "iii", {u, {st}}, "u.ab.ba is not a path");
      } else if (!s.equivalent(back, u)) {
        violate(&AxiomReport::completeness_iii, "iii", {u, {st}}, "u.ab.ba is not equivalent to u");
      }
    }
  }

  // Port determinism: within a class, an outgoing port has one arrival port.
  std::map<std::pair<std::uint64_t, Port>, std::pair<Port, PathWord>> arrival;
  for (const auto& w : members) {
    if (w.empty()) continue;
    const PathWord u(w.begin(), w.end() - 1);
    const auto c = s.class_of(u);
    if (!c) continue;
    const Step st = w.back();
    auto [it, fresh] = arrival.emplace(std::make_pair(*c, st.out), std::make_pair(st.in, u));
    if (!fresh && it->second.first != st.in) {
      violate(&AxiomReport::adjacency, "adjacency", {it->second.second, u, {st}},
              "port " + std::string(1, alpha.port_symbol(st.out)) + " arrives on two different ports");
    }
  }
  return report;
}

Gcg graph_from_structure(const PathStructure& s, unsigned bound) {
  const AxiomReport report = check_axioms(s, bound);
  if (!report.ok()) throw Error("structure violates the " + report.counterexamples.front().clause + " axiom");
  const auto members = enumerate_members(s, bound);
  if (members.empty() || !members.front().empty()) throw Error("structure has no empty word");

  std::map<std::uint64_t, VertexId> vertex_of;
  std::vector<PathWord> reps;
  for (const auto& w : members) {
    const auto c = s.class_of(w).value();
    if (vertex_of.emplace(c, static_cast<VertexId>(reps.size())).second) reps.push_back(w);
  }
  for (const auto& r : reps) {
    if (r.size() >= bound)
      throw Error("class of '" + format_word(r, *s.alphabet) + "' is not witnessed below the bound");
  }

  const auto steps = all_steps(*s.alphabet);
  PortTable table(s.alphabet->port_count());
  for (std::size_t i = 0; i < reps.size(); ++i) table.add_vertex();
  for (VertexId v = 0; v < reps.size(); ++v) {
    for (Step st : steps) {
      const PathWord ux = extended(reps[v], st);
      if (!s.contains(ux)) continue;
      const VertexId target = vertex_of.at(s.class_of(ux).value());
      const HalfEdge& here = table.at(v, st.out);
      if (!here.free()) {
        if (here.target != target || here.port != st.in) throw Error("structure is not port-deterministic");
        continue;
      }
      table.connect(v, st.out, target, st.in);
    }
  }
  return canonical_form(s.alphabet, table, 0).graph;
}

// ---------------------------------------------------------------------------

Gcg cayley_from_group(const GroupTable& group) {
  const std::size_t n = group.elements.size();
  if (n == 0) throw Error("empty group");
  if (group.product.size() != n) throw Error("multiplication table has wrong shape");
  for (const auto& row : group.product) {
    if (row.size() != n) throw Error("multiplication table has wrong shape");
    for (auto e : row) {
      if (e >= n) throw Error("multiplication table entry out of range");
    }
  }
  const auto& mul = group.product;

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul[e][x] == x && mul[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error("not a group: no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw Error("not a group: product is not associative");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = mul[a][b] == *identity && mul[b][a] == *identity;
    if (!has_inverse) throw Error("not a group: " + group.elements[a] + " has no inverse");
  }

  std::vector<std::size_t> gens;
  for (const auto& name : group.generators) {
    const auto it = std::find(group.elements.begin(), group.elements.end(), name);
    if (it == group.elements.end()) throw Error("unknown generator " + name);
    gens.push_back(static_cast<std::size_t>(it - group.elements.begin()));
  }
  if (gens.empty() || gens.size() > 13) throw Error("need between 1 and 13 generators");

  std::string ports;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    ports.push_back(static_cast<char>('a' + 2 * k));
    ports.push_back(static_cast<char>('a' + 2 * k + 1));
  }
  const AlphabetPtr alphabet = make_alphabet(ports);

  PortTable table(ports.size());
  for (std::size_t i = 0; i < n; ++i) table.add_vertex();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      table.connect(static_cast<VertexId>(x), static_cast<Port>(2 * k), static_cast<VertexId>(mul[x][gens[k]]),
                    static_cast<Port>(2 * k + 1));
    }
  }
  Rooted r = canonical_form(alphabet, table, static_cast<VertexId>(*identity));
  if (r.graph.size() != n) throw Error("generators do not generate the group");
  return std::move(r.graph);
}

Gcg petersen() {
  const AlphabetPtr alphabet = make_alphabet("abc");
  PortTable table(3);
  for (int i = 0; i < 10; ++i) table.add_vertex();
  for (VertexId i = 0; i < 5; ++i) {
    table.connect(i, 0, (i + 1) % 5, 1);
    table.connect(i, 2, 5 + i, 2);
    table.connect(5 + i, 0, 5 + (i + 2) % 5, 1);
  }
  return canonical_form(alphabet, table, 0).graph;
}

Gcg grid(unsigned n, unsigned m, bool wrap) {
  if (n == 0 || m == 0) throw Error("grid dimensions must be positive");
  const AlphabetPtr alphabet = make_alphabet("abcd");
  PortTable table(4);
  for (unsigned i = 0; i < n * m; ++i) table.add_vertex();
  auto id = [n](unsigned x, unsigned y) { return static_cast<VertexId>(y * n + x); };
  for (unsigned y = 0; y < m; ++y) {
    for (unsigned x = 0; x < n; ++x) {
      if (x + 1 < n || wrap) table.connect(id(x, y), 0, id((x + 1) % n, y), 1);
      if (y + 1 < m || wrap) table.connect(id(x, y), 2, id(x, (y + 1) % m), 3);
    }
  }
  return canonical_form(alphabet, table, 0).graph;
}

Gcg cycle(unsigned n) {
  if (n == 0) throw Error("cycle length must be positive");
  const AlphabetPtr alphabet = make_alphabet("ab");
  PortTable table(2);
  for (unsigned i = 0; i < n; ++i) table.add_vertex();
  for (unsigned i = 0; i < n; ++i) table.connect(i, 0, (i + 1) % n, 1);
  return canonical_form(alphabet, table, 0).graph;
}

}  // namespace gcg
