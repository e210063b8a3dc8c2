#include "gcg/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "gcg/pathlang.hpp"

namespace gcg {

Gcg path(unsigned n, unsigned at) {
  if (n == 0 || at >= n) throw Error("bad path parameters");
  PortTable table(2);
  for (unsigned i = 0; i < n; ++i) table.add_vertex();
  for (unsigned i = 0; i + 1 < n; ++i) table.connect(i, 0, i + 1, 1);
  return canonical_form(make_alphabet("ab"), table, at).graph;
}

Gcg with_states(const Gcg& x, const AlphabetPtr& alphabet, const std::function<Label(const Gcg&, VertexId)>& state) {
  if (alphabet->ports != x.alphabet()->ports) throw Error("relabelling needs the same ports");
  PortTable table = x.table();
  for (VertexId v = 0; v < x.size(); ++v) table.labels[v] = state(x, v);
  for (auto& s : table.slots) s.label.reset();
  return canonical_form(alphabet, table, 0).graph;
}

Gcg with_local_states(const Gcg& x, const AlphabetPtr& alphabet) {
  if (alphabet->sigma.empty()) throw Error("no vertex states to assign");
  const auto states = alphabet->sigma.size();
  return with_states(x, alphabet, [states](const Gcg& g, VertexId v) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : g.word_string(v)) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= h >> 29;
    return static_cast<Label>(h % states);
  });
}

NamedGraph random_tree(Rng& rng, const AlphabetPtr& alphabet, std::size_t n) {
  const std::size_t k = alphabet->port_count();
  NamedGraph g(alphabet);
  PortTable used(k);
  g.add_vertex(single_name("v0"));
  used.add_vertex();
  std::vector<Slot> free_slots;
  for (Port p = 0; p < k; ++p) free_slots.push_back({0, p});
  for (std::size_t i = 1; i < n; ++i) {
    if (free_slots.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, free_slots.size() - 1);
    const std::size_t at = pick(rng);
    const Slot s = free_slots[at];
    free_slots.erase(free_slots.begin() + static_cast<std::ptrdiff_t>(at));
    const VertexId v = g.add_vertex(single_name("v" + std::to_string(i)));
    const Port q = static_cast<Port>(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
    g.add_edge(s.vertex, s.port, v, q);
    for (Port p = 0; p < k; ++p) {
      if (p != q) free_slots.push_back({v, p});
    }
  }
  g.pointer = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
  return g;
}

NamedGraph random_graph(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_vertices) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  NamedGraph g = random_tree(rng, alphabet, n);
  const std::size_t k = alphabet->port_count();

  std::vector<Slot> free_slots;
  {
    PortTable t = g.to_port_table();
    for (VertexId v = 0; v < g.size(); ++v) {
      for (Port p = 0; p < k; ++p) {
        if (t.at(v, p).free()) free_slots.push_back({v, p});
      }
    }
  }
  std::shuffle(free_slots.begin(), free_slots.end(), rng);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, free_slots.size() / 2)(rng);
  for (std::size_t i = 0; i < extra && free_slots.size() >= 2; ++i) {
    const Slot a = free_slots.back();
    free_slots.pop_back();
    const Slot b = free_slots.back();
    free_slots.pop_back();
    g.add_edge(a.vertex, a.port, b.vertex, b.port);
  }

  auto state = [&rng](std::size_t count) -> std::optional<Label> {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, count)(rng);
    if (pick == count) return std::nullopt;
    return static_cast<Label>(pick);
  };
  for (auto& l : g.labels) l = state(alphabet->sigma.size());
  for (auto& e : g.edges) e.label = state(alphabet->delta.size());
  return g;
}

NamedGraph scrambled(const NamedGraph& g, Rng& rng) {
  std::vector<VertexId> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> position(g.size());
  for (VertexId i = 0; i < order.size(); ++i) position[order[i]] = i;

  NamedGraph out(g.alphabet);
  const auto salt = std::uniform_int_distribution<unsigned>(0, 999999)(rng);
  for (VertexId i = 0; i < order.size(); ++i)
    out.add_vertex(single_name("n" + std::to_string(salt) + "_" + std::to_string(i)), g.labels[order[i]]);
  auto edges = g.edges;
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const auto& e : edges) {
    Slot a{position[e.a.vertex], e.a.port};
    Slot b{position[e.b.vertex], e.b.port};
    if (rng() & 1) std::swap(a, b);
    out.add_edge(a.vertex, a.port, b.vertex, b.port, e.label);
  }
  if (g.pointer) out.pointer = position[*g.pointer];
  return out;
}

std::vector<Fixture> standard_fixtures() {
  std::vector<Fixture> out;
  std::string family;
  auto add = [&](std::string name, Gcg g) { out.push_back({family, std::move(name), std::move(g)}); };

  family = "grids";
  for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {4, 4}})
    add("grid_" + std::to_string(n) + "x" + std::to_string(m), grid(n, m, false));
  for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {5, 5}})
    add("torus_" + std::to_string(n) + "x" + std::to_string(m), grid(n, m, true));
  family = "cycles";
  for (unsigned n = 1; n <= 12; ++n) add("cycle_" + std::to_string(n), cycle(n));
  family = "paths";
  for (unsigned n = 1; n <= 6; ++n) add("path_" + std::to_string(n), path(n, n / 2));

  family = "trees";
  Rng rng(20130611);
  const AlphabetPtr abc = make_alphabet("abc");
  for (unsigned n = 2; n <= 12; n += 2) add("tree_" + std::to_string(n), canonicalize(random_tree(rng, abc, n)));
  family = "cayley";
  add("petersen", petersen());

  const GroupTable z4{{"0", "1", "2", "3"}, {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {"1"}};
  add("cayley_z4", cayley_from_group(z4));
  const GroupTable z2z2{{"e", "x", "y", "xy"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"x", "y"}};
  add("cayley_z2z2", cayley_from_group(z2z2));
  // S3 as permutations of {0,1,2}: e, r, r2, s, sr, sr2.
  const GroupTable s3{{"e", "r", "r2", "s", "sr", "sr2"},
                      {{0, 1, 2, 3, 4, 5},
                       {1, 2, 0, 5, 3, 4},
                       {2, 0, 1, 4, 5, 3},
                       {3, 4, 5, 0, 1, 2},
                       {4, 5, 3, 2, 0, 1},
                       {5, 3, 4, 1, 2, 0}},
                      {"r", "s"}};
  add("cayley_s3", cayley_from_group(s3));

  family = "labelled";
  const AlphabetPtr ab01 = make_alphabet("ab", {"0", "1"});
  for (unsigned n = 3; n <= 8; ++n) add("labelled_cycle_" + std::to_string(n), with_local_states(cycle(n), ab01));
  for (unsigned n = 2; n <= 5; ++n) add("labelled_path_" + std::to_string(n), with_local_states(path(n, n / 2), ab01));
  const AlphabetPtr abcd01 = make_alphabet("abcd", {"0", "1"});
  add("labelled_torus_3x3", with_local_states(grid(3, 3, true), abcd01));
  add("labelled_torus_4x4", with_local_states(grid(4, 4, true), abcd01));
  return out;
}

std::vector<Gcg> fixtures_over(const std::vector<Fixture>& fixtures, const AlphabetPtr& alphabet) {
  std::vector<Gcg> out;
  for (const auto& f : fixtures) {
    if (same_alphabet(f.graph.alphabet(), alphabet)) out.push_back(f.graph);
  }
  return out;
}

std::vector<std::pair<Gcg, Gcg>> continuity_pairs(const AlphabetPtr& alphabet, unsigned n) {
  std::vector<std::pair<Gcg, Gcg>> pairs;
  auto dress = [&alphabet](Gcg g) { return alphabet->sigma.empty() ? g : with_local_states(g, alphabet); };
  if (alphabet->ports == "abcd") {
    pairs.emplace_back(dress(grid(2 * n + 3, 2 * n + 3, true)), dress(grid(2 * n + 4, 2 * n + 4, true)));
  } else if (alphabet->ports == "ab") {
    pairs.emplace_back(dress(cycle(2 * n + 3)), dress(cycle(2 * n + 4)));
    pairs.emplace_back(dress(path(2 * n + 5, n + 2)), dress(path(2 * n + 6, n + 2)));
  }
  return pairs;
}

}  // namespace gcg
