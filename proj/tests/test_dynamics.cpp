#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcg/builtin_rules.hpp"
#include "gcg/dynamics.hpp"
#include "gcg/enumerate.hpp"
#include "gcg/fixtures.hpp"
#include "gcg/metric.hpp"
#include "gcg/pathlang.hpp"

using namespace gcg;

namespace {

std::vector<Gcg> graphs_over(const AlphabetPtr& a) { return fixtures_over(standard_fixtures(), a); }

bool same_evolution(const Gcg& x, const Evolution& a, const Evolution& b) {
  return a.image == b.image && tracker_words(x, a) == tracker_words(x, b);
}

}  // namespace

TEST_CASE("identity leaves configurations and vertices in place") {
  for (const auto& f : standard_fixtures()) {
    const Evolution e = apply(identity_rule(f.graph.alphabet()), f.graph);
    CHECK(e.image == f.graph);
    for (VertexId v = 0; v < f.graph.size(); ++v) CHECK(e.tracker[v] == v);
  }
}

TEST_CASE("inflate doubles grids") {
  const LocalRule f = inflate_rule(make_alphabet("abcd"));
  for (auto [n, m] : {std::pair{1u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 3u}, {1u, 4u}}) {
    const Evolution e = apply(f, grid(n, m, true));
    CHECK(e.image == grid(2 * n, 2 * m, true));
    CHECK(e.image.size() == 4 * n * m);
  }
  CHECK(apply(f, grid(3, 2, false)).image == grid(6, 4, false));
  // The tracker sends (x, y) to (2x, 2y).
  const Gcg x = grid(3, 3, true);
  const Evolution e = apply(f, x);
  CHECK(e.image.word_string(e.tracker[x.vertex("ab")]) == "ab.ab");
  CHECK(e.image.word_string(e.tracker[x.vertex("cd")]) == "cd.cd");
}

TEST_CASE("sprout grows a leaf on every free port") {
  const LocalRule f = sprout_rule(make_alphabet("ab"));
  NamedGraph single(make_alphabet("ab"));
  single.add_vertex(single_name("v"));
  single.pointer = 0;
  CHECK(apply(f, canonicalize(single)).image.size() == 3);
  CHECK(apply(f, cycle(6)).image == cycle(6));
  // A path gains a loop-free leaf at each end: the a port of the last vertex
  // and the b port of the first.
  const Evolution e = apply(f, path(4, 1));
  CHECK(e.image.size() == 6);
  CHECK(e.image.edge_count() == 5);
}

TEST_CASE("xor_state changes states only") {
  const auto a = make_alphabet("ab", {"0", "1"});
  const LocalRule f = xor_state_rule(a);
  NamedGraph g(a);
  for (int i = 0; i < 5; ++i) g.add_vertex(single_name("v" + std::to_string(i)), Label{i == 0 ? 1u : 0u});
  for (int i = 0; i < 5; ++i) g.add_edge(i, 0, (i + 1) % 5, 1);
  g.pointer = 0;
  const Gcg x = canonicalize(g);
  const Evolution e = apply(f, x);
  CHECK(e.image.without_labels() == x.without_labels());
  // Only the two neighbours of the lit vertex see an odd number of ones.
  std::size_t lit = 0;
  for (VertexId v = 0; v < e.image.size(); ++v) lit += e.image.label(v) == Label{1};
  CHECK(lit == 2);
  CHECK(e.image.label(0) == Label{0});
}

TEST_CASE("composition bookkeeping") {
  const auto ab = make_alphabet("ab");
  const auto ab01 = make_alphabet("ab", {"0", "1"});
  const LocalRule xr = xor_state_rule(ab01);
  const LocalRule h = compose(xr, xr);
  CHECK(h.radius == 2 * 1 * 1 + 1 + 1);
  const LocalRule i2 = identity_rule(ab, 2);
  const LocalRule s = sprout_rule(ab);
  const LocalRule k = compose(i2, s);
  CHECK(k.radius == 2);
  CHECK(k.suffix_bound == (i2.suffix_bound + 1) * (s.suffix_bound + 1) - 1);
  CHECK(k.inflation == i2.inflation * s.inflation);
  CHECK_THROWS_AS(compose(s, inflate_rule(make_alphabet("abcd"))), Error);
}

TEST_CASE("composed rules agree with sequential application") {
  const auto abcd = make_alphabet("abcd");
  const auto ab = make_alphabet("ab");
  const auto ab01 = make_alphabet("ab", {"0", "1"});
  const LocalRule inflate = inflate_rule(abcd);
  const std::vector<std::pair<LocalRule, LocalRule>> pairs{
      {identity_rule(abcd), inflate},
      {inflate, inflate},
      {inflate, sprout_rule(abcd)},
      {sprout_rule(ab), sprout_rule(ab)},
      {xor_state_rule(ab01), xor_state_rule(ab01)},
      {identity_rule(ab01), xor_state_rule(ab01)},
  };
  for (const auto& [f, g] : pairs) {
    const LocalRule h = compose(f, g);
    const Dynamics seq = sequence(dynamics_of(f), dynamics_of(g));
    for (const auto& x : graphs_over(f.alphabet)) {
      if (x.size() > 40) continue;
      CHECK_MESSAGE(same_evolution(x, apply(h, x), seq(x)), (f.name + " then " + g.name));
    }
  }
  const Evolution twice = apply(compose(inflate, inflate), grid(2, 2, true));
  CHECK(twice.image == grid(8, 8, true));
}

TEST_CASE("builtin dynamics are causal on their fixtures") {
  const auto abcd = make_alphabet("abcd");
  const auto ab = make_alphabet("ab");
  const auto ab01 = make_alphabet("ab", {"0", "1"});
  std::vector<Gcg> cycles;
  for (unsigned n = 1; n <= 8; ++n) cycles.push_back(cycle(n));
  const std::vector<std::pair<LocalRule, std::vector<Gcg>>> cases{
      {identity_rule(ab, 1), graphs_over(ab)},
      {inflate_rule(abcd), graphs_over(abcd)},
      {sprout_rule(ab), graphs_over(ab)},
      {turtle_rule(ab), cycles},
      {xor_state_rule(ab01), graphs_over(ab01)},
  };
  for (const auto& [f, xs] : cases) {
    const Dynamics d = dynamics_of(f);
    for (const auto& x : xs) {
      CHECK_MESSAGE(check_shift_invariance(d, x).ok, f.name);
      CHECK_MESSAGE(check_tracker_cocycle(d, x).ok, f.name);
      CHECK_MESSAGE(check_bounded_inflation(d, x, f.output_bound, f.inflation).ok, f.name);
    }
  }
}

TEST_CASE("continuity modulus") {
  CHECK(continuity_radius(0, 0) == 1);
  CHECK(continuity_radius(1, 2) == 11);
  const LocalRule f = inflate_rule(make_alphabet("abcd"));
  for (unsigned m = 0; m <= 1; ++m) {
    const unsigned n = continuity_radius(f.radius, m);
    for (const auto& [x, y] : continuity_pairs(f.alphabet, n)) {
      REQUIRE(closer_than(distance(x, y), n));
      REQUIRE_FALSE(x == y);
      const auto c = check_continuity_modulus(dynamics_of(f), f.radius, x, y, m);
      CHECK(c.ok);
      CHECK(c.cases > 0);
    }
  }
  // Graphs far apart make the check vacuous.
  const auto vacuous = check_continuity_modulus(dynamics_of(f), 0, grid(2, 2, true), grid(3, 3, true), 1);
  CHECK(vacuous.ok);
  CHECK(vacuous.cases == 0);
}

TEST_CASE("a pointer-dependent dynamics is not shift-invariant") {
  const auto a = make_alphabet("ab", {"0", "1"});
  const Dynamics mark = [a](const Gcg& x) {
    NamedGraph g = x.to_named();
    g.alphabet = a;
    for (VertexId v = 0; v < g.size(); ++v) g.labels[v] = Label{v == 0 ? 1u : 0u};
    Evolution e{canonicalize(g), {}};
    for (VertexId v = 0; v < x.size(); ++v) e.tracker.push_back(v);
    return e;
  };
  const Gcg x = with_states(cycle(4), a, [](const Gcg&, VertexId) { return Label{0}; });
  const auto c = check_shift_invariance(mark, x);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.counterexamples.empty());
}

TEST_CASE("turtle is vertex-preserving invertible without S inverting R") {
  const LocalRule f = turtle_rule(make_alphabet("ab"));
  std::vector<Gcg> cycles;
  for (unsigned n = 3; n <= 12; ++n) cycles.push_back(cycle(n));
  const Dynamics turtle = dynamics_of(f);
  const Dynamics back = dynamics_of(identity_rule(make_alphabet("ab")));
  const auto report = check_invertibility(turtle, cycles, &back);
  CHECK(report.injective);
  CHECK(report.trackers_bijective);
  CHECK(*report.inverse_recovers_inputs);
  CHECK(*report.inverse_shift_invariant);
  CHECK_FALSE(*report.inverse_tracker_is_r_inverse);
  for (const auto& x : cycles) {
    const Evolution e = turtle(x);
    CHECK(e.image == x);
    CHECK(e.image.word_string(e.tracker[x.vertex("ab")]) == "ba");
  }
}

TEST_CASE("sprout is injective but not surjective") {
  const auto ab = make_alphabet("ab");
  const Dynamics f = dynamics_of(sprout_rule(ab));
  const auto small = enumerate_graphs(ab, 3);
  const auto report = check_invertibility(f, small);
  CHECK(report.injective);
  CHECK_FALSE(report.trackers_bijective);
  const auto missed = outside_image(f, small, enumerate_graphs(ab, 5));
  CHECK_FALSE(missed.empty());
  // A single vertex has free ports, so it is never a sprout image.
  NamedGraph single(ab);
  single.add_vertex(single_name("v"));
  single.pointer = 0;
  CHECK(std::find(missed.begin(), missed.end(), canonicalize(single)) != missed.end());
}

TEST_CASE("classification") {
  const auto ab01 = make_alphabet("ab", {"0", "1"});
  const auto abcd = make_alphabet("abcd");
  const auto xc = classify(dynamics_of(xor_state_rule(ab01)), ab01, graphs_over(ab01));
  CHECK(xc.state_only);
  CHECK_FALSE(xc.graph_only);
  const auto ic = classify(dynamics_of(inflate_rule(abcd)), abcd, graphs_over(abcd));
  CHECK(ic.graph_only);
  CHECK_FALSE(ic.state_only);
  const auto id = classify(dynamics_of(identity_rule(abcd)), abcd, graphs_over(abcd));
  CHECK(id.graph_only);
  CHECK(id.state_only);
}

TEST_CASE("apply does not see how the input was presented") {
  Rng rng(3);
  const auto ab = make_alphabet("ab");
  const LocalRule f = sprout_rule(ab);
  for (int i = 0; i < 50; ++i) {
    const NamedGraph g = random_graph(rng, ab, 8);
    const Gcg x = canonicalize(g);
    const Gcg y = canonicalize(scrambled(g, rng));
    CHECK(same_evolution(x, apply(f, x), apply(f, y)));
  }
}
