#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcg/fixtures.hpp"
#include "gcg/metric.hpp"
#include "gcg/pathlang.hpp"

using namespace gcg;

namespace {

// Path over ab with every edge state "t" except edge k, which is "u".
Gcg marked_path(unsigned n, unsigned k) {
  const auto a = make_alphabet("ab", {}, {"t", "u"});
  NamedGraph g(a);
  for (unsigned i = 0; i < n; ++i) g.add_vertex(single_name("p" + std::to_string(i)));
  for (unsigned i = 0; i + 1 < n; ++i) g.add_edge(i, 0, i + 1, 1, Label{i == k ? 1u : 0u});
  g.pointer = 0;
  return canonicalize(g);
}

}  // namespace

TEST_CASE("distance values") {
  CHECK(Distance{}.zero());
  CHECK(Distance{}.to_string() == "0");
  CHECK(Distance{3}.to_string() == "2^-3");
  CHECK(Distance{0}.value() == doctest::Approx(1.0));
  CHECK(Distance{3}.value() == doctest::Approx(0.125));
  CHECK(Distance{} < Distance{5});
  CHECK(Distance{5} < Distance{2});
  CHECK(max(Distance{5}, Distance{2}) == Distance{2});
  CHECK(closer_than(Distance{4}, 3));
  CHECK_FALSE(closer_than(Distance{3}, 3));
  CHECK(closer_than(Distance{}, 100));
}

TEST_CASE("distance of a graph to itself is zero") {
  for (const auto& f : standard_fixtures()) CHECK(distance(f.graph, f.graph).zero());
}

TEST_CASE("single vertices with different states are at distance 1") {
  const auto a = make_alphabet("ab", {"0", "1"});
  NamedGraph g(a);
  g.add_vertex(single_name("v"), Label{0});
  g.pointer = 0;
  NamedGraph h = g;
  h.labels[0] = Label{1};
  CHECK(distance(canonicalize(g), canonicalize(h)).value() == doctest::Approx(1.0));
}

TEST_CASE("grids of different heights") {
  // Disks of radius 1 around (0,0) already see the missing row.
  CHECK(distance(grid(3, 3, false), grid(3, 4, false)).to_string() == "2^-2");
  CHECK(distance(grid(6, 6, false), grid(6, 7, false)).to_string() == "2^-5");
  CHECK(distance(cycle(7), cycle(8)).to_string() == "2^-3");
}

TEST_CASE("an edge state at depth k is seen from radius k + 1") {
  for (unsigned k = 0; k < 6; ++k) {
    const auto d = distance(marked_path(9, k), marked_path(9, 8));
    CHECK(d == Distance{k + 1});
  }
}

TEST_CASE("ultrametric") {
  const auto fixtures = standard_fixtures();
  std::vector<Gcg> graphs = fixtures_over(fixtures, make_alphabet("ab"));
  Rng rng(11);
  const auto a = make_alphabet("ab");
  for (int i = 0; i < 40; ++i) graphs.push_back(canonicalize(random_graph(rng, a, 7)));
  for (const auto& x : graphs) {
    for (const auto& y : graphs) {
      const Distance xy = distance(x, y);
      CHECK(xy == distance(y, x));
      CHECK(xy.zero() == (x == y));
      for (const auto& z : graphs) CHECK(distance(x, z) <= max(xy, distance(y, z)));
    }
  }
}

TEST_CASE("different alphabets are not comparable") {
  CHECK_THROWS_AS(distance(cycle(3), grid(2, 2, true)), Error);
}
