#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gcg/fixtures.hpp"
#include "gcg/pathlang.hpp"
#include "oracles.hpp"

using namespace gcg;

TEST_CASE("paths of the 4-cycle up to length 2") {
  const Gcg x = cycle(4);
  const auto words = paths_up_to(x, 2);
  CHECK(words.size() == 7);
  CHECK(words.size() == oracle::walks_up_to(x, 2));
  std::set<std::string> text;
  for (const auto& w : words) text.insert(format_word(w, *x.alphabet()));
  CHECK(text == std::set<std::string>{"", "ab", "ba", "ab.ab", "ab.ba", "ba.ab", "ba.ba"});
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(shortlex_less(words[i - 1], words[i]));
}

TEST_CASE("path counts agree with walk counting") {
  for (const auto& f : standard_fixtures()) {
    for (unsigned n = 0; n <= 4; ++n) CHECK(paths_up_to(f.graph, n).size() == oracle::walks_up_to(f.graph, n));
  }
}

TEST_CASE("path structures of graphs satisfy the axioms") {
  for (const auto& f : standard_fixtures()) {
    const auto report = check_axioms(structure_of(f.graph), 5);
    CHECK_MESSAGE(report.ok(), f.name);
    CHECK(report.words_checked == oracle::walks_up_to(f.graph, 5));
  }
}

TEST_CASE("graphs are recovered from their path structures") {
  for (const auto& f : standard_fixtures()) {
    const Gcg& x = f.graph;
    CHECK_MESSAGE(graph_from_structure(structure_of(x), x.eccentricity() + 1) == x.without_labels(), f.name);
  }
  CHECK_THROWS_AS(graph_from_structure(structure_of(cycle(9)), 3), Error);
}

TEST_CASE("hand written structures") {
  const auto a = make_alphabet("ab");
  SUBCASE("the 3-cycle") {
    const auto s = parse_structure(R"(# triangle
ab
ba
ab.ab == ba
ba.ba == ab
ab.ba ==
ba.ab == e
ab.ab.ab == e
)",
                                   a);
    CHECK(s.equivalent(parse_word("ab.ab", *a), parse_word("ba", *a)));
    // A finite listing is closed only up to the depth it spells out.
    CHECK(check_axioms(s, 2).ok());
    CHECK_FALSE(check_axioms(s, 4).completeness_ii);
    CHECK(graph_from_structure(s, 2) == cycle(3));
  }
  SUBCASE("a missing backtrack breaks clause (iii)") {
    const auto s = parse_structure("ab\n", a);
    const auto report = check_axioms(s, 2);
    CHECK_FALSE(report.completeness_iii);
    REQUIRE_FALSE(report.counterexamples.empty());
    CHECK_THROWS_AS(graph_from_structure(s, 3), Error);
  }
  SUBCASE("a member without its prefix breaks clause (i)") {
    const auto s = parse_structure("ab.ab\n", a);
    CHECK_FALSE(check_axioms(s, 3).completeness_i);
  }
  SUBCASE("one port leading to two places breaks adjacency") {
    // ab lands on both the pointer and a distinct vertex.
    const auto s = parse_structure("ab\nba\nab.ba\nba.ab\nab == e\n", a);
    CHECK_FALSE(check_axioms(s, 3).ok());
  }
  SUBCASE("malformed text") {
    CHECK_THROWS_AS(parse_structure("zz\n", a), Error);
    CHECK_THROWS_AS(parse_structure("ab == ba == ab\n", a), Error);
  }
}

TEST_CASE("the Petersen graph") {
  const Gcg x = petersen();
  CHECK(x.size() == 10);
  CHECK(x.edge_count() == 15);
  CHECK(oracle::girth(x) == 5);
  CHECK(x.eccentricity() == 2);
  CHECK(check_axioms(structure_of(x), 8).ok());
  for (VertexId v = 0; v < x.size(); ++v) {
    for (Port p = 0; p < 3; ++p) CHECK_FALSE(x.slot(v, p).free());
  }
}

TEST_CASE("grids and tori") {
  const Gcg g = grid(2, 2, false);
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 4);
  const Gcg t = grid(3, 4, true);
  CHECK(t.size() == 12);
  CHECK(t.edge_count() == 24);
  CHECK(oracle::girth(t) == 3);
  CHECK(oracle::girth(grid(5, 5, true)) == 4);
  CHECK(cycle(1).edge_count() == 1);
}

TEST_CASE("Cayley graphs") {
  GroupTable z4{{"0", "1", "2", "3"}, {}, {"1"}};
  for (std::size_t i = 0; i < 4; ++i) {
    z4.product.emplace_back();
    for (std::size_t j = 0; j < 4; ++j) z4.product.back().push_back((i + j) % 4);
  }
  CHECK(cayley_from_group(z4) == cycle(4));

  GroupTable klein{{"e", "x", "y", "xy"}, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"x", "y"}};
  const Gcg k = cayley_from_group(klein);
  CHECK(k.size() == 4);
  // Involutions put a pair of parallel edges between each neighbour pair.
  CHECK(k.edge_count() == 8);
  CHECK(check_axioms(structure_of(k), 6).ok());

  SUBCASE("non-groups are rejected") {
    GroupTable no_identity = z4;
    no_identity.product[0][0] = 1;
    CHECK_THROWS_AS(cayley_from_group(no_identity), Error);
    GroupTable not_generated = klein;
    not_generated.generators = {"x"};
    CHECK_THROWS_AS(cayley_from_group(not_generated), Error);
    GroupTable bad_generator = z4;
    bad_generator.generators = {"7"};
    CHECK_THROWS_AS(cayley_from_group(bad_generator), Error);
  }
}
