#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gcg/gcg.hpp"
#include "gcg/named_graph.hpp"

namespace gcg {

using Rng = std::mt19937_64;

struct Fixture {
  std::string family;  // grids, cycles, paths, trees, cayley, labelled
  std::string name;
  Gcg graph;
};

/// Grids and tori over abcd, cycles and paths over ab, random trees over
/// abc, labelled cycles, paths and tori with sigma {0,1}, the Petersen graph
/// and small Cayley graphs. Deterministic.
std::vector<Fixture> standard_fixtures();

/// Graphs of the fixtures whose alphabet equals `alphabet`.
std::vector<Gcg> fixtures_over(const std::vector<Fixture>& fixtures, const AlphabetPtr& alphabet);

/// Open path of n vertices over ab, {i:a, i+1:b}, pointed at vertex `at`.
Gcg path(unsigned n, unsigned at = 0);

/// Random connected pointed graph with 1..max_vertices vertices, names
/// "v0", "v1", ...; each vertex and edge gets a random state or none.
NamedGraph random_graph(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_vertices);

/// Random tree with exactly n vertices, unlabelled.
NamedGraph random_tree(Rng& rng, const AlphabetPtr& alphabet, std::size_t n);

/// The same pointed graph with vertices reordered and renamed at random.
NamedGraph scrambled(const NamedGraph& g, Rng& rng);

/// Copy of `x` over `alphabet` (same ports) with vertex states chosen by
/// `state(word)`; edges stay unlabelled.
Gcg with_states(const Gcg& x, const AlphabetPtr& alphabet, const std::function<Label(const Gcg&, VertexId)>& state);

/// Vertex states from a fixed hash of the vertex's position relative to the
/// pointer, so that large graphs agreeing around the pointer get the same
/// states there. Sigma must be non-empty.
Gcg with_local_states(const Gcg& x, const AlphabetPtr& alphabet);

/// Pairs of larger graphs that agree on a wide disk around the pointer but
/// differ beyond it, over the alphabet of each builtin rule family.
std::vector<std::pair<Gcg, Gcg>> continuity_pairs(const AlphabetPtr& alphabet, unsigned n);

}  // namespace gcg
