#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gcg/gcg.hpp"

namespace gcg {

/// Return false to stop the enumeration.
using GcgVisitor = std::function<bool(const Gcg&)>;

/// Every disk of radius n over the alphabet (every X with disk(X, n) = X),
/// each exactly once, in a fixed generation order. Unlabelled vertices and
/// edges are included alongside each state of Sigma and Delta. Disks with
/// more than `max_vertices` vertices are skipped. Returns the number of
/// disks visited.
std::size_t for_each_disk(const AlphabetPtr& alphabet, unsigned n, const GcgVisitor& visit,
                          std::size_t max_vertices = 4096);
std::vector<Gcg> enumerate_disks(const AlphabetPtr& alphabet, unsigned n);

/// Every finite GCG with at most `max_vertices` vertices, each exactly once.
std::size_t for_each_graph(const AlphabetPtr& alphabet, std::size_t max_vertices, const GcgVisitor& visit);
std::vector<Gcg> enumerate_graphs(const AlphabetPtr& alphabet, std::size_t max_vertices);

}  // namespace gcg
