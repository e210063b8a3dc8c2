#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcg/gcg.hpp"
#include "gcg/named_graph.hpp"

namespace gcg {

/// Maps a canonical disk of radius `radius` to a finite named graph whose
/// vertex names are disjoint sets of atoms (w, z) with w a vertex word of the
/// disk and z <= suffix_bound.
struct LocalRule {
  std::string name;
  AlphabetPtr alphabet;
  unsigned radius = 0;
  Suffix suffix_bound = 0;
  /// Every vertex of F(X) lies within output_bound + 1 of a tracked vertex.
  unsigned output_bound = 0;
  /// |R_X(u)| <= inflation * vertex_size(X, u).
  unsigned inflation = 1;
  std::function<NamedGraph(const Gcg&)> eval;
};

/// Runs the rule and checks its output: structure, atoms resolving in the
/// disk, suffixes within bound, and the atom (eps, eps) present. Throws Error.
NamedGraph evaluate(const LocalRule& f, const Gcg& disk);

/// Reasons `evaluate` would reject the output; empty when acceptable.
std::vector<std::string> output_problems(const LocalRule& f, const Gcg& disk, const NamedGraph& out);

struct RuleCounterexample {
  std::string condition;
  Gcg disk;
  VertexId u = 0;
  std::string detail;
};

struct RuleCheckReport {
  bool exhaustive = true;
  bool dynamics_ok = true;
  bool bounded_ok = true;
  bool nontrivial_consistency_ok = true;
  bool consistency_ok = true;
  bool aborted = false;
  std::string abort_reason;
  /// Disk radius -> number of disks examined at that radius.
  std::map<unsigned, std::size_t> disks_checked;
  std::vector<RuleCounterexample> counterexamples;

  bool ok() const {
    return !aborted && dynamics_ok && bounded_ok && nontrivial_consistency_ok && consistency_ok;
  }
};

struct RuleCheckOptions {
  /// When set, disks are taken from these graphs instead of being
  /// enumerated; the verdict is then sound for them only.
  std::optional<std::vector<Gcg>> fixtures;
  /// Exhaustive mode gives up once a radius has more disks than this.
  std::size_t max_disks = 1'000'000;
  std::size_t max_counterexamples = 8;
};

RuleCheckReport check_local_rule(const LocalRule& f, const RuleCheckOptions& options = {});

/// Distinct local disks of radius r around every vertex of every graph.
std::vector<Gcg> disks_of(const std::vector<Gcg>& graphs, unsigned r);

}  // namespace gcg
