#include "gcg/local_rule.hpp"

#include <unordered_map>
#include <unordered_set>

#include "gcg/enumerate.hpp"

namespace gcg {

std::vector<std::string> output_problems(const LocalRule& f, const Gcg& disk, const NamedGraph& out) {
  std::vector<std::string> problems = validate_structure(out).problems;
  if (!same_alphabet(out.alphabet, f.alphabet)) problems.push_back("output alphabet differs from the rule's");
  bool has_root = false;
  for (const auto& name : out.names) {
    for (const auto& atom : name) {
      if (atom.base.empty() && atom.suffix == 0) has_root = true;
      if (atom.suffix > f.suffix_bound)
        problems.push_back("atom " + format_atom(atom) + " exceeds suffix bound " + std::to_string(f.suffix_bound));
      try {
        if (!disk.resolve(parse_word(atom.base, *disk.alphabet())))
          problems.push_back("atom " + format_atom(atom) + " is not a vertex of the disk");
      } catch (const Error&) {
        problems.push_back("atom " + format_atom(atom) + " is not a path word");
      }
    }
  }
  if (!has_root) problems.push_back("output has no vertex containing eps");
  return problems;
}

NamedGraph evaluate(const LocalRule& f, const Gcg& disk) {
  NamedGraph out = f.eval(disk);
  const auto problems = output_problems(f, disk, out);
  if (!problems.empty()) throw Error("rule " + f.name + ": " + problems.front());
  return out;
}

std::vector<Gcg> disks_of(const std::vector<Gcg>& graphs, unsigned r) {
  std::unordered_set<Gcg, GcgHash> seen;
  std::vector<Gcg> out;
  for (const auto& x : graphs) {
    for (VertexId u = 0; u < x.size(); ++u) {
      Gcg d = local_disk(x, u, r).graph;
      if (seen.insert(d).second) out.push_back(std::move(d));
    }
  }
  return out;
}

namespace {

class Checker {
 public:
  Checker(const LocalRule& f, const RuleCheckOptions& options) : f_(f), options_(options) {
    report_.exhaustive = !options.fixtures.has_value();
  }

  RuleCheckReport run() {
    const unsigned r = f_.radius;
    if (!visit_disks(r, [this](const Gcg& d) { check_output(d); })) return report_;
    if (!visit_disks(r + 1, [this](const Gcg& d) { check_pairs(d, 1, true); })) return report_;
    visit_disks(3 * r + 2, [this, r](const Gcg& d) { check_pairs(d, 2 * r + 2, false); });
    return report_;
  }

 private:
  template <typename Fn>
  bool visit_disks(unsigned radius, Fn&& fn) {
    std::size_t& count = report_.disks_checked[radius];
    if (options_.fixtures) {
      for (const auto& d : disks_of(*options_.fixtures, radius)) {
        ++count;
        fn(d);
      }
      return true;
    }
    for_each_disk(f_.alphabet, radius, [&](const Gcg& d) {
      if (count == options_.max_disks) {
        report_.aborted = true;
        report_.abort_reason = "more than " + std::to_string(options_.max_disks) + " disks of radius " +
                               std::to_string(radius);
        return false;
      }
      ++count;
      fn(d);
      return true;
    });
    return !report_.aborted;
  }

  void fail(bool RuleCheckReport::*flag, std::string condition, const Gcg& disk, VertexId u, std::string detail) {
    report_.*flag = false;
    if (report_.counterexamples.size() < options_.max_counterexamples)
      report_.counterexamples.push_back({std::move(condition), disk, u, std::move(detail)});
  }

  const NamedGraph* output(const Gcg& disk) {
    auto it = cache_.find(disk);
    if (it != cache_.end()) return it->second ? &*it->second : nullptr;
    std::optional<NamedGraph> out;
    try {
      out = f_.eval(disk);
    } catch (const Error& e) {
      fail(&RuleCheckReport::dynamics_ok, "dynamics", disk, 0, e.what());
    }
    auto& slot = cache_.emplace(disk, std::move(out)).first->second;
    return slot ? &*slot : nullptr;
  }

  void check_output(const Gcg& disk) {
    const NamedGraph* out = output(disk);
    if (!out) return;
    for (const auto& problem : output_problems(f_, disk, *out)) {
      const bool bound = problem.find("suffix bound") != std::string::npos;
      fail(bound ? &RuleCheckReport::bounded_ok : &RuleCheckReport::dynamics_ok, bound ? "bounded" : "dynamics",
           disk, 0, problem);
    }
  }

  // Compares f(D^r) with u.f(D_u^r) for every u within `reach` of the pointer.
  void check_pairs(const Gcg& d, unsigned reach, bool non_trivial) {
    const unsigned r = f_.radius;
    const NamedGraph* center = output(disk(d, r));
    if (!center) return;
    std::optional<NamedGraph> here;
    try {
      here = prefix_graph(d, 0, *center);
    } catch (const Error&) {
      return;  // already reported as a dynamics failure
    }
    for (VertexId u = 0; u < d.size() && d.distance(u) <= reach; ++u) {
      const NamedGraph* patch = output(local_disk(d, u, r).graph);
      if (!patch) continue;
      std::optional<NamedGraph> there;
      try {
        there = prefix_graph(d, u, *patch);
      } catch (const Error&) {
        continue;
      }
      const ConsistencyVerdict v = consistency(*here, *there);
      if (!v.consistent()) {
        fail(non_trivial ? &RuleCheckReport::nontrivial_consistency_ok : &RuleCheckReport::consistency_ok,
             non_trivial ? "non-trivial consistency" : "consistency", d, u,
             "clause " + std::to_string(v.clause) + ": " + v.reason);
      } else if (non_trivial && !v.non_trivial()) {
        fail(&RuleCheckReport::nontrivial_consistency_ok, "non-trivial consistency", d, u, "patches do not overlap");
      }
    }
  }

  const LocalRule& f_;
  const RuleCheckOptions& options_;
  RuleCheckReport report_;
  std::unordered_map<Gcg, std::optional<NamedGraph>, GcgHash> cache_;
};

}  // namespace

RuleCheckReport check_local_rule(const LocalRule& f, const RuleCheckOptions& options) {
  return Checker(f, options).run();
}

}  // namespace gcg
