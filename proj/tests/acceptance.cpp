// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gcg/builtin_rules.hpp"
#include "gcg/dynamics.hpp"
#include "gcg/enumerate.hpp"
#include "gcg/fixtures.hpp"
#include "gcg/local_rule.hpp"
#include "gcg/metric.hpp"
#include "gcg/pathlang.hpp"
#include "oracles.hpp"

using namespace gcg;

namespace {

constexpr double kCanonicalSeconds = 10.0;
constexpr double kDecisionSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Gcg> family(const std::vector<Fixture>& all, const std::set<std::string>& names) {
  std::vector<Gcg> out;
  for (const auto& f : all) {
    if (names.count(f.family)) out.push_back(f.graph);
  }
  return out;
}

std::vector<Gcg> ports_are(const std::vector<Gcg>& graphs, const std::string& ports) {
  std::vector<Gcg> out;
  for (const auto& g : graphs) {
    if (g.alphabet()->ports == ports) out.push_back(g);
  }
  return out;
}

bool closed(const Gcg& x) {
  for (VertexId v = 0; v < x.size(); ++v) {
    for (Port p = 0; p < x.alphabet()->port_count(); ++p) {
      if (x.slot(v, p).free()) return false;
    }
  }
  return true;
}

Outcome canonical_invariance() {
  Rng rng(1);
  const std::string ports = "abcd";
  std::size_t same = 0, total = 0;
  const auto start = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto a = make_alphabet(ports.substr(0, 1 + rng() % 4), {"0", "1"}, {"x", "y"});
    const NamedGraph g = random_graph(rng, a, 12);
    const Gcg x = canonicalize(g);
    for (int k = 0; k < 5; ++k) {
      ++total;
      same += canonicalize(scrambled(g, rng)) == x;
    }
  }
  const double t = seconds_since(start);
  std::ostringstream os;
  os << same << "/" << total << " renamings agree, " << t << " s (limit " << kCanonicalSeconds << " s)";
  return {same == total && t < kCanonicalSeconds, os.str()};
}

Outcome structure_round_trip() {
  const auto graphs = enumerate_graphs(make_alphabet("ab"), 5);
  std::size_t good = 0, errors = 0;
  for (const auto& x : graphs) {
    try {
      good += graph_from_structure(structure_of(x), x.eccentricity() + 1) == x;
    } catch (const Error&) {
      ++errors;
    }
  }
  const bool complete = graphs.size() == oracle::brute_force_graphs(make_alphabet("ab"), 5).size();
  std::ostringstream os;
  os << good << "/" << graphs.size() << " graphs recovered, " << errors << " exceptions, enumeration "
     << (complete ? "matches" : "differs from") << " brute force";
  return {good == graphs.size() && errors == 0 && complete, os.str()};
}

Outcome axioms_on_fixtures() {
  std::size_t good = 0, words = 0;
  const auto all = standard_fixtures();
  std::string failed;
  for (const auto& f : all) {
    const auto report = check_axioms(structure_of(f.graph), 8);
    words += report.words_checked;
    if (report.ok()) {
      ++good;
    } else {
      failed += " " + f.name;
    }
  }
  std::ostringstream os;
  os << good << "/" << all.size() << " fixtures, " << words << " words of length <= 8" << failed;
  return {good == all.size(), os.str()};
}

// Random graph with one vertex state flipped somewhere, so that distances
// spread over several scales.
Gcg perturbed(const Gcg& x, Rng& rng) {
  NamedGraph g = x.to_named();
  const VertexId v = rng() % g.size();
  g.labels[v] = static_cast<Label>(g.labels[v] == Label{1} ? 0 : 1);
  return canonicalize(g);
}

Outcome metric() {
  Rng rng(4);
  const auto a = make_alphabet("ab", {"0", "1"});
  auto random_config = [&] { return canonicalize(random_graph(rng, a, 10)); };
  std::size_t triples = 0, ultra = 0;
  for (int i = 0; i < 10000; ++i) {
    const Gcg x = random_config();
    const Gcg y = rng() % 2 ? perturbed(x, rng) : random_config();
    const Gcg z = rng() % 2 ? perturbed(y, rng) : random_config();
    ++triples;
    ultra += distance(x, z) <= max(distance(x, y), distance(y, z));
  }
  std::size_t pairs = 0, agree = 0, close = 0, far = 0;
  for (int i = 0; i < 1000; ++i) {
    const Gcg x = random_config();
    const Gcg y = perturbed(x, rng);
    ++pairs;
    bool all = true;
    for (unsigned k = 0; k <= 3; ++k) {
      // epsilon = 2^-k, so floor(-log2 epsilon) = k.
      const bool near = closer_than(distance(x, y), k);
      const bool disks_equal = disk(x, k) == disk(y, k);
      all = all && near == disks_equal;
      (near ? close : far) += 1;
    }
    agree += all;
  }
  std::ostringstream os;
  os << ultra << "/" << triples << " triples ultrametric, " << agree << "/" << pairs
     << " pairs match disks at eps 1..1/8 (" << close << " close, " << far << " far)";
  return {ultra == triples && agree == pairs && close > 0 && far > 0, os.str()};
}

Outcome decidability() {
  const auto a = make_alphabet("ab");
  const auto start = Clock::now();
  const auto report = check_local_rule(identity_rule(a, 0));
  const double t = seconds_since(start);
  const std::size_t expect1 = oracle::brute_force_disks(a, 1, 5).size();
  const std::size_t expect2 = oracle::brute_force_disks(a, 2, 7).size();
  const std::size_t got1 = report.disks_checked.count(1) ? report.disks_checked.at(1) : 0;
  const std::size_t got2 = report.disks_checked.count(2) ? report.disks_checked.at(2) : 0;
  std::ostringstream os;
  os << "verdict " << (report.ok() ? "local" : "not local") << ", radius-1 disks " << got1 << "/" << expect1
     << ", radius-2 disks " << got2 << "/" << expect2 << ", " << t << " s (limit " << kDecisionSeconds << " s)";
  return {report.ok() && report.exhaustive && got1 == expect1 && got2 == expect2 && t < kDecisionSeconds, os.str()};
}

Outcome inflating_grid() {
  const LocalRule f = inflate_rule(make_alphabet("abcd"));
  std::size_t good = 0;
  std::ostringstream os;
  for (auto [n, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const Gcg image = apply(f, grid(n, m, true)).image;
    const bool ok = image == grid(2 * n, 2 * m, true) && image.size() == 4 * n * m;
    good += ok;
    os << n << "x" << m << "->" << image.size() << " ";
  }
  os << "vertices, " << good << "/3 equal to the doubled torus";
  return {good == 3, os.str()};
}

Outcome causality() {
  const auto all = standard_fixtures();
  std::vector<Gcg> cycles;
  for (const auto& g : family(all, {"cycles", "labelled"})) {
    if (closed(g) && g.alphabet()->ports == "ab") cycles.push_back(g);
  }
  struct Case {
    std::string rule;
    std::vector<Gcg> graphs;
  };
  const std::vector<Case> cases{
      {"identity", family(all, {"grids", "cycles", "paths", "trees", "cayley", "labelled"})},
      {"inflate", ports_are(family(all, {"grids", "labelled"}), "abcd")},
      {"turtle", cycles},
      {"sprout", family(all, {"grids", "cycles", "paths", "trees", "cayley", "labelled"})},
      {"xor_state", family(all, {"labelled"})},
  };
  std::size_t graphs = 0, shift_cases = 0, continuity_cases = 0, failures = 0;
  std::string failed;
  for (const auto& c : cases) {
    std::map<std::string, Dynamics> cache;
    std::map<std::string, LocalRule> rules;
    auto rule_for = [&](const AlphabetPtr& a) -> std::pair<const LocalRule&, const Dynamics&> {
      const std::string key = a->ports + "|" + std::to_string(a->sigma.size());
      if (!rules.count(key)) {
        rules.emplace(key, builtin_rule(c.rule, a));
        cache.emplace(key, dynamics_of(rules.at(key)));
      }
      return {rules.at(key), cache.at(key)};
    };
    std::set<std::string> alphabets;
    for (const auto& x : c.graphs) {
      const auto [f, d] = rule_for(x.alphabet());
      PropertyCheck p = check_shift_invariance(d, x);
      p.merge(check_tracker_cocycle(d, x));
      p.merge(check_bounded_inflation(d, x, f.output_bound, f.inflation));
      ++graphs;
      shift_cases += p.cases;
      if (!p.ok) {
        ++failures;
        failed += " " + c.rule;
      }
      alphabets.insert(x.alphabet()->ports + "|" + std::to_string(x.alphabet()->sigma.size()));
    }
    for (const auto& key : alphabets) {
      const AlphabetPtr a = rules.at(key).alphabet;
      const auto [f, d] = rule_for(a);
      for (unsigned m = 0; m <= 2; ++m) {
        const unsigned n = continuity_radius(f.radius, m);
        for (const auto& [x, y] : continuity_pairs(a, n)) {
          if (c.rule == "turtle" && !(closed(x) && closed(y))) continue;
          const auto p = check_continuity_modulus(d, f.radius, x, y, m);
          continuity_cases += p.cases;
          if (!p.ok || p.cases == 0) {
            ++failures;
            failed += " " + c.rule + "/continuity";
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << graphs << " rule/fixture runs, " << shift_cases << " shift and inflation cases, " << continuity_cases
     << " continuity cases, " << failures << " failures" << failed;
  return {failures == 0 && continuity_cases > 0, os.str()};
}

Outcome composition() {
  const auto all = standard_fixtures();
  const auto graphs = ports_are(family(all, {"grids", "labelled"}), "abcd");
  std::size_t runs = 0, equal = 0;
  for (const auto& [fname, gname] : {std::pair{"identity", "inflate"}, {"inflate", "inflate"}, {"inflate", "sprout"}}) {
    for (const auto& x : graphs) {
      const LocalRule f = builtin_rule(fname, x.alphabet());
      const LocalRule g = builtin_rule(gname, x.alphabet());
      const Evolution one = apply(compose(f, g), x);
      const Evolution first = apply(f, x);
      const Evolution second = apply(g, first.image);
      std::vector<VertexId> t;
      for (VertexId u = 0; u < x.size(); ++u) t.push_back(second.tracker[first.tracker[u]]);
      ++runs;
      equal += one.image == second.image && one.tracker == t;
    }
  }
  std::ostringstream os;
  os << equal << "/" << runs << " composed runs equal sequential application with T = S o R";
  return {equal == runs && runs > 0, os.str()};
}

Outcome turtle() {
  std::vector<Gcg> cycles;
  for (unsigned n = 3; n <= 12; ++n) cycles.push_back(cycle(n));
  const auto ab = make_alphabet("ab");
  const Dynamics f = dynamics_of(turtle_rule(ab));
  const Dynamics s = dynamics_of(identity_rule(ab));
  const auto report = check_invertibility(f, cycles, &s);
  const bool witness = report.inverse_tracker_is_r_inverse && !*report.inverse_tracker_is_r_inverse;
  std::ostringstream os;
  os << "injective " << report.injective << ", R_X bijective " << report.trackers_bijective
     << ", S_F(X) != R_X^-1 witnessed " << witness;
  return {report.injective && report.trackers_bijective && witness && *report.inverse_recovers_inputs, os.str()};
}

Outcome sprout() {
  const auto ab = make_alphabet("ab");
  const Dynamics f = dynamics_of(sprout_rule(ab));
  const auto domain = enumerate_graphs(ab, 3);
  const auto report = check_invertibility(f, domain);
  const auto range = enumerate_graphs(ab, 5);
  const auto missed = outside_image(f, domain, range);
  const bool brute = range.size() == oracle::brute_force_graphs(ab, 5).size();
  std::ostringstream os;
  os << "injective on " << domain.size() << " configurations " << report.injective << ", " << missed.size() << " of "
     << range.size() << " configurations with <= 5 vertices outside the image";
  return {report.injective && !missed.empty() && brute, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      canonical_invariance, structure_round_trip, axioms_on_fixtures, metric,      decidability,
      inflating_grid,       causality,            composition,        turtle,      sprout,
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %zu: %s (%s) [%.2f s]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
