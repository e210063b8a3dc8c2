#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gcg/builtin_rules.hpp"
#include "gcg/dynamics.hpp"
#include "gcg/enumerate.hpp"
#include "gcg/fixtures.hpp"
#include "gcg/io.hpp"
#include "gcg/metric.hpp"
#include "gcg/pathlang.hpp"

namespace fs = std::filesystem;
using namespace gcg;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kPropertyFailed = 2;

/// Thrown by a subcommand to exit with a specific status.
struct ExitStatus {
  int code;
};

void print(const Json& doc) { std::cout << doc.dump(1) << '\n'; }

std::string show_word(const std::string& w) { return w.empty() ? "ε" : w; }


/// A builtin rule by name, or a rule table when the name is a .json file.
LocalRule load_rule(const std::string& name, const AlphabetPtr& alphabet, unsigned radius) {
  if (fs::path(name).extension() == ".json") {
    std::ifstream in(name);
    if (!in) throw Error("cannot read " + name);
    Json table;
    try {
      table = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(name + ": " + e.what());
    }
    return rule_from_table(table, fs::path(name).stem().string(), radius);
  }
  if (name == "identity") return identity_rule(alphabet, radius);
  return builtin_rule(name, alphabet);
}

void report_rule_check(const RuleCheckReport& report) {
  std::cout << "mode: " << (report.exhaustive ? "exhaustive" : "fixtures (sound for the supplied disks only)") << '\n';
  for (const auto& [radius, count] : report.disks_checked)
    std::cout << "disks of radius " << radius << ": " << count << '\n';
  auto line = [](const char* what, bool ok) { std::cout << what << ": " << (ok ? "pass" : "FAIL") << '\n'; };
  line("dynamics", report.dynamics_ok);
  line("bounded", report.bounded_ok);
  line("non-trivial consistency", report.nontrivial_consistency_ok);
  line("consistency", report.consistency_ok);
  for (const auto& c : report.counterexamples) {
    std::cout << "counterexample (" << c.condition << ") at u = " << show_word(c.disk.word_string(c.u)) << ": "
              << c.detail << '\n'
              << gcg_to_json(c.disk).dump() << '\n';
  }
  if (report.aborted) std::cout << "aborted: " << report.abort_reason << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Cayley graphs and causal graph dynamics"};
  app.require_subcommand(1);

  std::string input, second, word, rule_name, rules, fixtures_dir, group_file, dot_dir, tracker_file, out_dir;
  std::string ports = "ab";
  std::vector<std::string> sigma, delta;
  unsigned radius = 0, n = 0, m = 0, steps = 1;
  std::size_t max_disks = 1'000'000;
  bool wrap = false, exhaustive = false, count_only = false;

  auto* canon = app.add_subcommand("canon", "Canonicalize a graph");
  canon->add_option("input", input, "Graph JSON")->required();

  auto* disk_cmd = app.add_subcommand("disk", "Disk of radius R around the pointer");
  disk_cmd->add_option("input", input, "Graph JSON")->required();
  disk_cmd->add_option("-r", radius, "Radius")->required();

  auto* shift_cmd = app.add_subcommand("shift", "Move the pointer along a path word");
  shift_cmd->add_option("input", input, "Graph JSON")->required();
  shift_cmd->add_option("-u", word, "Path word, e.g. ab.ba (empty for the pointer)")->required();

  auto* dist = app.add_subcommand("dist", "Ultrametric distance between two graphs");
  dist->add_option("a", input, "Graph JSON")->required();
  dist->add_option("b", second, "Graph JSON")->required();

  auto* paths = app.add_subcommand("paths", "Paths of length at most N from the pointer");
  paths->add_option("input", input, "Graph JSON")->required();
  paths->add_option("-n", n, "Maximal length")->required();

  auto* axioms = app.add_subcommand("axioms", "Check the path-structure axioms up to length N");
  axioms->add_option("input", input, "Graph JSON, or a text path structure")->required();
  axioms->add_option("-n", n, "Word length bound")->required();
  axioms->add_option("--ports", ports, "Ports of a text path structure");

  auto* cayley = app.add_subcommand("cayley", "Cayley graph of a finite group");
  cayley->add_option("--group", group_file, "Group table JSON")->required();

  app.add_subcommand("petersen", "The Petersen graph");

  auto* grid_cmd = app.add_subcommand("grid", "n x m grid over abcd");
  grid_cmd->add_option("-n", n, "Width")->required();
  grid_cmd->add_option("-m", m, "Height")->required();
  grid_cmd->add_flag("--wrap", wrap, "Close into a torus");

  auto* check = app.add_subcommand("check-rule", "Decide whether a rule is a local rule");
  check->add_option("--rule", rule_name, "Builtin rule name or rule table JSON")->required();
  auto* ex_flag = check->add_flag("--exhaustive", exhaustive, "Enumerate every disk");
  check->add_option("--fixtures", fixtures_dir, "Directory of graph JSON files")->excludes(ex_flag);
  check->add_option("-n", radius, "Rule radius (identity and rule tables)");
  check->add_option("--ports", ports, "Ports of the alphabet");
  check->add_option("--sigma", sigma, "Vertex states");
  check->add_option("--delta", delta, "Edge states");
  check->add_option("--max-disks", max_disks, "Abort beyond this many disks per radius");

  CLI::App* step = app.add_subcommand("step", "Apply a rule once");
  CLI::App* run = app.add_subcommand("run", "Apply a rule K times");
  for (CLI::App* c : {step, run}) {
    c->add_option("input", input, "Graph JSON")->required();
    c->add_option("--rule", rule_name, "Builtin rule name or rule table JSON")->required();
    c->add_option("--steps", steps, "Number of steps");
    c->add_option("-n", radius, "Rule radius (identity and rule tables)");
    c->add_option("--emit-dot", dot_dir, "Write one DOT file per step into this directory");
    c->add_option("--tracker", tracker_file, "Write the tracker as JSON word pairs");
  }

  auto* compose_cmd = app.add_subcommand("compose", "Apply the composition of two rules");
  compose_cmd->add_option("input", input, "Graph JSON")->required();
  compose_cmd->add_option("--rules", rules, "Two rules f,g; g is applied after f")->required();

  auto* enum_cmd = app.add_subcommand("enum-disks", "Enumerate every disk of radius N");
  enum_cmd->add_option("-n", n, "Radius")->required();
  enum_cmd->add_flag("--count-only", count_only, "Print only the number of disks");
  enum_cmd->add_option("--ports", ports, "Ports");
  enum_cmd->add_option("--sigma", sigma, "Vertex states");
  enum_cmd->add_option("--delta", delta, "Edge states");

  auto* export_cmd = app.add_subcommand("export-fixtures", "Write the standard fixtures as JSON");
  export_cmd->add_option("dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*canon) {
      print(gcg_to_json(read_gcg(input)));
    } else if (*disk_cmd) {
      print(gcg_to_json(disk(read_gcg(input), radius)));
    } else if (*shift_cmd) {
      const Gcg x = read_gcg(input);
      print(gcg_to_json(shift(x, x.vertex(word))));
    } else if (*dist) {
      std::cout << distance(read_gcg(input), read_gcg(second)).to_string() << '\n';
    } else if (*paths) {
      const Gcg x = read_gcg(input);
      for (const auto& w : paths_up_to(x, n)) std::cout << show_word(format_word(w, *x.alphabet())) << '\n';
    } else if (*axioms) {
      PathStructure s;
      if (fs::path(input).extension() == ".json") {
        s = structure_of(read_gcg(input));
      } else {
        std::ifstream in(input);
        if (!in) throw Error("cannot read " + input);
        std::stringstream text;
        text << in.rdbuf();
        s = parse_structure(text.str(), make_alphabet(ports));
      }
      const AxiomReport report = check_axioms(s, n);
      std::cout << "words checked: " << report.words_checked << '\n';
      std::cout << "completeness (i): " << (report.completeness_i ? "pass" : "FAIL") << '\n';
      std::cout << "completeness (ii): " << (report.completeness_ii ? "pass" : "FAIL") << '\n';
      std::cout << "completeness (iii): " << (report.completeness_iii ? "pass" : "FAIL") << '\n';
      std::cout << "port determinism: " << (report.adjacency ? "pass" : "FAIL") << '\n';
      for (const auto& v : report.counterexamples) {
        std::cout << "counterexample (" << v.clause << "):";
        for (const auto& w : v.words) std::cout << ' ' << show_word(format_word(w, *s.alphabet));
        std::cout << " - " << v.detail << '\n';
      }
      if (!report.ok()) throw ExitStatus{kPropertyFailed};
    } else if (*cayley) {
      std::ifstream in(group_file);
      if (!in) throw Error("cannot read " + group_file);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error(group_file + ": " + e.what());
      }
      print(gcg_to_json(cayley_from_group(group_from_json(doc))));
    } else if (app.got_subcommand("petersen")) {
      print(gcg_to_json(petersen()));
    } else if (*grid_cmd) {
      print(gcg_to_json(grid(n, m, wrap)));
    } else if (*check) {
      AlphabetPtr alphabet = check->count("--ports") || !sigma.empty() || !delta.empty()
                                 ? make_alphabet(ports, sigma, delta)
                                 : default_alphabet(rule_name);
      RuleCheckOptions options;
      options.max_disks = max_disks;
      if (!fixtures_dir.empty()) {
        std::vector<Gcg> graphs;
        for (auto& g : read_gcg_dir(fixtures_dir)) {
          if (same_alphabet(g.alphabet(), alphabet)) graphs.push_back(std::move(g));
        }
        if (graphs.empty()) throw Error("no fixture in " + fixtures_dir + " uses ports '" + alphabet->ports + "'");
        options.fixtures = std::move(graphs);
      } else if (!exhaustive) {
        throw Error("choose --exhaustive or --fixtures DIR");
      }
      const LocalRule f = load_rule(rule_name, alphabet, radius);
      const RuleCheckReport report = check_local_rule(f, options);
      report_rule_check(report);
      if (report.aborted) throw ExitStatus{kInvalid};
      if (!report.ok()) throw ExitStatus{kPropertyFailed};
      std::cout << "rule " << f.name << " is a local rule" << (report.exhaustive ? "" : " on the supplied disks")
                << '\n';
    } else if (*step || *run) {
      Gcg x = read_gcg(input);
      const LocalRule f = load_rule(rule_name, x.alphabet(), radius);
      const Dynamics F = dynamics_of(f);
      if (!dot_dir.empty()) {
        fs::create_directories(dot_dir);
        std::ofstream(fs::path(dot_dir) / "step_0.dot") << to_dot(x, "step 0");
      }
      std::vector<VertexId> tracker(x.size());
      for (VertexId u = 0; u < x.size(); ++u) tracker[u] = u;
      const Gcg start = x;
      for (unsigned k = 1; k <= steps; ++k) {
        Evolution e = F(x);
        for (auto& t : tracker) t = e.tracker[t];
        x = std::move(e.image);
        if (!dot_dir.empty())
          std::ofstream(fs::path(dot_dir) / ("step_" + std::to_string(k) + ".dot")) << to_dot(x, "step " + std::to_string(k));
      }
      if (!tracker_file.empty())
        write_json(tracker_file, tracker_to_json(tracker_words(start, Evolution{x, tracker})));
      print(gcg_to_json(x));
    } else if (*compose_cmd) {
      const auto comma = rules.find(',');
      if (comma == std::string::npos) throw Error("--rules expects two names separated by a comma");
      const Gcg x = read_gcg(input);
      const LocalRule f = load_rule(rules.substr(0, comma), x.alphabet(), 0);
      const LocalRule g = load_rule(rules.substr(comma + 1), x.alphabet(), 0);
      const LocalRule h = compose(f, g);
      const Evolution once = apply(h, x);
      const Evolution twice = sequence(dynamics_of(f), dynamics_of(g))(x);
      std::cerr << "composed radius: " << h.radius << '\n';
      print(gcg_to_json(once.image));
      if (!(once.image == twice.image) || once.tracker != twice.tracker) {
        std::cerr << "composed rule disagrees with sequential application\n";
        throw ExitStatus{kPropertyFailed};
      }
    } else if (*enum_cmd) {
      const AlphabetPtr alphabet = make_alphabet(ports, sigma, delta);
      const std::size_t count = for_each_disk(alphabet, n, [count_only](const Gcg& d) {
        if (!count_only) std::cout << gcg_to_json(d).dump() << '\n';
        return true;
      });
      if (count_only) std::cout << count << '\n';
    } else if (*export_cmd) {
      for (const auto& f : standard_fixtures()) {
        const fs::path dir = fs::path(out_dir) / f.family;
        fs::create_directories(dir);
        write_json(dir / (f.name + ".json"), gcg_to_json(f.graph));
      }
    }
  } catch (const ExitStatus& status) {
    return status.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
