#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gcg/dynamics.hpp"
#include "gcg/gcg.hpp"
#include "gcg/local_rule.hpp"
#include "gcg/named_graph.hpp"
#include "gcg/pathlang.hpp"

namespace gcg {

using Json = nlohmann::json;

/// Graph document:
///   {"ports": "ab", "sigma": [...], "delta": [...],
///    "vertices": [{"name": NAME, "label": "s"}, ...],
///    "edges": [{"a": [NAME, "a"], "b": [NAME, "b"], "label": "t"}, ...],
///    "pointer": NAME}
/// NAME is a string (one atom with the empty suffix) or an array of atoms,
/// each a string or [base, suffix] with suffix "" or a positive integer.
NamedGraph graph_from_json(const Json& doc);
Json graph_to_json(const NamedGraph& g);
Json gcg_to_json(const Gcg& x);

/// Reads and canonicalizes. Throws Error on malformed or invalid input.
Gcg read_gcg(const std::filesystem::path& path);
NamedGraph read_graph(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);

Json tracker_to_json(const std::vector<std::pair<std::string, std::string>>& pairs);

/// {"elements": [...], "product": [[name, ...], ...], "generators": [...]}
GroupTable group_from_json(const Json& doc);

std::string to_dot(const Gcg& x, const std::string& title = "G");

/// Array of {"disk": GCG, "output": named graph}.
Json rule_table_to_json(const LocalRule& f, const std::vector<Gcg>& disks);
/// A rule that looks its disk up in the table; unknown disks are an error.
LocalRule rule_from_table(const Json& table, const std::string& name, unsigned radius);

/// Every *.json graph file under the directory (recursively), sorted by path.
std::vector<Gcg> read_gcg_dir(const std::filesystem::path& dir);

}  // namespace gcg
