#include "gcg/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <unordered_map>

namespace gcg {

namespace {

Atom atom_from_json(const Json& j) {
  if (j.is_string()) return Atom{j.get<std::string>(), 0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_string()) throw Error("atom must be a string or [base, suffix]");
  Atom a{j[0].get<std::string>(), 0};
  const Json& z = j[1];
  if (z.is_number_unsigned()) {
    a.suffix = static_cast<Suffix>(z.get<unsigned>());
  } else if (z.is_string()) {
    const auto s = z.get<std::string>();
    if (!s.empty() && s != "e" && s != "ε") {
      try {
        a.suffix = static_cast<Suffix>(std::stoul(s));
      } catch (const std::exception&) {
        throw Error("bad suffix '" + s + "'");
      }
    }
  } else {
    throw Error("suffix must be a string or a number");
  }
  if (a.base == "ε") a.base.clear();
  return a;
}

VertexName name_from_json(const Json& j) {
  if (j.is_string()) return single_name(j.get<std::string>() == "ε" ? "" : j.get<std::string>());
  if (!j.is_array() || j.empty()) throw Error("vertex name must be a string or a non-empty array of atoms");
  std::vector<Atom> atoms;
  for (const auto& a : j) atoms.push_back(atom_from_json(a));
  const std::size_t before = atoms.size();
  VertexName name = make_name(std::move(atoms));
  if (name.size() != before) throw Error("vertex name repeats an atom");
  return name;
}

Json name_to_json(const VertexName& name) {
  Json out = Json::array();
  for (const auto& a : name) out.push_back(Json::array({a.base, a.suffix ? std::to_string(a.suffix) : ""}));
  return out;
}

std::vector<std::string> strings(const Json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  return doc.at(key).get<std::vector<std::string>>();
}

std::string ports_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  std::string ports;
  for (const auto& p : j) {
    const auto s = p.get<std::string>();
    if (s.size() != 1) throw Error("ports must be single characters");
    ports += s;
  }
  return ports;
}

}  // namespace

NamedGraph graph_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw Error("graph document must be an object");
    const AlphabetPtr alphabet = make_alphabet(ports_from_json(doc.at("ports")), strings(doc, "sigma"), strings(doc, "delta"));
    NamedGraph g(alphabet);
    std::map<VertexName, VertexId> index;
    for (const auto& v : doc.at("vertices")) {
      VertexName name = name_from_json(v.at("name"));
      std::optional<Label> label;
      if (v.contains("label") && !v.at("label").is_null()) {
        const auto s = v.at("label").get<std::string>();
        label = alphabet->sigma_index(s);
        if (!label) throw Error("unknown vertex state '" + s + "'");
      }
      if (index.count(name)) throw Error("duplicate vertex " + format_name(name));
      index[name] = g.add_vertex(name, label);
    }
    auto slot = [&](const Json& j) {
      if (!j.is_array() || j.size() != 2) throw Error("edge end must be [name, port]");
      const VertexName name = name_from_json(j[0]);
      const auto it = index.find(name);
      if (it == index.end()) throw Error("edge mentions unknown vertex " + format_name(name));
      const auto port = j[1].get<std::string>();
      if (port.size() != 1) throw Error("bad port '" + port + "'");
      return Slot{it->second, alphabet->require_port(port[0])};
    };
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        const Slot a = slot(e.at("a"));
        const Slot b = slot(e.at("b"));
        std::optional<Label> label;
        if (e.contains("label") && !e.at("label").is_null()) {
          const auto s = e.at("label").get<std::string>();
          label = alphabet->delta_index(s);
          if (!label) throw Error("unknown edge state '" + s + "'");
        }
        g.add_edge(a.vertex, a.port, b.vertex, b.port, label);
      }
    }
    if (doc.contains("pointer") && !doc.at("pointer").is_null()) {
      const VertexName name = name_from_json(doc.at("pointer"));
      const auto it = index.find(name);
      if (it == index.end()) throw Error("pointer names an unknown vertex");
      g.pointer = it->second;
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed graph document: ") + e.what());
  }
}

Json graph_to_json(const NamedGraph& g) {
  const Alphabet& a = *g.alphabet;
  Json doc;
  doc["ports"] = a.ports;
  doc["sigma"] = a.sigma;
  doc["delta"] = a.delta;
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.size(); ++v) {
    Json j;
    j["name"] = name_to_json(g.names[v]);
    if (g.labels[v]) j["label"] = a.sigma.at(*g.labels[v]);
    vertices.push_back(std::move(j));
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json j;
    j["a"] = Json::array({name_to_json(g.names[e.a.vertex]), std::string(1, a.port_symbol(e.a.port))});
    j["b"] = Json::array({name_to_json(g.names[e.b.vertex]), std::string(1, a.port_symbol(e.b.port))});
    if (e.label) j["label"] = a.delta.at(*e.label);
    edges.push_back(std::move(j));
  }
  doc["edges"] = std::move(edges);
  if (g.pointer) doc["pointer"] = name_to_json(g.names[*g.pointer]);
  return doc;
}

Json gcg_to_json(const Gcg& x) { return graph_to_json(x.to_named()); }

NamedGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return graph_from_json(doc);
}

Gcg read_gcg(const std::filesystem::path& path) { return canonicalize(read_graph(path)); }

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

Json tracker_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json out = Json::array();
  for (const auto& [from, to] : pairs) out.push_back(Json::array({from, to}));
  return out;
}

GroupTable group_from_json(const Json& doc) {
  try {
    GroupTable g;
    g.elements = doc.at("elements").get<std::vector<std::string>>();
    g.generators = doc.at("generators").get<std::vector<std::string>>();
    for (const auto& row : doc.at("product")) {
      std::vector<std::size_t> out;
      for (const auto& cell : row) {
        if (cell.is_number_unsigned()) {
          out.push_back(cell.get<std::size_t>());
          continue;
        }
        const auto name = cell.get<std::string>();
        const auto it = std::find(g.elements.begin(), g.elements.end(), name);
        if (it == g.elements.end()) throw Error("product mentions unknown element " + name);
        out.push_back(static_cast<std::size_t>(it - g.elements.begin()));
      }
      g.product.push_back(std::move(out));
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed group document: ") + e.what());
  }
}

std::string to_dot(const Gcg& x, const std::string& title) {
  const Alphabet& a = *x.alphabet();
  auto id = [&x](VertexId v) {
    const auto w = x.word_string(v);
    return "\"" + (w.empty() ? std::string("ε") : w) + "\"";
  };
  std::ostringstream os;
  os << "graph \"" << title << "\" {\n";
  for (VertexId v = 0; v < x.size(); ++v) {
    os << "  " << id(v);
    std::vector<std::string> attrs;
    if (v == 0) attrs.push_back("shape=doublecircle");
    if (auto l = x.label(v)) attrs.push_back("xlabel=\"" + a.sigma.at(*l) + "\"");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  for (VertexId v = 0; v < x.size(); ++v) {
    for (Port p = 0; p < a.port_count(); ++p) {
      const HalfEdge& h = x.slot(v, p);
      if (h.free() || std::make_pair(h.target, h.port) < std::make_pair(v, p)) continue;
      os << "  " << id(v) << " -- " << id(h.target) << " [taillabel=\"" << a.port_symbol(p) << "\", headlabel=\""
         << a.port_symbol(h.port) << "\"";
      if (h.label) os << ", label=\"" << a.delta.at(*h.label) << "\"";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Json rule_table_to_json(const LocalRule& f, const std::vector<Gcg>& disks) {
  Json out = Json::array();
  for (const auto& d : disks) {
    NamedGraph o = evaluate(f, d);
    out.push_back(Json{{"disk", gcg_to_json(d)}, {"output", graph_to_json(o)}});
  }
  return out;
}

LocalRule rule_from_table(const Json& table, const std::string& name, unsigned radius) {
  if (!table.is_array() || table.empty()) throw Error("rule table must be a non-empty array");
  auto rows = std::make_shared<std::unordered_map<Gcg, NamedGraph, GcgHash>>();
  LocalRule f;
  f.name = name;
  f.radius = radius;
  for (const auto& row : table) {
    const Gcg d = canonicalize(graph_from_json(row.at("disk")));
    if (!f.alphabet) f.alphabet = d.alphabet();
    if (!same_alphabet(f.alphabet, d.alphabet())) throw Error("rule table mixes alphabets");
    if (!(disk(d, radius) == d)) throw Error("rule table entry is not a disk of radius " + std::to_string(radius));
    NamedGraph out = graph_from_json(row.at("output"));
    out.pointer.reset();
    for (const auto& n : out.names) {
      for (const auto& atom : n) f.suffix_bound = std::max(f.suffix_bound, atom.suffix);
    }
    (*rows)[d] = std::move(out);
  }
  f.eval = [rows, name](const Gcg& d) {
    const auto it = rows->find(d);
    if (it == rows->end()) throw Error("rule " + name + " has no entry for this disk");
    return it->second;
  };
  return f;
}

std::vector<Gcg> read_gcg_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Gcg> out;
  for (const auto& p : files) out.push_back(read_gcg(p));
  return out;
}

}  // namespace gcg
