#include "gcg/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gcg {

namespace {

using PatchCache = std::unordered_map<Gcg, NamedGraph, GcgHash>;

const NamedGraph& patch_for(const LocalRule& f, const Gcg& disk, PatchCache& cache) {
  auto it = cache.find(disk);
  if (it == cache.end()) it = cache.emplace(disk, evaluate(f, disk)).first;
  return it->second;
}

std::map<Atom, VertexId> atom_index(const NamedGraph& g) {
  std::map<Atom, VertexId> index;
  for (VertexId v = 0; v < g.size(); ++v) {
    for (const auto& atom : g.names[v]) index.emplace(atom, v);
  }
  return index;
}

/// Union of u.f(X_u^r) over the given vertices. Throws InconsistentUnion.
NamedGraph patch_union(const LocalRule& f, const Gcg& x, unsigned reach, PatchCache& cache) {
  UnionBuilder builder(f.alphabet);
  for (VertexId u = 0; u < x.size() && x.distance(u) <= reach; ++u) {
    const NamedGraph& patch = patch_for(f, local_disk(x, u, f.radius).graph, cache);
    const ConsistencyVerdict verdict = builder.merge(prefix_graph(x, u, patch));
    if (!verdict.consistent())
      throw InconsistentUnion(verdict.clause, "rule " + f.name + " at '" + x.word_string(u) + "': " + verdict.reason);
  }
  return builder.take();
}

Evolution apply_cached(const LocalRule& f, const Gcg& x, PatchCache& cache) {
  if (!same_alphabet(x.alphabet(), f.alphabet)) throw Error("rule " + f.name + " expects a different alphabet");
  NamedGraph h = patch_union(f, x, ~0u, cache);
  const auto index = atom_index(h);
  const auto root = index.find(Atom{"", 0});
  if (root == index.end()) throw Error("rule " + f.name + " produced no pointer");
  h.pointer = root->second;
  const Rooted c = canonicalize_rooted(h);

  std::vector<VertexId> position(h.size(), kNoVertex);
  for (VertexId i = 0; i < c.origin.size(); ++i) position[c.origin[i]] = i;
  Evolution e{c.graph, std::vector<VertexId>(x.size())};
  for (VertexId u = 0; u < x.size(); ++u) {
    const auto it = index.find(Atom{x.word_string(u), 0});
    if (it == index.end()) throw Error("rule " + f.name + " loses vertex '" + x.word_string(u) + "'");
    e.tracker[u] = position[it->second];
  }
  return e;
}

}  // namespace

Evolution apply(const LocalRule& f, const Gcg& x) {
  PatchCache cache;
  return apply_cached(f, x, cache);
}

Dynamics dynamics_of(const LocalRule& f) {
  auto cache = std::make_shared<PatchCache>();
  return [f, cache](const Gcg& x) { return apply_cached(f, x, *cache); };
}

Dynamics sequence(const Dynamics& first, const Dynamics& second) {
  return [first, second](const Gcg& x) {
    Evolution a = first(x);
    Evolution b = second(a.image);
    Evolution out{std::move(b.image), std::vector<VertexId>(x.size())};
    for (VertexId u = 0; u < x.size(); ++u) out.tracker[u] = b.tracker[a.tracker[u]];
    return out;
  };
}

std::vector<std::pair<std::string, std::string>> tracker_words(const Gcg& x, const Evolution& e) {
  std::vector<std::pair<std::string, std::string>> out;
  for (VertexId u = 0; u < x.size(); ++u) out.emplace_back(x.word_string(u), e.image.word_string(e.tracker[u]));
  return out;
}

LocalRule compose(const LocalRule& f, const LocalRule& g) {
  if (!same_alphabet(f.alphabet, g.alphabet)) throw Error("cannot compose rules over different alphabets");
  const unsigned r = f.radius;
  const unsigned s = g.radius;
  const unsigned long suffixes = (f.suffix_bound + 1ul) * (g.suffix_bound + 1ul) - 1;
  if (suffixes > 0xffff) throw Error("composed suffix bound is too large");

  LocalRule h;
  h.name = f.name + "," + g.name;
  h.alphabet = f.alphabet;
  h.radius = 2 * r * s + r + s;
  h.suffix_bound = static_cast<Suffix>(suffixes);
  h.inflation = f.inflation * g.inflation;
  h.output_bound = g.inflation * (f.output_bound + 1) + g.output_bound;
  const Suffix stride = static_cast<Suffix>(g.suffix_bound + 1);
  const unsigned reach = h.radius - r;

  h.eval = [f, g, s, stride, reach](const Gcg& d) {
    PatchCache f_cache;
    const NamedGraph mid = patch_union(f, d, reach, f_cache);
    const PortTable table = mid.to_port_table();
    UnionBuilder builder(g.alphabet);
    for (VertexId v = 0; v < mid.size(); ++v) {
      const auto& name = mid.names[v];
      if (std::none_of(name.begin(), name.end(), [](const Atom& a) { return a.base.empty(); })) continue;
      const Rooted around = canonical_form(mid.alphabet, table, v, s);
      NamedGraph patch = evaluate(g, around.graph);
      for (auto& out_name : patch.names) {
        std::vector<Atom> atoms;
        for (const auto& atom : out_name) {
          const VertexId w = around.origin[*around.graph.resolve(parse_word(atom.base, *d.alphabet()))];
          for (const auto& inner : mid.names[w])
            atoms.push_back(Atom{inner.base, static_cast<Suffix>(inner.suffix * stride + atom.suffix)});
        }
        out_name = make_name(std::move(atoms));
      }
      const ConsistencyVerdict verdict = builder.merge(patch);
      if (!verdict.consistent()) throw InconsistentUnion(verdict.clause, "second rule: " + verdict.reason);
    }
    return builder.take();
  };
  return h;
}

// ---------------------------------------------------------------------------

void PropertyCheck::fail(std::string what) {
  ok = false;
  if (counterexamples.size() < 16) counterexamples.push_back(std::move(what));
}

void PropertyCheck::merge(const PropertyCheck& other) {
  ok = ok && other.ok;
  cases += other.cases;
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() < 16) counterexamples.push_back(c);
  }
}

namespace {

/// Memoizes F on the distinct shifts of one graph.
class ShiftCache {
 public:
  explicit ShiftCache(const Dynamics& f) : f_(f) {}
  const Evolution& operator()(const Gcg& x) {
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, f_(x)).first;
    return it->second;
  }

 private:
  const Dynamics& f_;
  std::unordered_map<Gcg, Evolution, GcgHash> cache_;
};

}  // namespace

PropertyCheck check_shift_invariance(const Dynamics& f, const Gcg& x) {
  PropertyCheck check;
  ShiftCache run(f);
  const Evolution e = run(x);
  for (VertexId u = 0; u < x.size(); ++u) {
    ++check.cases;
    const Gcg xu = shift(x, u);
    if (!(run(xu).image == shift(e.image, e.tracker[u])))
      check.fail("F(X_u) differs from F(X)_R(u) at u = '" + x.word_string(u) + "'");
  }
  return check;
}

PropertyCheck check_tracker_cocycle(const Dynamics& f, const Gcg& x) {
  PropertyCheck check;
  ShiftCache run(f);
  const Evolution e = run(x);
  for (VertexId u = 0; u < x.size(); ++u) {
    const Rooted xu = reroot(x, u);
    const Evolution& eu = run(xu.graph);
    for (VertexId v = 0; v < xu.graph.size(); ++v) {
      ++check.cases;
      const VertexId uv = xu.origin[v];
      const auto rhs = e.image.walk(e.tracker[u], eu.image.word(eu.tracker[v]));
      if (!rhs || *rhs != e.tracker[uv])
        check.fail("R_X(u.v) differs from R_X(u).R_X_u(v) at u = '" + x.word_string(u) + "', v = '" +
                   xu.graph.word_string(v) + "'");
    }
  }
  return check;
}

PropertyCheck check_bounded_inflation(const Dynamics& f, const Gcg& x, unsigned output_bound, unsigned inflation) {
  PropertyCheck check;
  const Evolution e = f(x);
  for (VertexId u = 0; u < x.size(); ++u) {
    ++check.cases;
    const unsigned size = e.image.distance(e.tracker[u]);
    const unsigned bound = inflation * vertex_size(x, u);
    if (size > bound)
      check.fail("|R_X(" + x.word_string(u) + ")| = " + std::to_string(size) + " exceeds " + std::to_string(bound));
  }

  const PortTable& t = e.image.table();
  std::vector<int> dist(t.size(), -1);
  std::deque<VertexId> queue;
  for (VertexId v : e.tracker) {
    if (dist[v] < 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (Port p = 0; p < t.ports; ++p) {
      const HalfEdge& h = t.at(v, p);
      if (!h.free() && dist[h.target] < 0) {
        dist[h.target] = dist[v] + 1;
        queue.push_back(h.target);
      }
    }
  }
  for (VertexId w = 0; w < t.size(); ++w) {
    ++check.cases;
    if (dist[w] < 0 || dist[w] > static_cast<int>(output_bound) + 1)
      check.fail("vertex '" + e.image.word_string(w) + "' of F(X) is farther than " +
                 std::to_string(output_bound + 1) + " from every tracked vertex");
  }
  return check;
}

unsigned continuity_radius(unsigned radius, unsigned m) { return 2 * (m + 1) * (radius + 1) - 1; }

PropertyCheck check_continuity_modulus(const Dynamics& f, unsigned radius, const Gcg& x, const Gcg& y, unsigned m) {
  PropertyCheck check;
  const unsigned n = continuity_radius(radius, m);
  if (!(disk(x, n) == disk(y, n))) return check;
  ++check.cases;
  const Evolution ex = f(x);
  const Evolution ey = f(y);
  if (!(disk(ex.image, m) == disk(ey.image, m)))
    check.fail("images differ within radius " + std::to_string(m) + " although inputs agree to " + std::to_string(n));

  auto restricted = [&](const Gcg& g, const Evolution& e) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (VertexId u = 0; u < g.size(); ++u) {
      if (e.image.distance(e.tracker[u]) > m + 1) continue;
      if (g.distance(u) > n + 1)
        check.fail("vertex '" + g.word_string(u) + "' outside the input disk lands in the image disk");
      pairs.emplace(g.word_string(u), e.image.word_string(e.tracker[u]));
    }
    return pairs;
  };
  if (restricted(x, ex) != restricted(y, ey))
    check.fail("trackers differ on the image disk of radius " + std::to_string(m));
  return check;
}

InvertibilityReport check_invertibility(const Dynamics& f, const std::vector<Gcg>& configs, const Dynamics* inverse) {
  InvertibilityReport report;
  std::unordered_map<Gcg, std::size_t, GcgHash> seen;
  if (inverse) {
    report.inverse_recovers_inputs = true;
    report.inverse_shift_invariant = true;
    report.inverse_tracker_is_r_inverse = true;
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const Gcg& x = configs[i];
    const Evolution e = f(x);
    auto [it, fresh] = seen.emplace(e.image, i);
    if (!fresh) {
      report.injective = false;
      report.witnesses.push_back("configurations " + std::to_string(it->second) + " and " + std::to_string(i) +
                                 " have the same image");
    }
    std::vector<bool> hit(e.image.size(), false);
    for (VertexId t : e.tracker) hit[t] = true;
    if (e.image.size() != x.size() || std::find(hit.begin(), hit.end(), false) != hit.end()) {
      report.trackers_bijective = false;
      report.witnesses.push_back("R_X is not a bijection on configuration " + std::to_string(i));
    }
    if (!inverse) continue;

    const Evolution back = (*inverse)(e.image);
    if (!(back.image == x)) {
      report.inverse_recovers_inputs = false;
      report.witnesses.push_back("inverse does not recover configuration " + std::to_string(i));
      continue;
    }
    if (!check_shift_invariance(*inverse, e.image).ok || !check_tracker_cocycle(*inverse, e.image).ok) {
      report.inverse_shift_invariant = false;
      report.witnesses.push_back("inverse is not shift-invariant at the image of configuration " + std::to_string(i));
    }
    for (VertexId u = 0; u < x.size(); ++u) {
      if (back.tracker[e.tracker[u]] != u) {
        report.inverse_tracker_is_r_inverse = false;
        report.witnesses.push_back("S_F(X)(R_X(" + x.word_string(u) + ")) = " +
                                   x.word_string(back.tracker[e.tracker[u]]) + " on configuration " +
                                   std::to_string(i));
        break;
      }
    }
  }
  return report;
}

std::vector<Gcg> outside_image(const Dynamics& f, const std::vector<Gcg>& domain, const std::vector<Gcg>& range) {
  std::unordered_set<Gcg, GcgHash> images;
  for (const auto& x : domain) images.insert(f(x).image);
  std::vector<Gcg> out;
  for (const auto& y : range) {
    if (!images.count(y)) out.push_back(y);
  }
  return out;
}

Classification classify(const Dynamics& f, const AlphabetPtr& alphabet, const std::vector<Gcg>& configs) {
  Classification c;
  c.graph_only = alphabet->sigma.size() <= 1 && alphabet->delta.size() <= 1;
  for (const auto& x : configs) {
    if (!(f(x).image.without_labels() == x.without_labels())) {
      c.state_only = false;
      break;
    }
  }
  return c;
}

}  // namespace gcg
