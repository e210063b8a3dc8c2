#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcg/gcg.hpp"
#include "gcg/local_rule.hpp"

namespace gcg {

/// F(X) together with the tracker R_X: tracker[u] is the vertex of `image`
/// that vertex u of X becomes.
struct Evolution {
  Gcg image;
  std::vector<VertexId> tracker;
};

using Dynamics = std::function<Evolution(const Gcg&)>;

/// Synchronous application: union of u.f(X_u^r) over every u, pointed at the
/// vertex containing eps. Throws InconsistentUnion or Error.
Evolution apply(const LocalRule& f, const Gcg& x);

/// The global dynamics of `f`, with a cache of rule outputs per disk.
Dynamics dynamics_of(const LocalRule& f);

/// (G, S) after (F, R): image G(F(X)), tracker S_{F(X)} o R_X.
Dynamics sequence(const Dynamics& first, const Dynamics& second);

/// Tracker as (word in X, word in F(X)) pairs, ordered by the X word.
std::vector<std::pair<std::string, std::string>> tracker_words(const Gcg& x, const Evolution& e);

/// Radius 2rs + r + s rule computing g after f in one step.
LocalRule compose(const LocalRule& f, const LocalRule& g);

struct PropertyCheck {
  bool ok = true;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string what);
  void merge(const PropertyCheck& other);
};

/// F(X_u) = F(X)_{R_X(u)} for every u.
PropertyCheck check_shift_invariance(const Dynamics& f, const Gcg& x);
/// R_X(u.v) = R_X(u).R_{X_u}(v) for every u and v.
PropertyCheck check_tracker_cocycle(const Dynamics& f, const Gcg& x);
/// |R_X(u)| <= inflation * vertex_size(X, u), and every vertex of F(X) lies
/// within output_bound + 1 of the image of R_X.
PropertyCheck check_bounded_inflation(const Dynamics& f, const Gcg& x, unsigned output_bound, unsigned inflation);
/// With n = 2(m+1)(r+1) - 1: if X^n = Y^n then F(X)^m = F(Y)^m and the
/// trackers restricted to the codomain disk m agree. Vacuous otherwise.
PropertyCheck check_continuity_modulus(const Dynamics& f, unsigned radius, const Gcg& x, const Gcg& y, unsigned m);
unsigned continuity_radius(unsigned radius, unsigned m);

struct InvertibilityReport {
  bool injective = true;
  bool trackers_bijective = true;
  /// Only filled when an inverse dynamics is supplied.
  std::optional<bool> inverse_recovers_inputs;
  std::optional<bool> inverse_shift_invariant;
  std::optional<bool> inverse_tracker_is_r_inverse;
  std::vector<std::string> witnesses;
};

/// Checks F on a finite set of configurations. When `inverse` is given it
/// is checked to undo F on the images, to be shift-invariant there, and
/// whether its tracker S_{F(X)} inverts R_X.
InvertibilityReport check_invertibility(const Dynamics& f, const std::vector<Gcg>& configs,
                                        const Dynamics* inverse = nullptr);

/// Configurations of `range` not of the form F(X) for X in `domain`.
std::vector<Gcg> outside_image(const Dynamics& f, const std::vector<Gcg>& domain, const std::vector<Gcg>& range);

struct Classification {
  bool state_only = true;
  bool graph_only = true;
};

Classification classify(const Dynamics& f, const AlphabetPtr& alphabet, const std::vector<Gcg>& configs);

}  // namespace gcg
