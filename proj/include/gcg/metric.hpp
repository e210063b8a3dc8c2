#pragma once

#include <optional>
#include <string>

#include "gcg/gcg.hpp"

namespace gcg {

/// 0, or 2^-r with r the minimal radius at which the disks differ. Stored
/// exactly as r.
struct Distance {
  std::optional<unsigned> r;

  bool zero() const { return !r.has_value(); }
  double value() const;
  /// "0" or "2^-r".
  std::string to_string() const;

  /// Compares the dyadic values: a larger r is a smaller distance.
  friend bool operator<(const Distance& a, const Distance& b);
  friend bool operator<=(const Distance& a, const Distance& b) { return !(b < a); }
  friend bool operator==(const Distance& a, const Distance& b) { return a.r == b.r; }
};

Distance max(const Distance& a, const Distance& b);

/// Absent iff X = Y. Throws Error on mismatched alphabets.
std::optional<unsigned> min_differing_radius(const Gcg& x, const Gcg& y);

Distance distance(const Gcg& x, const Gcg& y);

/// d(X, Y) < 2^-k, decided exactly.
bool closer_than(const Distance& d, unsigned k);

}  // namespace gcg
