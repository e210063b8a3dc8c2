#include "gcg/metric.hpp"

#include <algorithm>
#include <cmath>

namespace gcg {

double Distance::value() const { return r ? std::ldexp(1.0, -static_cast<int>(*r)) : 0.0; }

std::string Distance::to_string() const { return r ? "2^-" + std::to_string(*r) : "0"; }

bool operator<(const Distance& a, const Distance& b) {
  if (!b.r) return false;
  if (!a.r) return true;
  return *a.r > *b.r;
}

Distance max(const Distance& a, const Distance& b) { return a < b ? b : a; }

std::optional<unsigned> min_differing_radius(const Gcg& x, const Gcg& y) {
  if (!same_alphabet(x.alphabet(), y.alphabet())) throw Error("graphs have different alphabets");
  if (x == y) return std::nullopt;
  // Once r reaches both eccentricities the disks are the graphs themselves,
  // which differ, so the loop ends there at the latest.
  const unsigned last = std::max(x.eccentricity(), y.eccentricity());
  for (unsigned r = 0; r < last; ++r) {
    if (!(disk(x, r) == disk(y, r))) return r;
  }
  return last;
}

Distance distance(const Gcg& x, const Gcg& y) { return Distance{min_differing_radius(x, y)}; }

bool closer_than(const Distance& d, unsigned k) { return !d.r || *d.r > k; }

}  // namespace gcg
