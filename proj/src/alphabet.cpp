#include "gcg/alphabet.hpp"

#include <algorithm>
#include <set>

#include "gcg/path_word.hpp"

namespace gcg {

std::optional<Port> Alphabet::port_index(char symbol) const {
  const auto pos = ports.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Port>(pos);
}

Port Alphabet::require_port(char symbol) const {
  if (auto p = port_index(symbol)) return *p;
  throw Error(std::string("unknown port '") + symbol + "'");
}

namespace {

std::optional<Label> find_state(const std::vector<std::string>& states, std::string_view s) {
  const auto it = std::find(states.begin(), states.end(), s);
  if (it == states.end()) return std::nullopt;
  return static_cast<Label>(it - states.begin());
}

void check_unique(const std::vector<std::string>& states, const char* what) {
  std::set<std::string> seen(states.begin(), states.end());
  if (seen.size() != states.size()) throw Error(std::string("duplicate ") + what + " state");
}

}  // namespace

std::optional<Label> Alphabet::sigma_index(std::string_view state) const {
  return find_state(sigma, state);
}

std::optional<Label> Alphabet::delta_index(std::string_view state) const {
  return find_state(delta, state);
}

void Alphabet::validate() const {
  if (ports.empty()) throw Error("port alphabet is empty");
  if (ports.size() > 64) throw Error("port alphabet too large");
  std::set<char> seen(ports.begin(), ports.end());
  if (seen.size() != ports.size()) throw Error("duplicate port symbol");
  for (char c : ports) {
    if (c == '.' || c == ' ' || c == '"') throw Error("illegal port symbol");
  }
  check_unique(sigma, "vertex");
  check_unique(delta, "edge");
}

AlphabetPtr make_alphabet(std::string ports, std::vector<std::string> sigma,
                          std::vector<std::string> delta) {
  auto a = std::make_shared<Alphabet>(Alphabet{std::move(ports), std::move(sigma), std::move(delta)});
  a->validate();
  return a;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

bool shortlex_less(const PathWord& a, const PathWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

PathWord concat(PathWord a, const PathWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string format_word(const PathWord& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(w.size() * 3);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back('.');
    out.push_back(alphabet.port_symbol(w[i].out));
    out.push_back(alphabet.port_symbol(w[i].in));
  }
  return out;
}

PathWord parse_word(std::string_view text, const Alphabet& alphabet) {
  PathWord w;
  if (text.empty() || text == "e" || text == "\xCE\xB5") return w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (i + 2 > text.size()) throw Error("malformed path word '" + std::string(text) + "'");
    w.push_back({alphabet.require_port(text[i]), alphabet.require_port(text[i + 1])});
    i += 2;
    if (i < text.size()) {
      if (text[i] != '.') throw Error("malformed path word '" + std::string(text) + "'");
      ++i;
      if (i == text.size()) throw Error("malformed path word '" + std::string(text) + "'");
    }
  }
  return w;
}

}  // namespace gcg
