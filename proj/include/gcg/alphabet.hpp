#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gcg {

/// Index of a port symbol inside its alphabet.
using Port = std::uint8_t;
/// Index of a vertex or edge state inside Sigma / Delta.
using Label = std::uint16_t;
/// Index of a vertex inside a concrete graph or a canonical form.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// Thrown for malformed input, violated preconditions and rule failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The port set pi (ordered; declaration order is the total order used for
/// canonical naming) together with the state sets Sigma and Delta.
struct Alphabet {
  std::string ports;
  std::vector<std::string> sigma;
  std::vector<std::string> delta;

  std::size_t port_count() const { return ports.size(); }
  char port_symbol(Port p) const { return ports.at(p); }
  std::optional<Port> port_index(char symbol) const;
  Port require_port(char symbol) const;

  std::optional<Label> sigma_index(std::string_view state) const;
  std::optional<Label> delta_index(std::string_view state) const;

  /// Throws Error when ports are empty or repeated, or state names repeat.
  void validate() const;

  bool operator==(const Alphabet&) const = default;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string ports, std::vector<std::string> sigma = {},
                          std::vector<std::string> delta = {});

/// Same ports and states; pointer identity is not required.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace gcg
