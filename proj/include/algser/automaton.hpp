#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "algser/compiler.hpp"
#include "algser/kernel.hpp"

namespace algser {

/// Moore automaton reading base-p digits of n - offset, least significant
/// first.
struct Dfao {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> outputs;
  std::uint32_t initial = 0;
  /// transitions[state * p + digit]
  std::vector<std::uint32_t> transitions;
  std::uint32_t offset = 0;

  std::size_t size() const noexcept { return outputs.size(); }
  std::uint32_t next(std::uint32_t state, std::uint32_t digit) const { return transitions[state * p + digit]; }

  friend bool operator==(const Dfao&, const Dfao&) = default;
};

inline constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 20;

/// States are the column vectors reachable from the coordinates of f under
/// s -> A_r s, numbered in breadth-first discovery order; the output of s is
/// u s. Throws CapExceeded beyond `max_states`.
Dfao build_dfao(const CompiledSeries& cs, std::size_t max_states = kDefaultMaxStates);

/// Moore partition refinement, restricted to reachable states and renumbered
/// in breadth-first order.
Dfao minimize(const Dfao& d);

/// Throws std::invalid_argument if n < offset.
std::uint32_t run(const Dfao& d, const BigIndex& n);
std::uint32_t run_digits(const Dfao& d, std::span<const std::uint32_t> digits);

std::string export_dot(const Dfao& d);
nlohmann::json to_json(const Dfao& d);
/// Throws SchemaError naming the offending field.
Dfao dfao_from_json(const nlohmann::json& doc);

}  // namespace algser
