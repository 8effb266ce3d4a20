#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramify/group.hpp"

namespace ramify {

/// A polycyclic presentation on generators g1..gn (stored 0-based).
///
/// Relations are g_i^{p_i} = w and g_j^{g_i} = g_i^-1 g_j g_i = w with
/// w a word in generators later than g_i. Unlisted power relations are
/// trivial and unlisted conjugates are g_j itself.
struct PcPresentation {
  std::vector<unsigned> relative_orders;
  std::map<std::size_t, std::vector<std::size_t>> powers;
  /// Keyed by (j, i) with j > i.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> conjugates;

  std::size_t generator_count() const { return relative_orders.size(); }
};

/// Parses relations like "g1^2=g4, g2^g1=g2*g3". Relative orders default to 2.
PcPresentation parse_pc(std::string_view relations, std::size_t generators,
                        std::vector<unsigned> relative_orders = {});

/// Collects the presentation into a Cayley table. Element indices follow
/// the normal form g1^e1...gn^en read as a mixed-radix number with e1 most
/// significant. Throws NotAGroup if the presentation is inconsistent.
GroupTable pc_group(const PcPresentation& pc, std::string label,
                    std::size_t order_bound = kDefaultOrderBound);

/// Index of g1^e1...gn^en.
Elem pc_index(const PcPresentation& pc, std::span<const unsigned> exponents);

}  // namespace ramify
