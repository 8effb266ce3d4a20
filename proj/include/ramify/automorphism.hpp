#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ramify/group.hpp"

namespace ramify {

struct Homomorphism {
  const GroupTable* source = nullptr;
  const GroupTable* target = nullptr;
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
  /// Checks image[x*y] = image[x]*image[y] on the full table.
  bool is_homomorphism() const;
  bool is_bijective() const;
};

struct AutGroup {
  const GroupTable* base = nullptr;
  /// Sorted lexicographically by the images of `basis`.
  std::vector<Homomorphism> elements;
  /// Generating set of the group itself, used as the key for each automorphism.
  std::vector<Elem> basis;
  /// Indices into `elements` of a generating set of Aut(G).
  std::vector<std::size_t> generators;

  std::size_t order() const { return elements.size(); }
};

/// All automorphisms of `g`, by backtracking over images of a greedy
/// generating set. `jobs` > 1 splits the first-generator candidates over
/// threads; the result does not depend on it.
AutGroup automorphisms(const GroupTable& g, unsigned jobs = 1);

/// Refuses to materialise automorphism groups larger than this.
inline constexpr std::size_t kMaxAutomorphisms = 4'000'000;

/// Some isomorphism a -> b, if one exists.
std::optional<Homomorphism> find_isomorphism(const GroupTable& a, const GroupTable& b);
bool is_isomorphic(const GroupTable& a, const GroupTable& b);

/// Cheap isomorphism invariants: order, abelianization, (order, class size)
/// statistics, centre and derived subgroup sizes, index-two subgroup count.
bool same_invariants(const GroupTable& a, const GroupTable& b);

}  // namespace ramify
