#pragma once

#include <span>
#include <string>
#include <vector>

#include "ramify/group.hpp"
#include "ramify/tuples.hpp"

namespace ramify {

using IntegerMatrix = std::vector<std::vector<long long>>;

enum class PivotRule {
  smallest,       ///< smallest nonzero absolute value in the remaining block
  first_nonzero,  ///< first nonzero entry in row-major order
};

/// Diagonal of the Smith normal form, without unit entries. A zero entry
/// stands for a free cyclic factor. The result is in divisibility order
/// with the zeros last.
std::vector<unsigned long long> smith_invariants(IntegerMatrix m, PivotRule rule = PivotRule::smallest);

/// Invariant factors of the abelianization of the polygonal group
/// <t1..tr | t1...tr = 1 = ti^mi>.
std::vector<unsigned long long> polygonal_abelianization(std::span<const unsigned> orders,
                                                         PivotRule rule = PivotRule::smallest);
/// The relation matrix used above: one row for the product relation and one per order.
IntegerMatrix polygonal_relations(std::span<const unsigned> orders);

/// Whether the finite abelian group with invariant factors `b` is a quotient
/// of the one with invariant factors `a`.
bool is_abelian_quotient(std::span<const unsigned long long> a, std::span<const unsigned long long> b);

/// Necessary condition for g to be a quotient of the polygonal group.
bool quotient_admissible(const GroupTable& g, std::span<const unsigned> orders);

/// "Z2 x Z4"; the trivial group is "1" and a free factor is "Z".
std::string format_abelian(std::span<const unsigned long long> factors);

}  // namespace ramify
