#pragma once

#include <span>
#include <vector>

#include "ramify/group.hpp"
#include "ramify/tuples.hpp"

namespace ramify::check {

// Deliberately naive re-verification that only uses the raw multiplication
// table, for cross-checking the search code.

struct SystemReport {
  bool type_matches = false;
  bool product_one = false;
  bool generates = false;
  bool ok() const { return type_matches && product_one && generates; }
};

struct UnmixedReport {
  SystemReport t1, t2;
  bool disjoint = false;
  bool ok() const { return t1.ok() && t2.ok() && disjoint; }
};

struct MixedReport {
  bool index_two = false;
  SystemReport t;           ///< generation is checked against H
  bool outer_disjoint = false;
  bool no_outer_squares = false;
  bool ok() const { return index_two && t.ok() && outer_disjoint && no_outer_squares; }
};

SystemReport verify_system(const GroupTable& g, std::span<const Elem> generated, const TupleType& a,
                           std::span<const Elem> t);
UnmixedReport verify_unmixed(const GroupTable& g, const TupleType& a1, std::span<const Elem> t1,
                             const TupleType& a2, std::span<const Elem> t2);
MixedReport verify_mixed(const GroupTable& g, std::span<const Elem> h, const TupleType& a, std::span<const Elem> t);

}  // namespace ramify::check
