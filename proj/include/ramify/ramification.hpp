#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ramify/group.hpp"
#include "ramify/tuples.hpp"

namespace ramify {

/// An ordered tuple of elements with product 1 generating its group.
/// For mixed structures the entries are indices into G and generate H.
struct SphericalSystem {
  const GroupTable* group = nullptr;
  std::vector<Elem> elems;

  std::size_t length() const { return elems.size(); }
  /// Sorted element orders.
  TupleType type() const;
  auto operator<=>(const SphericalSystem& o) const { return elems <=> o.elems; }
  bool operator==(const SphericalSystem& o) const { return elems == o.elems; }
};

struct UnmixedStructure {
  SphericalSystem t1, t2;
  auto operator<=>(const UnmixedStructure& o) const = default;
  bool operator==(const UnmixedStructure& o) const = default;
};

struct MixedStructure {
  const GroupTable* group = nullptr;
  std::vector<Elem> h;  ///< sorted elements of the index-two subgroup
  SphericalSystem t;

  auto operator<=>(const MixedStructure& o) const {
    if (auto c = h <=> o.h; c != 0) return c;
    return t <=> o.t;
  }
  bool operator==(const MixedStructure& o) const { return h == o.h && t == o.t; }
};

/// Conjugation closures of cyclic subgroups, precomputed per element.
class SigmaTable {
 public:
  /// Conjugation by all of g.
  explicit SigmaTable(const GroupTable& g);
  /// Conjugation by `conjugators` only (which must form a subgroup).
  SigmaTable(const GroupTable& g, std::span<const Elem> conjugators);

  /// Union of the conjugates of <x>.
  const ElementSet& cyclic_closure(Elem x) const { return masks_[x]; }
  ElementSet sigma(std::span<const Elem> elems) const;

 private:
  void build(const GroupTable& g, std::span<const Elem> conjugators);
  std::vector<ElementSet> masks_;
};

/// Sigma(T) computed directly: all conjugates of all powers of the entries.
ElementSet sigma(const SphericalSystem& t);
/// Throws GroupMismatch if the systems live over different groups.
bool is_disjoint(const SphericalSystem& t1, const SphericalSystem& t2);

bool is_spherical(const GroupTable& g, std::span<const Elem> elems);

struct SearchOptions {
  bool class_reps = true;      ///< first entry ranges over conjugacy-class representatives
  bool all_orderings = false;  ///< also take every rearrangement of the type
  std::size_t limit = 0;       ///< stop after this many results; 0 means no limit
  unsigned jobs = 1;
};

/// Systems whose i-th entry has order a[i] (or, with all_orderings, any
/// rearrangement of a). The last entry is forced by the product; sorted output.
std::vector<SphericalSystem> enumerate_spherical(const GroupTable& g, const TupleType& a,
                                                 const SearchOptions& opts = {});

/// Disjoint pairs; opts apply to T1 (class_reps prunes T1 only), T2 ranges
/// over all systems of its type.
std::vector<UnmixedStructure> enumerate_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2,
                                                const SearchOptions& opts = {});
bool exists_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2, unsigned jobs = 1);

/// Structures (H, T) over every index-two subgroup H.
std::vector<MixedStructure> enumerate_mixed(const GroupTable& g, const TupleType& a,
                                            const SearchOptions& opts = {});

/// The mixed conditions for T inside H (T is assumed spherical for H).
struct MixedConditions {
  bool outer_disjoint = false;      ///< T and gTg^-1 disjoint for g outside H
  bool no_outer_squares = false;    ///< g^2 not in Sigma(T) for g outside H
  bool ok() const { return outer_disjoint && no_outer_squares; }
};
MixedConditions mixed_conditions(const GroupTable& g, std::span<const Elem> h, std::span<const Elem> t);

/// Precomputed data for checking many systems against one subgroup H.
class MixedChecker {
 public:
  MixedChecker(const GroupTable& g, std::span<const Elem> h);
  MixedConditions check(std::span<const Elem> t) const;

 private:
  const GroupTable* g_;
  SigmaTable table_;
  Elem outer_ = 0;
  ElementSet outer_squares_;
};

struct SurfaceInvariants {
  long long g1 = 0, g2 = 0;
  long long chi = 0, ksq = 0, pg = 0, q = 0;
  /// (g1-1)(g2-1) = |G| for unmixed, (g-1)^2 = |G| for mixed.
  bool product_identity = false;
};

/// Genus 1 + n*Theta(a)/2; throws NonIntegralGenus.
long long hurwitz_genus(std::size_t n, const TupleType& a);
SurfaceInvariants surface_invariants_unmixed(std::size_t group_order, const TupleType& a1, const TupleType& a2);
SurfaceInvariants surface_invariants_mixed(std::size_t group_order, const TupleType& a);
SurfaceInvariants surface_invariants(const UnmixedStructure& s);
SurfaceInvariants surface_invariants(const MixedStructure& s);

}  // namespace ramify
