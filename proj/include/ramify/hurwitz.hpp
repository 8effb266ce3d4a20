#pragma once

#include <cstddef>
#include <vector>

#include "ramify/automorphism.hpp"
#include "ramify/ramification.hpp"

namespace ramify {

/// sigma_i for 1 <= i < r: (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^-1, g_i, ..).
/// Throws IndexOutOfRange.
SphericalSystem braid_move(const SphericalSystem& t, std::size_t i);
SphericalSystem braid_move_inverse(const SphericalSystem& t, std::size_t i);

/// Partition of a structure set into orbits. The domain is sorted, orbits
/// are numbered by their least member, and reps[k] indexes that member.
template <class S>
struct OrbitPartition {
  std::vector<S> domain;
  std::vector<std::size_t> orbit_id;
  std::vector<std::size_t> reps;

  std::size_t count() const { return reps.size(); }
};

/// Orbits of B_r x B_s x Aut(G) acting on an explicit structure set, which
/// must be closed under the action (InvalidConstruction otherwise).
OrbitPartition<UnmixedStructure> orbits_unmixed(const GroupTable& g, std::vector<UnmixedStructure> structures,
                                                const AutGroup& aut);
/// Orbits of B_r x Aut(G) on mixed structures, same contract.
OrbitPartition<MixedStructure> orbits_mixed(const GroupTable& g, std::vector<MixedStructure> structures,
                                            const AutGroup& aut);

/// The full structure sets (every ordering of the types), suitable as
/// input for orbits_unmixed / orbits_mixed.
std::vector<UnmixedStructure> all_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2,
                                          unsigned jobs = 1);
std::vector<MixedStructure> all_mixed(const GroupTable& g, const TupleType& a, unsigned jobs = 1);

struct UnmixedOrbitCount {
  std::size_t orbits = 0;
  std::size_t structures = 0;  ///< size of the full structure set
  std::vector<UnmixedStructure> reps;
};

struct MixedOrbitCount {
  std::size_t orbits = 0;
  std::size_t structures = 0;
  std::vector<MixedStructure> reps;
};

/// Same orbit counts as the explicit routes, computed on braid orbits of the
/// single systems instead of on the (much larger) set of pairs.
UnmixedOrbitCount count_orbits_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2,
                                       const AutGroup& aut, unsigned jobs = 1);
MixedOrbitCount count_orbits_mixed(const GroupTable& g, const TupleType& a, const AutGroup& aut,
                                   unsigned jobs = 1);

int dimension_unmixed(const TupleType& a1, const TupleType& a2);
int dimension_mixed(const TupleType& a);

}  // namespace ramify
