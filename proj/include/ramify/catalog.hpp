#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ramify/group.hpp"
#include "ramify/metabelian.hpp"
#include "ramify/pc_group.hpp"
#include "ramify/tuples.hpp"

namespace ramify::catalog {

struct CatalogEntry {
  std::string name;
  std::size_t expected_order;
  std::string description;
};

/// The named built-in groups, in listing order.
const std::vector<CatalogEntry>& entries();

/// Builds a named group. Besides the entries above this accepts Z<n>,
/// Z<n>^<k>, D<n> (dihedral of order 2n), Q8, S<n> and A<n> (n <= 7).
/// Throws UnknownName.
GroupTable build(std::string_view name, std::size_t order_bound = kDefaultOrderBound);

/// Z_{d1} x ... x Z_{dk} with labels like "(1,0,3)".
GroupTable abelian_group(const std::vector<unsigned>& invariants, std::string label,
                         std::size_t order_bound = kDefaultOrderBound);

/// Construction data behind the metabelian built-ins.
MetabelianData g16_data();
MetabelianData g32_data();
MetabelianData d4_data();
/// The metabelian data listed for the two groups of order 256 (which = 1 or 2).
MetabelianData g256_data(int which);
/// The polycyclic presentations of the named groups.
PcPresentation g16_presentation();
PcPresentation g32_presentation();
PcPresentation g256_presentation(int which);

/// Element of the order-256 groups written as (n, q) in Z2^5 x Z2^3,
/// realised as g4^n1...g8^n5 * g1^q1 g2^q2 g3^q3.
Elem g256_element(const GroupTable& g, const PcPresentation& pc, const std::vector<long long>& n,
                  const std::vector<long long>& q);

/// Reads the first group from a group file (see README for the format).
GroupTable ingest(const std::filesystem::path& path, std::size_t order_bound = kDefaultOrderBound);
/// Reads every group in a group file.
std::vector<GroupTable> ingest_all(const std::filesystem::path& path, std::size_t order_bound = kDefaultOrderBound);
std::vector<GroupTable> ingest_text(std::string_view text, std::size_t order_bound = kDefaultOrderBound);

/// One group per isomorphism class of order n <= 16.
std::vector<GroupTable> tiny_order_sweep(std::size_t n);
inline constexpr std::size_t kTinyOrderLimit = 16;

/// A generating system or structure printed for one of the built-in groups.
struct Fixture {
  std::string id;
  std::string group_name;
  std::shared_ptr<const GroupTable> group;
  bool mixed = false;
  TupleType a1, a2;
  std::vector<Elem> t1, t2;  ///< for mixed fixtures t1 is T and t2 is empty
};

std::vector<Fixture> model_fixtures();

}  // namespace ramify::catalog
