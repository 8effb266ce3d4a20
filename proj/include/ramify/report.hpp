#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramify/group.hpp"
#include "ramify/ramification.hpp"
#include "ramify/tuples.hpp"

namespace ramify::report {

/// One row of the classification table, as printed.
struct TableRow {
  std::string group;
  std::size_t order = 0;
  bool mixed = false;
  TupleType a, b;  ///< b is unused for mixed rows
  long long genus1 = 0, genus2 = 0;
  std::size_t n = 0;
  int d = 0;
};

const std::vector<TableRow>& table_rows();

struct RowResult {
  TableRow row;
  std::string error;  ///< set when the row could not be evaluated
  bool order_ok = false;
  bool exists = false;
  std::size_t orbits = 0;
  std::size_t structures = 0;
  int dimension = 0;
  SurfaceInvariants inv;
  bool reps_verified = false;  ///< every orbit representative passes the naive checker

  bool exists_ok() const { return exists; }
  bool orbits_ok() const { return error.empty() && orbits == row.n; }
  bool dimension_ok() const { return error.empty() && dimension == row.d; }
  /// Printed genera against (g(B)-1, g(A)-1), or (g-1, g-1) for mixed rows.
  bool genus_ok() const;
  /// (g1-1)(g2-1) = |G| or (g-1)^2 = |G|, K^2 = 8 and chi = 1.
  bool identities_ok() const;
  bool pass() const;
};

struct FixtureResult {
  std::string id;
  bool orders = false;
  bool product = false;
  bool generation = false;
  bool disjoint = false;  ///< disjointness, or both mixed conditions
  bool pass() const { return orders && product && generation && disjoint; }
};

struct TableReport {
  std::vector<RowResult> rows;
  std::vector<FixtureResult> fixtures;
  bool pass() const;
};

/// Evaluates all table rows (in parallel over rows when jobs > 1) and all
/// printed fixtures. Failures are recorded, never thrown.
TableReport verify_table(unsigned jobs = 1);
RowResult evaluate_row(const TableRow& row, unsigned jobs = 1);
std::vector<FixtureResult> verify_fixtures();

void print_table(std::ostream& os, const TableReport& r);
/// One key=value line per row and per fixture.
void print_machine(std::ostream& os, const TableReport& r);

struct SweepEntry {
  std::string group;
  bool admits = false;
  bool filtered = false;  ///< rejected by the order identity before any search
};

/// For each group of the given order (built-in list up to order 16, or
/// `groups` when given), whether it carries an unmixed structure of type
/// (a1, a2), or a mixed one of type a1 when `a2` is empty. Throws
/// MissingCatalog when no groups are available.
std::vector<SweepEntry> sweep(std::size_t order, const TupleType& a1, const std::optional<TupleType>& a2,
                              const std::vector<GroupTable>* groups = nullptr, unsigned jobs = 1);

}  // namespace ramify::report
