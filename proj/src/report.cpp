#include "ramify/report.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "ramify/automorphism.hpp"
#include "ramify/catalog.hpp"
#include "ramify/checker.hpp"
#include "ramify/error.hpp"
#include "ramify/hurwitz.hpp"

namespace ramify::report {

namespace {

TableRow unmixed_row(const char* g, std::size_t order, const char* a, const char* b, long long g1, long long g2,
                     std::size_t n, int d) {
  return TableRow{g, order, false, parse_type(a), parse_type(b), g1, g2, n, d};
}

const char* flag(bool ok) { return ok ? "PASS" : "FAIL"; }

long long product_of_genera(const RowResult& r) { return (r.inv.g1 - 1) * (r.inv.g2 - 1); }

}  // namespace

const std::vector<TableRow>& table_rows() {
  // The third row prints B = [2,2,2,2]; its genus and alpha columns need
  // five entries, which is what is used here.
  static const std::vector<TableRow> rows = {
      unmixed_row("A5", 60, "2,5,5", "3,3,3,3", 20, 3, 1, 1),
      unmixed_row("A5", 60, "5,5,5", "2,2,2,3", 5, 12, 1, 1),
      unmixed_row("A5", 60, "3,3,5", "2,2,2,2,2", 15, 4, 1, 1),
      unmixed_row("S4xZ2", 48, "2,4,6", "2,2,2,2,2,2", 24, 2, 1, 3),
      unmixed_row("G32", 32, "2,2,4,4", "2,2,2,4", 4, 8, 1, 2),
      unmixed_row("Z5^2", 25, "5,5,5", "5,5,5", 5, 5, 2, 0),
      unmixed_row("S4", 24, "3,4,4", "2,2,2,2,2,2", 12, 2, 1, 3),
      unmixed_row("G16", 16, "2,2,4,4", "2,2,4,4", 4, 4, 1, 2),
      unmixed_row("D4xZ2", 16, "2,2,2,4", "2,2,2,2,2,2", 8, 2, 1, 4),
      unmixed_row("Z2^4", 16, "2,2,2,2,2", "2,2,2,2,2", 4, 4, 1, 4),
      unmixed_row("Z3^2", 9, "3,3,3,3", "3,3,3,3", 3, 3, 1, 2),
      unmixed_row("Z2^3", 8, "2,2,2,2,2", "2,2,2,2,2,2", 4, 2, 1, 5),
      TableRow{"G256_1", 256, true, parse_type("4,4,4"), {}, 16, 16, 3, 0},
      TableRow{"G256_2", 256, true, parse_type("4,4,4"), {}, 16, 16, 1, 0},
  };
  return rows;
}

bool RowResult::genus_ok() const {
  if (!error.empty()) return false;
  if (row.mixed) return row.genus1 == inv.g1 - 1 && row.genus2 == inv.g1 - 1;
  return row.genus1 == inv.g2 - 1 && row.genus2 == inv.g1 - 1;
}

bool RowResult::identities_ok() const {
  if (!error.empty()) return false;
  long long order = static_cast<long long>(row.order);
  long long lhs = row.mixed ? (inv.g1 - 1) * (inv.g1 - 1) : product_of_genera(*this);
  return inv.product_identity && lhs == order && inv.ksq == 8 && inv.chi == 1;
}

bool RowResult::pass() const {
  return error.empty() && order_ok && exists_ok() && orbits_ok() && dimension_ok() && genus_ok() &&
         identities_ok() && reps_verified;
}

bool TableReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass(); }) &&
         std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureResult& f) { return f.pass(); });
}

RowResult evaluate_row(const TableRow& row, unsigned jobs) {
  RowResult r;
  r.row = row;
  try {
    GroupTable g = catalog::build(row.group);
    r.order_ok = g.order() == row.order;
    AutGroup aut = automorphisms(g, jobs);
    if (row.mixed) {
      r.inv = surface_invariants_mixed(g.order(), row.a);
      r.dimension = dimension_mixed(row.a);
      SearchOptions o;
      o.limit = 1;
      o.jobs = jobs;
      r.exists = !enumerate_mixed(g, row.a, o).empty();
      auto count = count_orbits_mixed(g, row.a, aut, jobs);
      r.orbits = count.orbits;
      r.structures = count.structures;
      r.reps_verified = true;
      for (const auto& s : count.reps) {
        r.reps_verified = r.reps_verified && check::verify_mixed(g, s.h, row.a, s.t.elems).ok();
      }
    } else {
      r.inv = surface_invariants_unmixed(g.order(), row.a, row.b);
      r.dimension = dimension_unmixed(row.a, row.b);
      r.exists = exists_unmixed(g, row.a, row.b, jobs);
      auto count = count_orbits_unmixed(g, row.a, row.b, aut, jobs);
      r.orbits = count.orbits;
      r.structures = count.structures;
      r.reps_verified = true;
      for (const auto& s : count.reps) {
        r.reps_verified =
            r.reps_verified && check::verify_unmixed(g, row.a, s.t1.elems, row.b, s.t2.elems).ok();
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<FixtureResult> verify_fixtures() {
  std::vector<FixtureResult> out;
  for (const auto& f : catalog::model_fixtures()) {
    FixtureResult r;
    r.id = f.id;
    const GroupTable& g = *f.group;
    if (f.mixed) {
      auto h = to_elements(generated_subgroup(g, f.t1));
      auto rep = check::verify_mixed(g, h, f.a1, f.t1);
      r.orders = rep.t.type_matches;
      r.product = rep.t.product_one;
      r.generation = rep.t.generates && rep.index_two;
      r.disjoint = rep.outer_disjoint && rep.no_outer_squares;
    } else {
      auto rep = check::verify_unmixed(g, f.a1, f.t1, f.a2, f.t2);
      r.orders = rep.t1.type_matches && rep.t2.type_matches;
      r.product = rep.t1.product_one && rep.t2.product_one;
      r.generation = rep.t1.generates && rep.t2.generates;
      r.disjoint = rep.disjoint;
    }
    out.push_back(r);
  }
  return out;
}

TableReport verify_table(unsigned jobs) {
  const auto& rows = table_rows();
  TableReport rep;
  rep.rows.resize(rows.size());
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) rep.rows[i] = evaluate_row(rows[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) rep.rows[i] = evaluate_row(rows[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  rep.fixtures = verify_fixtures();
  return rep;
}

void print_table(std::ostream& os, const TableReport& r) {
  os << std::left;
  os << std::setw(4) << "#" << std::setw(8) << "group" << std::setw(5) << "|G|" << std::setw(9) << "case"
     << std::setw(12) << "A" << std::setw(15) << "B" << std::setw(6) << "exist" << std::setw(10) << "N"
     << std::setw(10) << "D" << std::setw(21) << "genus (g-1)" << std::setw(10) << "g" << std::setw(7) << "ident"
     << "checked\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& x = r.rows[i];
    const auto& row = x.row;
    std::ostringstream n, d, genus, g;
    n << x.orbits << "/" << row.n << " " << flag(x.orbits_ok());
    d << x.dimension << "/" << row.d << " " << flag(x.dimension_ok());
    if (row.mixed) {
      genus << x.inv.g1 - 1 << "," << x.inv.g1 - 1;
      g << x.inv.g1 << "," << x.inv.g1;
    } else {
      genus << x.inv.g2 - 1 << "," << x.inv.g1 - 1;
      g << x.inv.g2 << "," << x.inv.g1;
    }
    genus << " vs " << row.genus1 << "," << row.genus2 << " " << flag(x.genus_ok());
    os << std::setw(4) << i + 1 << std::setw(8) << row.group << std::setw(5) << row.order << std::setw(9)
       << (row.mixed ? "mixed" : "unmixed") << std::setw(12) << row.a.str() << std::setw(15)
       << (row.mixed ? "-" : row.b.str()) << std::setw(6) << flag(x.exists_ok() && x.order_ok) << std::setw(10)
       << n.str() << std::setw(10) << d.str() << std::setw(21) << genus.str() << std::setw(10) << g.str()
       << std::setw(7) << flag(x.identities_ok()) << flag(x.reps_verified) << "\n";
    if (!x.error.empty()) os << "    error: " << x.error << "\n";
  }
  os << "\nfixtures\n";
  for (const auto& f : r.fixtures) {
    os << "  " << std::setw(12) << f.id << " orders " << flag(f.orders) << "  product " << flag(f.product)
       << "  generation " << flag(f.generation) << "  disjoint " << flag(f.disjoint) << "\n";
  }
  os << "\ngenus columns are compared with (g(B)-1, g(A)-1), where g is the Hurwitz genus of the curve\n";
  os << "carrying the system of type A resp. B; the g column shows the genera themselves.\n";
  os << "\n" << (r.pass() ? "all checks PASS" : "some checks FAIL") << "\n";
}

void print_machine(std::ostream& os, const TableReport& r) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& x = r.rows[i];
    const auto& row = x.row;
    os << "row=" << i + 1 << " group=" << row.group << " order=" << row.order
       << " case=" << (row.mixed ? "mixed" : "unmixed") << " A=" << row.a.str();
    if (!row.mixed) os << " B=" << row.b.str();
    os << " exists=" << flag(x.exists_ok() && x.order_ok) << " structures=" << x.structures
       << " N=" << x.orbits << " N_table=" << row.n << " N_check=" << flag(x.orbits_ok()) << " D=" << x.dimension
       << " D_table=" << row.d << " D_check=" << flag(x.dimension_ok());
    if (row.mixed) {
      os << " g=" << x.inv.g1 << " g_minus_1=" << x.inv.g1 - 1;
    } else {
      os << " gA=" << x.inv.g1 << " gB=" << x.inv.g2 << " gA_minus_1=" << x.inv.g1 - 1
         << " gB_minus_1=" << x.inv.g2 - 1;
    }
    os << " genus_table=" << row.genus1 << "," << row.genus2 << " genus_check=" << flag(x.genus_ok())
       << " chi=" << x.inv.chi << " K2=" << x.inv.ksq << " identities=" << flag(x.identities_ok())
       << " reps_verified=" << flag(x.reps_verified) << " status=" << flag(x.pass());
    if (!x.error.empty()) os << " error=\"" << x.error << "\"";
    os << "\n";
  }
  for (const auto& f : r.fixtures) {
    os << "fixture=" << f.id << " orders=" << flag(f.orders) << " product=" << flag(f.product)
       << " generation=" << flag(f.generation) << " disjoint=" << flag(f.disjoint) << " status=" << flag(f.pass())
       << "\n";
  }
  os << "overall=" << flag(r.pass()) << "\n";
}

std::vector<SweepEntry> sweep(std::size_t order, const TupleType& a1, const std::optional<TupleType>& a2,
                              const std::vector<GroupTable>* groups, unsigned jobs) {
  std::vector<GroupTable> builtin;
  if (!groups) {
    if (order == 0 || order > catalog::kTinyOrderLimit) {
      throw MissingCatalog("no built-in groups of order " + std::to_string(order) +
                           "; supply a group file");
    }
    builtin = catalog::tiny_order_sweep(order);
    groups = &builtin;
  }
  if (groups->empty()) throw MissingCatalog("no groups of order " + std::to_string(order));
  // The structure forces |G| = alpha(A1) alpha(A2), resp. beta(A)^2.
  bool feasible = false;
  if (a2) {
    auto x = a1.alpha(), y = a2->alpha();
    feasible = x && y && *x * *y == Rational(static_cast<long long>(order));
  } else {
    auto b = a1.beta();
    feasible = b && *b * *b == Rational(static_cast<long long>(order));
  }
  std::vector<SweepEntry> out;
  for (const auto& g : *groups) {
    SweepEntry e;
    e.group = g.label();
    if (g.order() != order) throw MissingCatalog(g.label() + " does not have order " + std::to_string(order));
    if (!feasible) {
      e.filtered = true;
    } else if (a2) {
      e.admits = exists_unmixed(g, a1, *a2, jobs);
    } else {
      SearchOptions o;
      o.limit = 1;
      o.jobs = jobs;
      e.admits = !enumerate_mixed(g, a1, o).empty();
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace ramify::report
