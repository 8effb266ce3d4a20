#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "ramify/catalog.hpp"
#include "ramify/checker.hpp"
#include "ramify/error.hpp"
#include "ramify/polygonal.hpp"
#include "ramify/ramification.hpp"

using namespace ramify;

namespace {

Elem z5(const GroupTable& g, int a, int b) { return *g.find_element("(" + std::to_string(a) + "," + std::to_string(b) + ")"); }

std::vector<std::vector<Elem>> elems_of(const std::vector<SphericalSystem>& v) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : v) out.push_back(s.elems);
  return out;
}

std::set<Elem> to_std(const ElementSet& s) {
  std::set<Elem> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.insert(static_cast<Elem>(i));
  return out;
}

// types worth trying on a small group: element orders that occur, lengths 3..5
std::vector<TupleType> candidate_types(const GroupTable& g) {
  std::set<unsigned> orders;
  for (std::size_t x = 1; x < g.order(); ++x) orders.insert(g.elem_order(static_cast<Elem>(x)));
  std::vector<TupleType> out;
  for (const char* t : {"2,2,2,2", "2,2,4,4", "2,2,2,4", "4,4,4", "2,4,4", "3,3,3", "2,2,2,2,2", "3,3,3,3",
                        "2,2,2,3", "2,6,6", "2,2,2,6", "5,5,5", "2,2,2,2,2,2", "2,4,8", "2,8,8", "3,6,6"}) {
    TupleType a = parse_type(t);
    bool ok = true;
    for (unsigned m : a.entries()) ok = ok && orders.count(m);
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<GroupTable> groups_up_to_16() {
  std::vector<GroupTable> v;
  for (std::size_t n = 1; n <= 16; ++n)
    for (auto& g : catalog::tiny_order_sweep(n)) v.push_back(std::move(g));
  return v;
}

}  // namespace

TEST_CASE("sigma sets in Z5^2") {
  GroupTable g = catalog::build("Z5^2");
  SphericalSystem t{&g, {z5(g, 1, 0), z5(g, 0, 1), z5(g, 4, 4)}};
  SphericalSystem u{&g, {z5(g, 1, 2), z5(g, 3, 4), z5(g, 1, 4)}};
  CHECK(sigma(t).count() == 13);
  CHECK(is_spherical(g, t.elems));
  CHECK(is_spherical(g, u.elems));
  CHECK(is_disjoint(t, u));
  CHECK_FALSE(is_disjoint(t, t));
  GroupTable other = catalog::build("Z3^2");
  SphericalSystem w{&other, {1, 2, 3}};
  CHECK_THROWS_AS(is_disjoint(t, w), GroupMismatch);
}

TEST_CASE("sigma sets agree with the naive union and are conjugation closed") {
  for (const char* name : {"A5", "S4", "G16", "D4xZ2", "S4xZ2"}) {
    CAPTURE(name);
    GroupTable g = catalog::build(name);
    SigmaTable table(g);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Elem> t = {static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng))};
      ElementSet s = table.sigma(t);
      CHECK(to_std(s) == oracle::naive_sigma(g, t));
      CHECK(s.test(0));
      for (Elem x : t) CHECK(s.test(x));
      for (std::size_t y = 0; y < g.order(); ++y)
        for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
          CHECK(s.test(g.conjugate(static_cast<Elem>(i), static_cast<Elem>(y))));
      // a single cyclic subgroup and its conjugates: the counting bound
      std::vector<Elem> one = {t[0]};
      CHECK(table.sigma(one).count() <= g.class_size(t[0]) * (g.elem_order(t[0]) - 1) + 1);
    }
  }
}

TEST_CASE("spherical systems") {
  GroupTable z5 = catalog::build("Z5^2");
  CHECK_FALSE(enumerate_spherical(z5, parse_type("5,5,5")).empty());
  CHECK(enumerate_spherical(catalog::build("Z2^3"), parse_type("3,3,3")).empty());
  GroupTable a5 = catalog::build("A5");
  SearchOptions raw;
  raw.class_reps = false;
  auto list = enumerate_spherical(a5, parse_type("2,5,5"), raw);
  std::vector<Elem> printed = {*a5.find_element("(2,4)(3,5)"), *a5.find_element("(1,3,4,5,2)"),
                               *a5.find_element("(1,2,3,4,5)")};
  SphericalSystem s{&a5, printed};
  CHECK(std::binary_search(list.begin(), list.end(), s));
  CHECK(s.type() == parse_type("2,5,5"));
  CHECK(std::is_sorted(list.begin(), list.end()));

  SearchOptions lim;
  lim.limit = 3;
  CHECK(enumerate_spherical(a5, parse_type("2,5,5"), lim).size() == 3);
}

TEST_CASE("pruned search matches brute force on all groups of order <= 16") {
  for (const auto& g : groups_up_to_16()) {
    for (const auto& a : candidate_types(g)) {
      CAPTURE(g.label());
      CAPTURE(a.str());
      std::vector<unsigned> orders(a.entries().begin(), a.entries().end());
      auto naive = oracle::naive_systems(g, orders);
      SearchOptions raw;
      raw.class_reps = false;
      CHECK(elems_of(enumerate_spherical(g, a, raw)) == naive);
      // expanding class-representative output by conjugation gives everything
      std::set<std::vector<Elem>> expanded;
      for (const auto& s : enumerate_spherical(g, a)) {
        for (std::size_t y = 0; y < g.order(); ++y) {
          std::vector<Elem> c = s.elems;
          for (auto& x : c) x = g.conjugate(x, static_cast<Elem>(y));
          expanded.insert(c);
        }
      }
      CHECK(std::vector<std::vector<Elem>>(expanded.begin(), expanded.end()) == naive);
    }
  }
}

TEST_CASE("unmixed existence matches brute force on all groups of order <= 16") {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"2,2,2,2,2", "2,2,2,2,2,2"}, {"2,2,2,2,2", "2,2,2,2,2"}, {"2,2,4,4", "2,2,4,4"},
      {"2,2,2,4", "2,2,2,2,2,2"},   {"3,3,3,3", "3,3,3,3"},     {"2,2,2,2,2,2", "2,2,2,2,2,2"},
      {"2,4,4", "2,2,2,2,2"}};
  for (const auto& g : groups_up_to_16()) {
    if (g.order() < 4) continue;
    for (const auto& [x, y] : pairs) {
      TupleType a = parse_type(x), b = parse_type(y);
      std::vector<unsigned> oa(a.entries().begin(), a.entries().end()), ob(b.entries().begin(), b.entries().end());
      CAPTURE(g.label());
      CAPTURE(a.str());
      CAPTURE(b.str());
      std::set<std::set<Elem>> sa, sb;
      for (const auto& t : oracle::naive_systems(g, oa)) sa.insert(oracle::naive_sigma(g, t));
      for (const auto& t : oracle::naive_systems(g, ob)) sb.insert(oracle::naive_sigma(g, t));
      bool naive = false;
      for (const auto& p : sa)
        for (const auto& q : sb) naive = naive || oracle::naive_disjoint(p, q);
      CHECK(exists_unmixed(g, a, b) == naive);
      SearchOptions one;
      one.limit = 1;
      CHECK(!enumerate_unmixed(g, a, b, one).empty() == naive);
    }
  }
}

TEST_CASE("unmixed structures") {
  CHECK_FALSE(enumerate_unmixed(catalog::build("Z3^2"), parse_type("3,3,3,3"), parse_type("3,3,3,3")).empty());
  CHECK_FALSE(
      enumerate_unmixed(catalog::build("Z2^3"), parse_type("2,2,2,2,2"), parse_type("2,2,2,2,2,2")).empty());
  // a cyclic group never carries a disjoint pair
  GroupTable z4 = cyclic_group(4);
  std::vector<TupleType> types;
  for (std::size_t r = 3; r <= 6; ++r)
    for (auto& t : enumerate_N(r)) types.push_back(t);
  for (const auto& a : types)
    for (const auto& b : types) CHECK(enumerate_unmixed(z4, a, b).empty());
}

TEST_CASE("unmixed output passes the independent checker") {
  GroupTable g = catalog::build("G16");
  TupleType a = parse_type("2,2,4,4");
  auto found = enumerate_unmixed(g, a, a);
  REQUIRE_FALSE(found.empty());
  for (std::size_t k = 0; k < found.size(); k += std::max<std::size_t>(1, found.size() / 200)) {
    CHECK(check::verify_unmixed(g, a, found[k].t1.elems, a, found[k].t2.elems).ok());
  }
}

TEST_CASE("mixed structures") {
  CHECK(enumerate_mixed(cyclic_group(16), parse_type("2,8,8")).empty());
  GroupTable z4z2 = catalog::abelian_group({4, 2}, "Z4xZ2");
  CHECK(enumerate_mixed(z4z2, parse_type("2,4,4")).empty());
  for (const auto& f : catalog::model_fixtures()) {
    if (f.group_name != "G256_1") continue;
    auto h = to_elements(generated_subgroup(*f.group, f.t1));
    auto c = mixed_conditions(*f.group, h, f.t1);
    CHECK(c.ok());
  }
}

TEST_CASE("mixed conditions agree with the checker") {
  GroupTable g = catalog::build("G256_2");
  TupleType a = parse_type("4,4,4");
  SearchOptions o;
  o.limit = 40;
  auto found = enumerate_mixed(g, a, o);
  REQUIRE(found.size() == 40);
  for (const auto& s : found) CHECK(check::verify_mixed(g, s.h, a, s.t.elems).ok());
  // perturbing an entry by an outer element breaks the structure
  auto h = found.front().h;
  ElementSet in_h = to_set(g, h);
  Elem outer = 0;
  while (in_h.test(outer)) ++outer;
  std::vector<Elem> bad = found.front().t.elems;
  bad[0] = g.mul(bad[0], outer);
  CHECK_FALSE(check::verify_mixed(g, h, a, bad).ok());
}

TEST_CASE("surface invariants") {
  auto u = surface_invariants_unmixed(60, parse_type("2,5,5"), parse_type("3,3,3,3"));
  CHECK(u.g1 == 4);
  CHECK(u.g2 == 21);
  CHECK((u.g1 - 1) * (u.g2 - 1) == 60);
  CHECK(u.chi == 1);
  CHECK(u.ksq == 8);
  CHECK(u.pg == 0);
  CHECK(u.q == 0);
  CHECK(u.product_identity);
  auto e = surface_invariants_unmixed(8, parse_type("2,2,2,2,2"), parse_type("2,2,2,2,2,2"));
  CHECK(e.g1 == 3);
  CHECK(e.g2 == 5);
  auto m = surface_invariants_mixed(256, parse_type("4,4,4"));
  CHECK(m.g1 == 17);
  CHECK(m.g2 == 17);
  CHECK(m.product_identity);
  CHECK(m.ksq == 8);
  CHECK_THROWS_AS(hurwitz_genus(3, parse_type("2,2,2,2,2")), NonIntegralGenus);
  CHECK_THROWS_AS(surface_invariants_mixed(6, parse_type("2,2,2,2,2")), NonIntegralGenus);
  CHECK(hurwitz_genus(60, parse_type("2,5,5")) == 4);
}

TEST_CASE("types of found structures are admissible") {
  for (const auto& g : groups_up_to_16()) {
    auto types = candidate_types(g);
    for (const auto& a : types)
      for (const auto& b : types) {
        auto x = a.alpha(), y = b.alpha();
        if (!x || !y || *x * *y != Rational(static_cast<long long>(g.order()))) continue;
        if (!exists_unmixed(g, a, b)) continue;
        CAPTURE(g.label());
        CAPTURE(a.str());
        CAPTURE(b.str());
        CHECK(in_N(a.entries()));
        CHECK(in_N(b.entries()));
      }
  }
}

TEST_CASE("systems imply quotient admissibility") {
  for (const auto& g : groups_up_to_16())
    for (const auto& a : candidate_types(g)) {
      SearchOptions one;
      one.limit = 1;
      if (!enumerate_spherical(g, a, one).empty()) CHECK(quotient_admissible(g, a.entries()));
    }
}
