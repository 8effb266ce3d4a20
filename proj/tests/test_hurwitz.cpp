#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "ramify/catalog.hpp"
#include "ramify/checker.hpp"
#include "ramify/error.hpp"
#include "ramify/hurwitz.hpp"

using namespace ramify;

namespace {

std::vector<std::vector<Elem>> all_maps(const AutGroup& a) {
  std::vector<std::vector<Elem>> out;
  for (const auto& phi : a.elements) out.push_back(phi.image);
  return out;
}

std::size_t naive_unmixed_orbits(const GroupTable& g, const TupleType& a, const TupleType& b) {
  std::set<oracle::Pair> domain;
  for (const auto& s : all_unmixed(g, a, b)) domain.insert({s.t1.elems, s.t2.elems});
  return oracle::naive_orbit_count(g, domain, all_maps(automorphisms(g)));
}

// product one, no identity entries; need not generate
SphericalSystem random_system(const GroupTable& g, std::mt19937& rng, std::size_t r) {
  std::uniform_int_distribution<int> pick(1, static_cast<int>(g.order()) - 1);
  for (;;) {
    std::vector<Elem> t;
    Elem prod = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      t.push_back(static_cast<Elem>(pick(rng)));
      prod = g.mul(prod, t.back());
    }
    if (prod == 0) continue;
    t.push_back(g.inv(prod));
    return SphericalSystem{&g, t};
  }
}

}  // namespace

TEST_CASE("braid moves") {
  GroupTable a5 = catalog::build("A5");
  GroupTable z5 = catalog::build("Z5^2");
  SphericalSystem t{&z5, {1, 5, 19}};
  auto m = braid_move(t, 1);
  CHECK(m.elems == std::vector<Elem>{5, 1, 19});
  CHECK(braid_move_inverse(m, 1) == t);
  CHECK_THROWS_AS(braid_move(t, 0), IndexOutOfRange);
  CHECK_THROWS_AS(braid_move(t, 3), IndexOutOfRange);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_system(a5, rng, 5);
    for (std::size_t i = 1; i + 1 < s.length(); ++i) {
      auto lhs = braid_move(braid_move(braid_move(s, i), i + 1), i);
      auto rhs = braid_move(braid_move(braid_move(s, i + 1), i), i + 1);
      CHECK(lhs == rhs);
    }
    for (std::size_t i = 1; i < s.length(); ++i) {
      auto b = braid_move(s, i);
      CHECK(braid_move_inverse(b, i) == s);
      CHECK(braid_move(braid_move_inverse(s, i), i) == s);
      CHECK(is_spherical(a5, b.elems) == is_spherical(a5, s.elems));
      CHECK(b.type() == s.type());
      CHECK(sigma(b) == sigma(s));
      Elem p = 0;
      for (Elem x : b.elems) p = a5.mul(p, x);
      CHECK(p == 0);
    }
    // far apart moves commute
    auto x = braid_move(braid_move(s, 1), 3), y = braid_move(braid_move(s, 3), 1);
    CHECK(x == y);
  }
}

TEST_CASE("dimensions") {
  CHECK(dimension_unmixed(parse_type("2,5,5"), parse_type("3,3,3,3")) == 1);
  CHECK(dimension_unmixed(parse_type("2,2,2,2,2"), parse_type("2,2,2,2,2,2")) == 5);
  CHECK(dimension_mixed(parse_type("4,4,4")) == 0);
}

TEST_CASE("orbit counts against explicit closure") {
  struct Case {
    const char* group;
    const char* a;
    const char* b;
    std::size_t orbits;
  };
  for (const Case& c : {Case{"Z5^2", "5,5,5", "5,5,5", 2}, Case{"Z3^2", "3,3,3,3", "3,3,3,3", 1},
                        Case{"A5", "2,5,5", "3,3,3,3", 1}, Case{"A5", "5,5,5", "2,2,2,3", 1}}) {
    CAPTURE(c.group);
    GroupTable g = catalog::build(c.group);
    TupleType a = parse_type(c.a), b = parse_type(c.b);
    AutGroup aut = automorphisms(g);
    auto direct = orbits_unmixed(g, all_unmixed(g, a, b), aut);
    auto fast = count_orbits_unmixed(g, a, b, aut);
    CHECK(direct.count() == c.orbits);
    CHECK(fast.orbits == c.orbits);
    CHECK(fast.structures == direct.domain.size());
    CHECK(naive_unmixed_orbits(g, a, b) == c.orbits);
    REQUIRE(fast.reps.size() == direct.count());
    for (std::size_t k = 0; k < direct.count(); ++k) CHECK(fast.reps[k] == direct.domain[direct.reps[k]]);
  }
}

TEST_CASE("orbit partition is well formed") {
  GroupTable g = catalog::build("Z5^2");
  TupleType a = parse_type("5,5,5");
  AutGroup aut = automorphisms(g);
  auto p = orbits_unmixed(g, all_unmixed(g, a, a), aut);
  REQUIRE(p.domain.size() == p.orbit_id.size());
  CHECK(std::is_sorted(p.domain.begin(), p.domain.end()));
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, p.domain.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = pick(rng);
    const auto& s = p.domain[k];
    for (std::size_t i = 1; i < 3; ++i) {
      UnmixedStructure m{braid_move(s.t1, i), s.t2};
      auto it = std::lower_bound(p.domain.begin(), p.domain.end(), m);
      REQUIRE(it != p.domain.end());
      CHECK(p.orbit_id[it - p.domain.begin()] == p.orbit_id[k]);
      CHECK(check::verify_unmixed(g, a, m.t1.elems, a, m.t2.elems).ok());
    }
  }
  for (std::size_t r = 0; r < p.count(); ++r) {
    // representatives are the least members
    for (std::size_t k = 0; k < p.reps[r]; ++k) CHECK(p.orbit_id[k] != r);
  }
}

TEST_CASE("determinism under shuffled input") {
  GroupTable g = catalog::build("Z3^2");
  TupleType a = parse_type("3,3,3,3");
  AutGroup aut = automorphisms(g);
  auto input = all_unmixed(g, a, a);
  auto p1 = orbits_unmixed(g, input, aut);
  std::mt19937 rng(9);
  std::shuffle(input.begin(), input.end(), rng);
  auto p2 = orbits_unmixed(g, input, aut);
  CHECK(p1.count() == p2.count());
  CHECK(p1.reps == p2.reps);
  CHECK(p1.orbit_id == p2.orbit_id);
  CHECK(count_orbits_unmixed(g, a, a, aut, 1).reps == count_orbits_unmixed(g, a, a, aut, 3).reps);
}

TEST_CASE("open domains are rejected") {
  GroupTable g = catalog::build("Z5^2");
  TupleType a = parse_type("5,5,5");
  AutGroup aut = automorphisms(g);
  auto input = all_unmixed(g, a, a);
  input.resize(input.size() / 2);
  CHECK_THROWS_AS(orbits_unmixed(g, input, aut), InvalidConstruction);
  CHECK(orbits_mixed(g, {}, aut).count() == 0);
}

TEST_CASE("mixed orbits on the order-256 groups") {
  for (auto [name, expected] : {std::pair{"G256_1", std::size_t{3}}, std::pair{"G256_2", std::size_t{1}}}) {
    CAPTURE(name);
    GroupTable g = catalog::build(name);
    AutGroup aut = automorphisms(g);
    TupleType a = parse_type("4,4,4");
    auto c = count_orbits_mixed(g, a, aut);
    CHECK(c.orbits == expected);
    for (const auto& s : c.reps) CHECK(check::verify_mixed(g, s.h, a, s.t.elems).ok());
    // orbit of a structure determines the Aut-orbit of its subgroup
    auto subgroups = index_two_subgroups(g);
    std::set<std::size_t> seen;
    for (const auto& s : c.reps) {
      // least index in the Aut-orbit of H
      std::size_t least = subgroups.size();
      for (const auto& phi : aut.elements) {
        std::vector<Elem> img;
        for (Elem x : s.h) img.push_back(phi(x));
        std::sort(img.begin(), img.end());
        std::size_t j = std::lower_bound(subgroups.begin(), subgroups.end(), img) - subgroups.begin();
        least = std::min(least, j);
      }
      CHECK(seen.insert(least).second);
    }
  }
}
