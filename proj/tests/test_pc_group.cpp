#include <doctest.h>

#include "ramify/automorphism.hpp"
#include "ramify/catalog.hpp"
#include "ramify/error.hpp"
#include "ramify/metabelian.hpp"
#include "ramify/pc_group.hpp"

using namespace ramify;

namespace {

std::size_t involutions(const GroupTable& g) { return g.elements_of_order(2).size(); }

}  // namespace

TEST_CASE("parsing relations") {
  auto pc = parse_pc("g1^2=g4, g2^g1=g2*g3", 4);
  CHECK(pc.generator_count() == 4);
  CHECK(pc.relative_orders == std::vector<unsigned>{2, 2, 2, 2});
  CHECK(pc.powers.at(0) == std::vector<std::size_t>{3});
  CHECK(pc.conjugates.at({1, 0}) == std::vector<std::size_t>{1, 2});
  auto compact = parse_pc("g2^g1=g2g3, g1^2=1", 3);
  CHECK(compact.conjugates.at({1, 0}) == std::vector<std::size_t>{1, 2});
  CHECK(compact.powers.at(0).empty());
  auto exps = parse_pc("g3^g1=g3^2", 3, {2, 2, 3});
  CHECK(exps.conjugates.at({2, 0}) == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(parse_pc("g1^2=g9", 4), ParseError);
  CHECK_THROWS_AS(parse_pc("g1^g2=g1", 4), ParseError);
  CHECK_THROWS_AS(parse_pc("g1^3=g2", 4), ParseError);
  CHECK_THROWS_AS(parse_pc("nonsense", 4), ParseError);
}

TEST_CASE("small presentations") {
  GroupTable q8 = pc_group(parse_pc("g1^2=g3, g2^2=g3, g2^g1=g2*g3", 3), "Q8");
  CHECK(q8.order() == 8);
  CHECK(involutions(q8) == 1);
  GroupTable d4 = pc_group(parse_pc("g2^2=g3, g2^g1=g2*g3", 3), "D4");
  CHECK(involutions(d4) == 5);
  CHECK(is_isomorphic(d4, catalog::build("D4")));
  GroupTable a4 = pc_group(parse_pc("g2^g1=g3, g3^g1=g2*g3", 3, {3, 2, 2}), "A4");
  CHECK(a4.order() == 12);
  CHECK(is_isomorphic(a4, catalog::build("A4")));
  GroupTable z4 = pc_group(parse_pc("g1^2=g2", 2), "Z4");
  CHECK(z4.elements_of_order(4).size() == 2);
}

TEST_CASE("normal form indices") {
  auto pc = catalog::g16_presentation();
  GroupTable g = pc_group(pc, "G16");
  std::vector<unsigned> e = {1, 0, 1, 0};
  Elem x = pc_index(pc, e);
  CHECK(x == 10);
  CHECK(g.element_label(x) == "g1*g3");
  CHECK(g.element_label(0) == "1");
  std::vector<unsigned> g1 = {1, 0, 0, 0};
  CHECK(g.elem_order(pc_index(pc, g1)) == 4);
}

TEST_CASE("inconsistent presentation is rejected") {
  // g2^g1 = g2*g2 collapses the group
  CHECK_THROWS(pc_group(parse_pc("g2^g1=g3, g3^g1=g3", 3), "bad"));
}

TEST_CASE("presentations agree with the metabelian models") {
  CHECK(is_isomorphic(pc_group(catalog::g16_presentation(), "G16pc"), metabelian(catalog::g16_data())));
  CHECK(is_isomorphic(pc_group(catalog::g32_presentation(), "G32pc"), metabelian(catalog::g32_data())));
}

TEST_CASE("order-256 presentations realise the listed action and cocycle values") {
  for (int which : {1, 2}) {
    CAPTURE(which);
    auto pc = catalog::g256_presentation(which);
    GroupTable g = pc_group(pc, "G256");
    REQUIRE(g.order() == 256);
    auto data = catalog::g256_data(which);
    auto el = [&](const IntVector& n, const IntVector& q) { return catalog::g256_element(g, pc, n, q); };
    auto basis_q = [](std::size_t i) {
      IntVector q(3, 0);
      q[i] = 1;
      return q;
    };
    auto basis_n = [](std::size_t i) {
      IntVector n(5, 0);
      n[i] = 1;
      return n;
    };
    const IntVector zero_n(5, 0), zero_q(3, 0);
    auto theta = [&](std::size_t i, std::size_t j) {
      const auto& t = data.theta[i][j];
      return t.empty() ? zero_n : t;
    };
    for (std::size_t i = 0; i < 3; ++i) {
      Elem s = el(zero_n, basis_q(i));
      CHECK(g.mul(s, s) == el(theta(i, i), zero_q));
      for (std::size_t k = 0; k < 5; ++k) {
        // column k of Phi_{e_i}
        IntVector image(5);
        for (std::size_t r = 0; r < 5; ++r) image[r] = data.phi[i][r][k];
        CHECK(g.conjugate(el(basis_n(k), zero_q), s) == el(image, zero_q));
      }
      for (std::size_t j = i + 1; j < 3; ++j) {
        Elem sj = el(zero_n, basis_q(j));
        CHECK(g.mul(sj, s) == g.mul(el(theta(j, i), zero_q), g.mul(s, sj)));
      }
    }
    CHECK(index_two_subgroups(g).size() == 7);
    CHECK(abelianization(g) == std::vector<unsigned long long>{2, 2, 2});
    CHECK(nilpotency_class(g) == 3u);
  }
}

TEST_CASE("order bound") {
  CHECK_THROWS_AS(pc_group(catalog::g256_presentation(1), "G", 100), BoundExceeded);
}
