#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "ramify/catalog.hpp"
#include "ramify/error.hpp"
#include "ramify/group.hpp"

using namespace ramify;

namespace {

std::vector<GroupTable> assorted() {
  std::vector<GroupTable> v;
  for (const char* n : {"A5", "S4", "S4xZ2", "G16", "G32", "D4xZ2", "Z5^2", "Q8", "D5", "A4", "Z2^3"})
    v.push_back(catalog::build(n));
  return v;
}

}  // namespace

TEST_CASE("cycle notation composes right to left") {
  auto p = parse_cycles("(1,2)(2,3)", 3);
  CHECK(format_cycles(p) == "(1,2,3)");
  CHECK(format_cycles(parse_cycles("(3,1,2)", 3)) == "(1,2,3)");
  CHECK(format_cycles(parse_cycles("", 4)) == "()");
  CHECK(format_cycles(parse_cycles("(2,4)(1,5)", 5)) == "(1,5)(2,4)");
  CHECK_THROWS_AS(parse_cycles("(1,2,7)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 5), ParseError);
}

TEST_CASE("permutation closures") {
  GroupTable a5 = from_permutations(5, {parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2,3)", 5)});
  CHECK(a5.order() == 60);
  CHECK(from_permutations(1, {}).order() == 1);
  CHECK(from_permutations(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)}).order() == 24);
  CHECK_THROWS_AS(from_permutations(5, {parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)}, "S5", 100),
                  BoundExceeded);

  // product convention: (a*b)(x) = a(b(x))
  GroupTable s3 = from_permutations(3, {parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3)});
  Elem a = *s3.find_element("(1,2)"), b = *s3.find_element("(2,3)");
  CHECK(s3.element_label(s3.mul(a, b)) == "(1,2,3)");
}

TEST_CASE("table axioms and cached data agree with brute force") {
  for (const auto& g : assorted()) {
    CAPTURE(g.label());
    std::size_t classes = 0;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < g.order(); ++i) {
      Elem x = static_cast<Elem>(i);
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.mul(g.inv(x), x) == 0);
      CHECK(g.elem_order(x) == oracle::naive_order(g, x));
      CHECK(element_order(g, x) == g.elem_order(x));
      for (std::size_t j = 0; j < g.order(); ++j) {
        Elem y = static_cast<Elem>(j);
        CHECK(g.conj_class(g.conjugate(x, y)) == g.conj_class(x));
        CHECK(g.elem_order(g.conjugate(x, y)) == g.elem_order(x));
      }
      if (seen.insert(g.conj_class(x)).second) ++classes;
    }
    CHECK(classes == g.class_count());
    for (Elem r : g.class_representatives())
      for (std::size_t x = 0; x < r; ++x) CHECK(g.conj_class(static_cast<Elem>(x)) != g.conj_class(r));
  }
}

TEST_CASE("from_cayley rejects non-groups") {
  // loop of order 5: Latin square with identity and inverses
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(GroupTable::from_cayley("L5", 5, loop), NotAGroup);
  std::vector<Elem> not_latin = {0, 1, 1, 1};
  CHECK_THROWS_AS(GroupTable::from_cayley("X", 2, not_latin), NotAGroup);
  std::vector<Elem> bad_identity = {1, 0, 0, 1};
  CHECK_THROWS_AS(GroupTable::from_cayley("X", 2, bad_identity), NotAGroup);
  std::vector<Elem> z2 = {0, 1, 1, 0};
  CHECK(GroupTable::from_cayley("Z2", 2, z2).order() == 2);
}

TEST_CASE("sampled associativity check accepts large groups") {
  // order 100 is over the exhaustive limit
  std::size_t n = 100;
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  CHECK(GroupTable::from_cayley("Z100", n, t).order() == n);
  CHECK_THROWS_AS(cyclic_group(3000), BoundExceeded);
  CHECK(cyclic_group(3000, 4000).order() == 3000);
}

TEST_CASE("direct products") {
  GroupTable s4 = catalog::build("S4"), z2 = cyclic_group(2);
  CHECK(direct_product(s4, z2).order() == 48);
  GroupTable d4z2 = catalog::build("D4xZ2");
  CHECK(d4z2.order() == 16);
  CHECK(abelianization(d4z2) == std::vector<unsigned long long>{2, 2, 2});
  GroupTable trivial = cyclic_group(1);
  GroupTable copy = direct_product(s4, trivial);
  CHECK(copy.order() == 24);
  CHECK(abelianization(copy) == abelianization(s4));
  Elem x = product_index(s4, z2, 5, 1);
  CHECK(x == 11);
}

TEST_CASE("derived subgroup and abelianization") {
  GroupTable a5 = catalog::build("A5");
  CHECK(abelianization(a5).empty());
  CHECK(is_perfect(a5));
  CHECK(commutator_subgroup(a5).size() == 60);
  CHECK(commutator_subgroup(catalog::build("S4")).size() == 12);
  CHECK(commutator_subgroup(catalog::build("Z5^2")) == std::vector<Elem>{0});
  CHECK(abelianization(catalog::build("Z5^2")) == std::vector<unsigned long long>{5, 5});
  CHECK(abelianization(catalog::build("G16")) == std::vector<unsigned long long>{2, 4});
  CHECK(abelianization(cyclic_group(1)).empty());
  CHECK(is_perfect(cyclic_group(1)));
  for (const auto& g : assorted()) {
    unsigned long long prod = 1;
    for (auto d : abelianization(g)) prod *= d;
    CHECK(prod * commutator_subgroup(g).size() == g.order());
    auto f = abelianization(g);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
  }
}

TEST_CASE("index-two subgroups match brute force") {
  CHECK(index_two_subgroups(catalog::build("Z2^2")).size() == 3);
  CHECK(index_two_subgroups(catalog::build("Z5^2")).empty());
  std::vector<GroupTable> groups = assorted();
  for (std::size_t n : {4u, 8u, 12u, 16u})
    for (auto& g : catalog::tiny_order_sweep(n)) groups.push_back(std::move(g));
  for (const auto& g : groups) {
    CAPTURE(g.label());
    auto fast = index_two_subgroups(g);
    CHECK(fast == oracle::naive_index_two(g));
    for (const auto& h : fast) {
      CHECK(h.size() * 2 == g.order());
      ElementSet s = to_set(g, h);
      for (Elem a : h)
        for (Elem b : h) CHECK(s.test(g.mul(a, b)));
      for (Elem a : h)
        for (std::size_t y = 0; y < g.order(); ++y) CHECK(s.test(g.conjugate(a, static_cast<Elem>(y))));
    }
  }
}

TEST_CASE("centre and nilpotency class") {
  CHECK(nilpotency_class(catalog::build("G32")) == 2u);
  CHECK(nilpotency_class(catalog::build("Z5^2")) == 1u);
  CHECK_FALSE(nilpotency_class(catalog::build("S4")).has_value());
  CHECK(center(catalog::build("A5")).size() == 1);
  CHECK(center(catalog::build("D4xZ2")).size() == 4);
  CHECK(center(catalog::build("Q8")).size() == 2);
}

TEST_CASE("generation and greedy generating sets") {
  for (const auto& g : assorted()) {
    auto gens = greedy_generating_set(g);
    CHECK(generates(g, gens));
    CHECK(gens.size() <= 4);
    CHECK(oracle::naive_span(g, gens).size() == g.order());
  }
  GroupTable s4 = catalog::build("S4");
  std::vector<Elem> one = {*s4.find_element("(1,2,3,4)")};
  CHECK(generated_subgroup(s4, one).count() == 4);
  CHECK_FALSE(generates(s4, one));
}

TEST_CASE("element_order range check") { CHECK_THROWS_AS(element_order(cyclic_group(4), 9), IndexOutOfRange); }

TEST_CASE("restriction to a subgroup") {
  GroupTable s4 = catalog::build("S4");
  auto a4 = commutator_subgroup(s4);
  Subgroup sub = restrict_to(s4, a4, "A4");
  CHECK(sub.table.order() == 12);
  CHECK(abelianization(sub.table) == std::vector<unsigned long long>{3});
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(sub.from_parent[sub.to_parent[i]] == static_cast<int>(i));
    for (std::size_t j = 0; j < 12; ++j) {
      CHECK(sub.to_parent[sub.table.mul(static_cast<Elem>(i), static_cast<Elem>(j))] ==
            s4.mul(sub.to_parent[i], sub.to_parent[j]));
    }
  }
  std::vector<Elem> not_closed = {0, *s4.find_element("(1,2)"), *s4.find_element("(2,3)")};
  CHECK_THROWS_AS(restrict_to(s4, not_closed), NotAGroup);
}

TEST_CASE("words") {
  GroupTable d4 = catalog::build("D4");
  auto data = catalog::d4_data();
  std::unordered_map<char, Elem> sym{{'x', metabelian_index(data, IntVector{1}, IntVector{0})},
                                     {'y', metabelian_index(data, IntVector{0}, IntVector{1})}};
  Elem x = sym['x'], y = sym['y'];
  CHECK(evaluate_word(d4, "x^4", sym) == 0);
  CHECK(evaluate_word(d4, "yxy", sym) == d4.inv(x));
  CHECK(evaluate_word(d4, "x^-1", sym) == d4.inv(x));
  CHECK(evaluate_word(d4, "1", sym) == 0);
  CHECK(evaluate_word(d4, "xy", sym) == d4.mul(x, y));
  CHECK_THROWS_AS(evaluate_word(d4, "xq", sym), ParseError);
}
