#include "ramify/checker.hpp"

#include <algorithm>
#include <set>

namespace ramify::check {

namespace {

Elem inverse(const GroupTable& g, Elem x) {
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(x, static_cast<Elem>(y)) == 0) return static_cast<Elem>(y);
  return 0;
}

unsigned order_of(const GroupTable& g, Elem x) {
  unsigned k = 1;
  for (Elem p = x; p != 0; p = g.mul(p, x)) ++k;
  return k;
}

std::set<Elem> span_of(const GroupTable& g, std::span<const Elem> gens) {
  std::set<Elem> s{0};
  for (;;) {
    std::set<Elem> next = s;
    for (Elem a : s)
      for (Elem b : gens) next.insert(g.mul(a, b));
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

std::set<Elem> sigma_naive(const GroupTable& g, std::span<const Elem> conjugators, std::span<const Elem> t) {
  std::set<Elem> out;
  for (Elem x : t) {
    std::vector<Elem> powers{0};
    for (Elem p = x; p != 0; p = g.mul(p, x)) powers.push_back(p);
    for (Elem c : conjugators) {
      Elem ci = inverse(g, c);
      for (Elem p : powers) out.insert(g.mul(g.mul(c, p), ci));
    }
  }
  return out;
}

bool only_identity_shared(const std::set<Elem>& a, const std::set<Elem>& b) {
  for (Elem x : a)
    if (x != 0 && b.count(x)) return false;
  return true;
}

std::vector<Elem> everything(const GroupTable& g) {
  std::vector<Elem> all;
  for (std::size_t x = 0; x < g.order(); ++x) all.push_back(static_cast<Elem>(x));
  return all;
}

}  // namespace

SystemReport verify_system(const GroupTable& g, std::span<const Elem> generated, const TupleType& a,
                           std::span<const Elem> t) {
  SystemReport r;
  std::vector<unsigned> orders;
  for (Elem x : t) orders.push_back(order_of(g, x));
  std::sort(orders.begin(), orders.end());
  r.type_matches = std::equal(orders.begin(), orders.end(), a.entries().begin(), a.entries().end());
  Elem p = 0;
  for (Elem x : t) p = g.mul(p, x);
  r.product_one = p == 0;
  auto s = span_of(g, t);
  std::set<Elem> target(generated.begin(), generated.end());
  r.generates = s == target;
  return r;
}

UnmixedReport verify_unmixed(const GroupTable& g, const TupleType& a1, std::span<const Elem> t1,
                             const TupleType& a2, std::span<const Elem> t2) {
  UnmixedReport r;
  auto all = everything(g);
  r.t1 = verify_system(g, all, a1, t1);
  r.t2 = verify_system(g, all, a2, t2);
  r.disjoint = only_identity_shared(sigma_naive(g, all, t1), sigma_naive(g, all, t2));
  return r;
}

MixedReport verify_mixed(const GroupTable& g, std::span<const Elem> h, const TupleType& a, std::span<const Elem> t) {
  MixedReport r;
  std::set<Elem> hs(h.begin(), h.end());
  bool closed = hs.count(0) == 1;
  for (Elem x : hs)
    for (Elem y : hs)
      if (!hs.count(g.mul(x, y))) closed = false;
  r.index_two = closed && 2 * hs.size() == g.order();
  std::vector<Elem> hv(hs.begin(), hs.end());
  r.t = verify_system(g, hv, a, t);
  auto sig = sigma_naive(g, hv, t);
  r.outer_disjoint = true;
  r.no_outer_squares = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem o = static_cast<Elem>(x);
    if (hs.count(o)) continue;
    const Elem oi = inverse(g, o);
    std::vector<Elem> conj;
    for (Elem e : t) conj.push_back(g.mul(g.mul(o, e), oi));
    if (!only_identity_shared(sig, sigma_naive(g, hv, conj))) r.outer_disjoint = false;
    if (sig.count(g.mul(o, o))) r.no_outer_squares = false;
  }
  return r;
}

}  // namespace ramify::check
