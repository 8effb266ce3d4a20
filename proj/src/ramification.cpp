#include "ramify/ramification.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "ramify/error.hpp"

namespace ramify {

TupleType SphericalSystem::type() const {
  std::vector<unsigned> orders;
  for (Elem x : elems) orders.push_back(group->elem_order(x));
  return TupleType(std::move(orders));
}

SigmaTable::SigmaTable(const GroupTable& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  build(g, all);
}

SigmaTable::SigmaTable(const GroupTable& g, std::span<const Elem> conjugators) { build(g, conjugators); }

void SigmaTable::build(const GroupTable& g, std::span<const Elem> conjugators) {
  const std::size_t n = g.order();
  std::vector<ElementSet> orbit(n);
  std::vector<bool> done(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    ElementSet s(n);
    for (Elem c : conjugators) s.set(g.conjugate(static_cast<Elem>(x), c));
    for (auto y = s.find_first(); y != ElementSet::npos; y = s.find_next(y)) {
      orbit[y] = s;
      done[y] = true;
    }
  }
  masks_.assign(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    Elem p = 0;
    do {
      masks_[x] |= orbit[p];
      p = g.mul(p, static_cast<Elem>(x));
    } while (p != 0);
  }
}

ElementSet SigmaTable::sigma(std::span<const Elem> elems) const {
  ElementSet s(masks_.empty() ? 0 : masks_[0].size());
  for (Elem x : elems) s |= masks_[x];
  return s;
}

ElementSet sigma(const SphericalSystem& t) {
  const GroupTable& g = *t.group;
  ElementSet s(g.order());
  s.set(0);
  for (Elem x : t.elems) {
    Elem p = x;
    while (p != 0) {
      for (std::size_t c = 0; c < g.order(); ++c) s.set(g.conjugate(p, static_cast<Elem>(c)));
      p = g.mul(p, x);
    }
  }
  return s;
}

bool is_disjoint(const SphericalSystem& t1, const SphericalSystem& t2) {
  if (t1.group != t2.group) throw GroupMismatch("systems live over different groups");
  ElementSet common = sigma(t1) & sigma(t2);
  return common.count() == 1;
}

bool is_spherical(const GroupTable& g, std::span<const Elem> elems) {
  Elem p = 0;
  for (Elem x : elems) {
    if (x >= g.order()) return false;
    p = g.mul(p, x);
  }
  return p == 0 && generates(g, elems);
}

namespace {

using Tuple = std::vector<Elem>;

class SphericalSearch {
 public:
  SphericalSearch(const GroupTable& g, std::vector<unsigned> orders, bool class_reps)
      : g_(g), orders_(std::move(orders)) {
    for (std::size_t i = 0; i < orders_.size(); ++i) candidates_.push_back(g.elements_of_order(orders_[i]));
    if (class_reps && !orders_.empty()) {
      std::vector<Elem> reps;
      for (Elem x : g.class_representatives())
        if (g.elem_order(x) == orders_[0]) reps.push_back(x);
      candidates_[0] = std::move(reps);
    }
  }

  std::size_t first_count() const { return orders_.size() < 2 ? 1 : candidates_[0].size(); }

  /// All systems with the first entry fixed to candidates_[0][i].
  void run(std::size_t i, std::vector<Tuple>& out, std::size_t limit) {
    const std::size_t r = orders_.size();
    if (r == 0) return;
    tuple_.assign(r, 0);
    out_ = &out;
    limit_ = limit;
    if (r == 1) {
      dfs(0, 0);
      return;
    }
    tuple_[0] = candidates_[0][i];
    dfs(1, tuple_[0]);
  }

 private:
  void dfs(std::size_t k, Elem product) {
    if (limit_ && out_->size() >= limit_) return;
    const std::size_t r = orders_.size();
    if (k + 1 == r) {
      Elem last = g_.inv(product);
      if (g_.elem_order(last) != orders_[k]) return;
      tuple_[k] = last;
      if (generates(g_, tuple_)) out_->push_back(tuple_);
      return;
    }
    for (Elem x : candidates_[k]) {
      tuple_[k] = x;
      dfs(k + 1, g_.mul(product, x));
      if (limit_ && out_->size() >= limit_) return;
    }
  }

  const GroupTable& g_;
  std::vector<unsigned> orders_;
  std::vector<std::vector<Elem>> candidates_;
  Tuple tuple_;
  std::vector<Tuple>* out_ = nullptr;
  std::size_t limit_ = 0;
};

std::vector<Tuple> search_tuples(const GroupTable& g, const TupleType& a, const SearchOptions& opts) {
  std::vector<unsigned> orders(a.entries().begin(), a.entries().end());
  std::vector<std::vector<unsigned>> arrangements;
  do {
    arrangements.push_back(orders);
  } while (opts.all_orderings && std::next_permutation(orders.begin(), orders.end()));

  std::vector<Tuple> result;
  for (const auto& arrangement : arrangements) {
    SphericalSearch probe(g, arrangement, opts.class_reps);
    const std::size_t firsts = probe.first_count();
    std::vector<std::vector<Tuple>> buckets(firsts);
    unsigned jobs = opts.limit ? 1 : opts.jobs;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, firsts));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      SphericalSearch search(g, arrangement, opts.class_reps);
      for (std::size_t i = next++; i < firsts; i = next++) {
        std::size_t left = 0;
        if (opts.limit) {
          std::size_t have = result.size();
          for (std::size_t j = 0; j < i; ++j) have += buckets[j].size();
          if (have >= opts.limit) return;
          left = opts.limit - have;
        }
        search.run(i, buckets[i], left);
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto& b : buckets)
      for (auto& t : b) result.push_back(std::move(t));
    if (opts.limit && result.size() >= opts.limit) break;
  }
  std::sort(result.begin(), result.end());
  if (opts.limit && result.size() > opts.limit) result.resize(opts.limit);
  return result;
}

ElementSet conjugate_set(const GroupTable& g, const ElementSet& s, Elem by) {
  ElementSet out(g.order());
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) out.set(g.conjugate(static_cast<Elem>(x), by));
  return out;
}

}  // namespace

std::vector<SphericalSystem> enumerate_spherical(const GroupTable& g, const TupleType& a, const SearchOptions& opts) {
  std::vector<SphericalSystem> out;
  for (auto& t : search_tuples(g, a, opts)) out.push_back(SphericalSystem{&g, std::move(t)});
  return out;
}

std::vector<UnmixedStructure> enumerate_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2,
                                                const SearchOptions& opts) {
  SearchOptions full = opts;
  full.class_reps = false;
  full.limit = 0;
  SearchOptions first = opts;
  first.limit = 0;
  auto list1 = search_tuples(g, a1, first);
  auto list2 = search_tuples(g, a2, full);
  SigmaTable table(g);
  std::map<ElementSet, std::vector<std::size_t>> by_sigma;
  for (std::size_t j = 0; j < list2.size(); ++j) by_sigma[table.sigma(list2[j])].push_back(j);

  std::vector<UnmixedStructure> out;
  for (const auto& t1 : list1) {
    ElementSet s1 = table.sigma(t1);
    s1.reset(0);
    std::vector<std::size_t> partners;
    for (const auto& [s2, idx] : by_sigma) {
      if (!s1.intersects(s2)) partners.insert(partners.end(), idx.begin(), idx.end());
    }
    std::sort(partners.begin(), partners.end());
    for (std::size_t j : partners) {
      out.push_back(UnmixedStructure{SphericalSystem{&g, t1}, SphericalSystem{&g, list2[j]}});
      if (opts.limit && out.size() >= opts.limit) return out;
    }
  }
  return out;
}

bool exists_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2, unsigned jobs) {
  SearchOptions o;
  o.jobs = jobs;
  SigmaTable table(g);
  auto distinct = [&](const TupleType& a) {
    std::vector<ElementSet> sets;
    for (const auto& t : search_tuples(g, a, o)) {
      ElementSet s = table.sigma(t);
      s.reset(0);
      sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
  };
  auto s1 = distinct(a1);
  if (s1.empty()) return false;
  auto s2 = distinct(a2);
  for (const auto& x : s1)
    for (const auto& y : s2)
      if (!x.intersects(y)) return true;
  return false;
}

std::vector<MixedStructure> enumerate_mixed(const GroupTable& g, const TupleType& a, const SearchOptions& opts) {
  std::vector<MixedStructure> out;
  for (const auto& h : index_two_subgroups(g)) {
    Subgroup sub = restrict_to(g, h);
    SearchOptions inner = opts;
    inner.limit = 0;
    auto systems = search_tuples(sub.table, a, inner);
    MixedChecker checker(g, h);
    for (auto& t : systems) {
      for (auto& x : t) x = sub.to_parent[x];
      if (!checker.check(t).ok()) continue;
      out.push_back(MixedStructure{&g, h, SphericalSystem{&g, std::move(t)}});
      if (opts.limit && out.size() >= opts.limit) return out;
    }
  }
  return out;
}

MixedChecker::MixedChecker(const GroupTable& g, std::span<const Elem> h)
    : g_(&g), table_(g, h), outer_squares_(g.order()) {
  ElementSet in_h = to_set(g, h);
  bool found = false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (in_h.test(x)) continue;
    if (!found) {
      outer_ = static_cast<Elem>(x);
      found = true;
    }
    outer_squares_.set(g.mul(static_cast<Elem>(x), static_cast<Elem>(x)));
  }
  if (!found) throw InvalidConstruction("subgroup is not proper");
}

MixedConditions MixedChecker::check(std::span<const Elem> t) const {
  // Sigma is H-conjugation closed, so one outer element stands for the coset.
  ElementSet sig = table_.sigma(t);
  MixedConditions c;
  ElementSet common = sig & conjugate_set(*g_, sig, outer_);
  c.outer_disjoint = common.count() == 1;
  c.no_outer_squares = !sig.intersects(outer_squares_);
  return c;
}

MixedConditions mixed_conditions(const GroupTable& g, std::span<const Elem> h, std::span<const Elem> t) {
  return MixedChecker(g, h).check(t);
}

long long hurwitz_genus(std::size_t n, const TupleType& a) {
  Rational v = Rational(1) + Rational(static_cast<long long>(n)) * a.theta() / Rational(2);
  if (v.denominator() != 1) {
    throw NonIntegralGenus("genus 1 + " + std::to_string(n) + "*Theta(" + a.str() + ")/2 is not an integer");
  }
  return v.numerator();
}

namespace {

SurfaceInvariants finish_invariants(long long g1, long long g2, std::size_t n) {
  SurfaceInvariants s;
  s.g1 = g1;
  s.g2 = g2;
  const long long prod = (g1 - 1) * (g2 - 1);
  const auto order = static_cast<long long>(n);
  if (prod % order != 0) throw InvalidConstruction("(g1-1)(g2-1) is not divisible by |G|");
  s.chi = prod / order;
  s.ksq = 8 * s.chi;
  s.q = 0;
  s.pg = s.chi - 1;
  s.product_identity = prod == order;
  return s;
}

}  // namespace

SurfaceInvariants surface_invariants_unmixed(std::size_t group_order, const TupleType& a1, const TupleType& a2) {
  return finish_invariants(hurwitz_genus(group_order, a1), hurwitz_genus(group_order, a2), group_order);
}

SurfaceInvariants surface_invariants_mixed(std::size_t group_order, const TupleType& a) {
  if (group_order % 2 != 0) throw InvalidConstruction("mixed structures need even order");
  long long g = hurwitz_genus(group_order / 2, a);
  return finish_invariants(g, g, group_order);
}

SurfaceInvariants surface_invariants(const UnmixedStructure& s) {
  return surface_invariants_unmixed(s.t1.group->order(), s.t1.type(), s.t2.type());
}

SurfaceInvariants surface_invariants(const MixedStructure& s) {
  return surface_invariants_mixed(s.group->order(), s.t.type());
}

}  // namespace ramify
