#include "ramify/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "ramify/error.hpp"

namespace ramify {

SphericalSystem braid_move(const SphericalSystem& t, std::size_t i) {
  if (i < 1 || i >= t.length()) throw IndexOutOfRange("braid index " + std::to_string(i) + " out of range");
  SphericalSystem out = t;
  const GroupTable& g = *t.group;
  Elem a = t.elems[i - 1], b = t.elems[i];
  out.elems[i - 1] = g.conjugate(b, a);
  out.elems[i] = a;
  return out;
}

SphericalSystem braid_move_inverse(const SphericalSystem& t, std::size_t i) {
  if (i < 1 || i >= t.length()) throw IndexOutOfRange("braid index " + std::to_string(i) + " out of range");
  SphericalSystem out = t;
  const GroupTable& g = *t.group;
  Elem c = t.elems[i - 1], d = t.elems[i];
  out.elems[i - 1] = d;
  out.elems[i] = g.conjugate(c, g.inv(d));
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

/// Numbers components by their least member; returns ids and representatives.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> components(UnionFind& uf) {
  const std::size_t n = uf.parent.size();
  std::vector<std::size_t> id(n), reps;
  std::vector<std::size_t> root_id(n, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = uf.find(x);
    if (root_id[r] == static_cast<std::size_t>(-1)) {
      root_id[r] = reps.size();
      reps.push_back(x);
    }
    id[x] = root_id[r];
  }
  return {id, reps};
}

void braid_in_place(const GroupTable& g, std::vector<Elem>& t, std::size_t i) {
  Elem a = t[i], b = t[i + 1];
  t[i] = g.conjugate(b, a);
  t[i + 1] = a;
}

std::vector<Elem> apply_to(const Homomorphism& phi, const std::vector<Elem>& t) {
  std::vector<Elem> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = phi.image[t[i]];
  return out;
}

template <class S>
std::size_t locate(const std::vector<S>& domain, const S& s) {
  auto it = std::lower_bound(domain.begin(), domain.end(), s);
  if (it == domain.end() || !(*it == s)) throw InvalidConstruction("structure set is not closed under the action");
  return static_cast<std::size_t>(it - domain.begin());
}

/// Braid orbits on a sorted list of systems of a fixed length.
struct BraidOrbits {
  std::vector<std::vector<Elem>> systems;
  std::vector<std::size_t> orbit;  ///< per system
  std::vector<std::size_t> rep;    ///< least system of each orbit
  std::vector<std::size_t> size;

  std::size_t index(const std::vector<Elem>& t) const {
    auto it = std::lower_bound(systems.begin(), systems.end(), t);
    if (it == systems.end() || *it != t) throw InvalidConstruction("system missing from braid domain");
    return static_cast<std::size_t>(it - systems.begin());
  }
  std::size_t orbit_of(const std::vector<Elem>& t) const { return orbit[index(t)]; }
};

BraidOrbits braid_orbits(const GroupTable& g, std::vector<std::vector<Elem>> systems) {
  BraidOrbits b;
  std::sort(systems.begin(), systems.end());
  b.systems = std::move(systems);
  UnionFind uf(b.systems.size());
  for (std::size_t x = 0; x < b.systems.size(); ++x) {
    const auto& t = b.systems[x];
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      auto m = t;
      braid_in_place(g, m, i);
      uf.unite(x, b.index(m));
    }
  }
  auto [id, reps] = components(uf);
  b.orbit = std::move(id);
  b.rep = std::move(reps);
  b.size.assign(b.rep.size(), 0);
  for (std::size_t o : b.orbit) ++b.size[o];
  return b;
}

std::vector<std::vector<Elem>> all_systems(const GroupTable& g, const TupleType& a, unsigned jobs) {
  SearchOptions o;
  o.class_reps = false;
  o.all_orderings = true;
  o.jobs = jobs;
  std::vector<std::vector<Elem>> out;
  for (auto& s : enumerate_spherical(g, a, o)) out.push_back(std::move(s.elems));
  return out;
}

}  // namespace

OrbitPartition<UnmixedStructure> orbits_unmixed(const GroupTable& g, std::vector<UnmixedStructure> structures,
                                                const AutGroup& aut) {
  OrbitPartition<UnmixedStructure> p;
  std::sort(structures.begin(), structures.end());
  structures.erase(std::unique(structures.begin(), structures.end()), structures.end());
  p.domain = std::move(structures);
  UnionFind uf(p.domain.size());
  for (std::size_t x = 0; x < p.domain.size(); ++x) {
    const UnmixedStructure& s = p.domain[x];
    for (std::size_t i = 1; i < s.t1.length(); ++i) {
      uf.unite(x, locate(p.domain, UnmixedStructure{braid_move(s.t1, i), s.t2}));
    }
    for (std::size_t i = 1; i < s.t2.length(); ++i) {
      uf.unite(x, locate(p.domain, UnmixedStructure{s.t1, braid_move(s.t2, i)}));
    }
    for (std::size_t gi : aut.generators) {
      const auto& phi = aut.elements[gi];
      UnmixedStructure m{SphericalSystem{&g, apply_to(phi, s.t1.elems)}, SphericalSystem{&g, apply_to(phi, s.t2.elems)}};
      uf.unite(x, locate(p.domain, m));
    }
  }
  auto [id, reps] = components(uf);
  p.orbit_id = std::move(id);
  p.reps = std::move(reps);
  return p;
}

OrbitPartition<MixedStructure> orbits_mixed(const GroupTable& g, std::vector<MixedStructure> structures,
                                            const AutGroup& aut) {
  OrbitPartition<MixedStructure> p;
  std::sort(structures.begin(), structures.end());
  structures.erase(std::unique(structures.begin(), structures.end()), structures.end());
  p.domain = std::move(structures);
  UnionFind uf(p.domain.size());
  for (std::size_t x = 0; x < p.domain.size(); ++x) {
    const MixedStructure& s = p.domain[x];
    for (std::size_t i = 1; i < s.t.length(); ++i) {
      uf.unite(x, locate(p.domain, MixedStructure{&g, s.h, braid_move(s.t, i)}));
    }
    for (std::size_t gi : aut.generators) {
      const auto& phi = aut.elements[gi];
      auto h = apply_to(phi, s.h);
      std::sort(h.begin(), h.end());
      uf.unite(x, locate(p.domain, MixedStructure{&g, std::move(h), SphericalSystem{&g, apply_to(phi, s.t.elems)}}));
    }
  }
  auto [id, reps] = components(uf);
  p.orbit_id = std::move(id);
  p.reps = std::move(reps);
  return p;
}

std::vector<UnmixedStructure> all_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2,
                                          unsigned jobs) {
  SearchOptions o;
  o.class_reps = false;
  o.all_orderings = true;
  o.jobs = jobs;
  return enumerate_unmixed(g, a1, a2, o);
}

std::vector<MixedStructure> all_mixed(const GroupTable& g, const TupleType& a, unsigned jobs) {
  SearchOptions o;
  o.class_reps = false;
  o.all_orderings = true;
  o.jobs = jobs;
  return enumerate_mixed(g, a, o);
}

UnmixedOrbitCount count_orbits_unmixed(const GroupTable& g, const TupleType& a1, const TupleType& a2,
                                       const AutGroup& aut, unsigned jobs) {
  BraidOrbits b1 = braid_orbits(g, all_systems(g, a1, jobs));
  BraidOrbits b2 = a1 == a2 ? b1 : braid_orbits(g, all_systems(g, a2, jobs));
  SigmaTable table(g);
  auto orbit_sigmas = [&](const BraidOrbits& b) {
    std::vector<ElementSet> out;
    for (std::size_t r : b.rep) {
      ElementSet s = table.sigma(b.systems[r]);
      s.reset(0);
      out.push_back(std::move(s));
    }
    return out;
  };
  auto s1 = orbit_sigmas(b1), s2 = orbit_sigmas(b2);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j)
      if (!s1[i].intersects(s2[j])) pairs.emplace_back(i, j);
  UnmixedOrbitCount result;
  for (auto [i, j] : pairs) result.structures += b1.size[i] * b2.size[j];
  if (pairs.empty()) return result;

  std::unordered_map<std::size_t, std::size_t> pair_index;
  const std::size_t stride = b2.rep.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) pair_index.emplace(pairs[k].first * stride + pairs[k].second, k);

  UnionFind uf(pairs.size());
  for (std::size_t gi : aut.generators) {
    const auto& phi = aut.elements[gi];
    std::vector<std::size_t> p1(b1.rep.size()), p2(b2.rep.size());
    for (std::size_t o = 0; o < p1.size(); ++o) p1[o] = b1.orbit_of(apply_to(phi, b1.systems[b1.rep[o]]));
    for (std::size_t o = 0; o < p2.size(); ++o) p2[o] = b2.orbit_of(apply_to(phi, b2.systems[b2.rep[o]]));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto it = pair_index.find(p1[pairs[k].first] * stride + p2[pairs[k].second]);
      if (it == pair_index.end()) throw InvalidConstruction("automorphism broke disjointness");
      uf.unite(k, it->second);
    }
  }
  auto [id, reps] = components(uf);
  result.orbits = reps.size();
  // Pairs are sorted and orbit numbers follow the least system, so the
  // first pair of a component gives its least structure.
  for (std::size_t k : reps) {
    result.reps.push_back(UnmixedStructure{SphericalSystem{&g, b1.systems[b1.rep[pairs[k].first]]},
                                           SphericalSystem{&g, b2.systems[b2.rep[pairs[k].second]]}});
  }
  return result;
}

MixedOrbitCount count_orbits_mixed(const GroupTable& g, const TupleType& a, const AutGroup& aut, unsigned jobs) {
  const auto subgroups = index_two_subgroups(g);
  std::map<std::vector<Elem>, std::size_t> subgroup_index;
  for (std::size_t k = 0; k < subgroups.size(); ++k) subgroup_index.emplace(subgroups[k], k);

  std::vector<BraidOrbits> braids;
  // (subgroup, braid orbit) pairs satisfying the mixed conditions
  std::vector<std::pair<std::size_t, std::size_t>> valid;
  MixedOrbitCount result;
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    const auto& h = subgroups[k];
    Subgroup sub = restrict_to(g, h);
    auto systems = all_systems(sub.table, a, jobs);
    for (auto& t : systems)
      for (auto& x : t) x = sub.to_parent[x];
    braids.push_back(braid_orbits(g, std::move(systems)));
    const BraidOrbits& b = braids.back();
    MixedChecker checker(g, h);
    for (std::size_t o = 0; o < b.rep.size(); ++o) {
      if (checker.check(b.systems[b.rep[o]]).ok()) {
        valid.emplace_back(k, o);
        result.structures += b.size[o];
      }
    }
  }
  if (valid.empty()) return result;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> valid_index;
  for (std::size_t v = 0; v < valid.size(); ++v) valid_index.emplace(valid[v], v);

  UnionFind uf(valid.size());
  for (std::size_t gi : aut.generators) {
    const auto& phi = aut.elements[gi];
    for (std::size_t v = 0; v < valid.size(); ++v) {
      auto [k, o] = valid[v];
      auto h = apply_to(phi, subgroups[k]);
      std::sort(h.begin(), h.end());
      std::size_t k2 = subgroup_index.at(h);
      std::size_t o2 = braids[k2].orbit_of(apply_to(phi, braids[k].systems[braids[k].rep[o]]));
      auto it = valid_index.find({k2, o2});
      if (it == valid_index.end()) throw InvalidConstruction("automorphism broke the mixed conditions");
      uf.unite(v, it->second);
    }
  }
  auto [id, reps] = components(uf);
  result.orbits = reps.size();
  for (std::size_t v : reps) {
    auto [k, o] = valid[v];
    result.reps.push_back(MixedStructure{&g, subgroups[k], SphericalSystem{&g, braids[k].systems[braids[k].rep[o]]}});
  }
  return result;
}

int dimension_unmixed(const TupleType& a1, const TupleType& a2) {
  return static_cast<int>(a1.length() + a2.length()) - 6;
}

int dimension_mixed(const TupleType& a) { return static_cast<int>(a.length()) - 3; }

}  // namespace ramify
