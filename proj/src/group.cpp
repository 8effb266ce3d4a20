#include "ramify/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "ramify/error.hpp"

namespace ramify {

namespace {

std::vector<unsigned long long> prime_factors(unsigned long long m) {
  std::vector<unsigned long long> primes;
  for (unsigned long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

void check_bound(std::size_t n, std::size_t bound, const std::string& what) {
  if (bound > kMaxOrderBound) bound = kMaxOrderBound;
  if (n > bound) {
    throw BoundExceeded(what + ": order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
  }
}

}  // namespace

GroupTable GroupTable::from_cayley(std::string label, std::size_t n, std::vector<Elem> table,
                                   std::vector<std::string> element_labels,
                                   std::vector<Elem> generators, bool exhaustive) {
  if (n == 0) throw NotAGroup("empty multiplication table");
  if (n > kMaxOrderBound) throw BoundExceeded("table too large");
  if (table.size() != n * n) throw NotAGroup("table is not n x n");
  for (Elem v : table) {
    if (v >= n) throw NotAGroup("table entry out of range");
  }
  GroupTable g;
  g.n_ = n;
  g.label_ = std::move(label);
  g.table_ = std::move(table);
  if (element_labels.empty()) {
    element_labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) element_labels.push_back("e" + std::to_string(i));
  }
  if (element_labels.size() != n) throw NotAGroup("wrong number of element labels");
  g.element_labels_ = std::move(element_labels);
  for (Elem x : generators) {
    if (x >= n) throw NotAGroup("generator index out of range");
  }
  g.generators_ = std::move(generators);
  g.finish(exhaustive || n <= 64);
  return g;
}

void GroupTable::finish(bool exhaustive_associativity) {
  const std::size_t n = n_;
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a] != a || table_[a * n] != a) {
      throw NotAGroup("element 0 is not a two-sided identity");
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = table_[a * n + b];
      if (seen[v] == stamp) throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      Elem v = table_[a * n + b];
      if (seen[v] == stamp) throw NotAGroup("column " + std::to_string(b) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto r = row(static_cast<Elem>(a));
    auto it = std::find(r.begin(), r.end(), Elem{0});
    Elem b = static_cast<Elem>(it - r.begin());
    if (mul(b, static_cast<Elem>(a)) != 0) throw NotAGroup("left and right inverses differ");
    inv_[a] = b;
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (exhaustive_associativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Elem ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) throw NotAGroup("multiplication is not associative");
        }
      }
  } else {
    std::mt19937_64 rng(0x5eed0fa55u ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t trials = 10 * n * n;
    for (std::size_t t = 0; t < trials; ++t) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw NotAGroup("multiplication is not associative");
    }
  }

  order_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    unsigned k = 1;
    Elem y = static_cast<Elem>(x);
    while (y != 0) {
      y = mul(y, static_cast<Elem>(x));
      ++k;
    }
    order_[x] = k;
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  class_id_.assign(n, unset);
  class_sizes_.clear();
  class_reps_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (class_id_[x] != unset) continue;
    std::size_t id = class_sizes_.size();
    std::size_t size = 0;
    for (std::size_t h = 0; h < n; ++h) {
      Elem c = conjugate(static_cast<Elem>(x), static_cast<Elem>(h));
      if (class_id_[c] == unset) {
        class_id_[c] = id;
        ++size;
      }
    }
    class_sizes_.push_back(size);
    class_reps_.push_back(static_cast<Elem>(x));
  }

  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  label_index_.clear();
  for (std::size_t x = 0; x < n; ++x) label_index_.emplace(element_labels_[x], static_cast<Elem>(x));
}

Elem GroupTable::power(Elem x, long long k) const {
  if (k < 0) {
    x = inv_[x];
    k = -k;
  }
  k %= order_[x];
  Elem result = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> GroupTable::find_element(std::string_view element_label) const {
  auto it = label_index_.find(std::string(element_label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Elem> GroupTable::elements_of_order(unsigned m) const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < n_; ++x)
    if (order_[x] == m) out.push_back(static_cast<Elem>(x));
  return out;
}

GroupTable GroupTable::with_label(std::string label) const {
  GroupTable copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::iota(result.begin(), result.end(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<std::vector<int>> cycles;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected a point in cycle notation: " + std::string(text));
      int point = std::stoi(std::string(text.substr(start, pos - start)));
      if (point < 1 || static_cast<std::size_t>(point) > degree) {
        throw ParseError("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end()) {
        throw ParseError("repeated point in cycle: " + std::string(text));
      }
      cycle.push_back(point - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
      skip_ws();
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
    ++pos;
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  // Right-to-left: the last cycle acts first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    Permutation step(degree);
    std::iota(step.begin(), step.end(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) step[c[i]] = c[(i + 1) % c.size()];
    Permutation next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = step[result[x]];
    result = std::move(next);
  }
  return result;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupTable from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                             std::string label, std::size_t order_bound) {
  if (degree == 0) throw InvalidConstruction("permutation degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != degree) throw InvalidConstruction("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[v]) {
        throw InvalidConstruction("generator is not a bijection");
      }
      hit[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Elem> index{{id, 0}};
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation c = compose(elems[i], g);
      if (index.find(c) == index.end()) {
        check_bound(elems.size() + 1, order_bound, "from_permutations");
        index.emplace(c, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(c));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(format_cycles(p));
  std::vector<Elem> generators;
  for (const auto& g : gens) {
    Elem e = index.at(g);
    if (e != 0 && std::find(generators.begin(), generators.end(), e) == generators.end()) {
      generators.push_back(e);
    }
  }
  if (label.empty()) label = "perm(" + std::to_string(degree) + ")";
  return GroupTable::from_cayley(std::move(label), n, std::move(table), std::move(labels),
                                 std::move(generators));
}

GroupTable cyclic_group(std::size_t n, std::size_t order_bound) {
  if (n == 0) throw InvalidConstruction("cyclic group of order 0");
  check_bound(n, order_bound, "cyclic_group");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return GroupTable::from_cayley("Z" + std::to_string(n), n, std::move(table), std::move(labels),
                                 std::move(gens));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string label,
                          std::size_t order_bound) {
  const std::size_t na = a.order(), nb = b.order();
  check_bound(na * nb, order_bound, "direct_product");
  const std::size_t n = na * nb;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.element_label(static_cast<Elem>(x / nb)) + "," +
                     b.element_label(static_cast<Elem>(x % nb)) + ")");
  }
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b.generators()) gens.push_back(g);
  if (label.empty()) label = a.label() + "x" + b.label();
  return GroupTable::from_cayley(std::move(label), n, std::move(table), std::move(labels),
                                 std::move(gens));
}

unsigned element_order(const GroupTable& g, Elem x) {
  if (x >= g.order()) throw IndexOutOfRange("element index out of range");
  return g.elem_order(x);
}

// ---------------------------------------------------------------------------
// Subgroups

ElementSet generated_subgroup(const GroupTable& g, std::span<const Elem> gens) {
  ElementSet in(g.order());
  std::vector<Elem> list{0};
  in.set(0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(list[i], s);
      if (!in.test(y)) {
        in.set(y);
        list.push_back(y);
      }
    }
  }
  return in;
}

bool generates(const GroupTable& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  if (n == 1) return true;
  ElementSet in(n);
  std::vector<Elem> list;
  list.reserve(n);
  list.push_back(0);
  in.set(0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(list[i], s);
      if (!in.test(y)) {
        in.set(y);
        list.push_back(y);
        if (list.size() == n) return true;
      }
    }
  }
  return false;
}

std::vector<Elem> to_elements(const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

ElementSet to_set(const GroupTable& g, std::span<const Elem> elems) {
  ElementSet s(g.order());
  for (Elem x : elems) s.set(x);
  return s;
}

std::vector<Elem> commutator_subgroup(const GroupTable& g) {
  const std::size_t n = g.order();
  ElementSet comms(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comms.set(g.commutator(static_cast<Elem>(a), static_cast<Elem>(b)));
  auto gens = to_elements(comms);
  return to_elements(generated_subgroup(g, gens));
}

bool is_perfect(const GroupTable& g) { return commutator_subgroup(g).size() == g.order(); }

std::vector<unsigned long long> abelianization(const GroupTable& g) {
  const auto derived = commutator_subgroup(g);
  ElementSet in_derived = to_set(g, derived);
  const unsigned long long m = g.order() / derived.size();
  if (m == 1) return {};
  // For each prime p, c_k = #{cosets xG' : x^(p^k) in G'} = p^(sum_i min(k, e_i)).
  std::vector<std::vector<unsigned long long>> prime_powers;  // descending per prime
  for (unsigned long long p : prime_factors(m)) {
    unsigned long long p_part = 1;
    for (unsigned long long t = m; t % p == 0; t /= p) p_part *= p;
    std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
    unsigned long long prev = 1, pk = 1;
    while (prev < p_part) {
      pk *= p;
      std::size_t hits = 0;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (in_derived.test(g.power(static_cast<Elem>(x), static_cast<long long>(pk)))) ++hits;
      }
      unsigned long long ck = hits / derived.size();
      unsigned d = 0;
      for (unsigned long long r = ck / prev; r > 1; r /= p) ++d;
      at_least.push_back(d);
      prev = ck;
    }
    std::vector<unsigned long long> powers;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      unsigned next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      unsigned long long q = 1;
      for (std::size_t j = 0; j <= k; ++j) q *= p;
      for (unsigned c = 0; c < at_least[k] - next; ++c) powers.push_back(q);
    }
    std::sort(powers.rbegin(), powers.rend());
    prime_powers.push_back(std::move(powers));
  }
  std::size_t rank = 0;
  for (const auto& v : prime_powers) rank = std::max(rank, v.size());
  std::vector<unsigned long long> factors(rank, 1);
  for (const auto& v : prime_powers)
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<std::vector<Elem>> index_two_subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n % 2 != 0) return {};
  std::vector<Elem> squares;
  for (std::size_t x = 0; x < n; ++x) squares.push_back(g.mul(static_cast<Elem>(x), static_cast<Elem>(x)));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  // K = <x^2> contains G' and G/K is elementary abelian of order 2^t.
  const auto kernel = to_elements(generated_subgroup(g, squares));
  const std::size_t cosets = n / kernel.size();
  if (cosets == 1) return {};
  std::vector<std::int32_t> coset_of(n, -1);
  std::vector<Elem> coset_rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const auto id = static_cast<std::int32_t>(coset_rep.size());
    coset_rep.push_back(static_cast<Elem>(x));
    for (Elem k : kernel) coset_of[g.mul(static_cast<Elem>(x), k)] = id;
  }
  std::vector<std::int64_t> coord(cosets, -1);
  coord[coset_of[0]] = 0;
  std::vector<std::int32_t> spanned{coset_of[0]};
  unsigned t = 0;
  for (std::size_t x = 0; x < n && spanned.size() < cosets; ++x) {
    if (coord[coset_of[x]] >= 0) continue;
    const std::size_t before = spanned.size();
    for (std::size_t i = 0; i < before; ++i) {
      Elem y = g.mul(coset_rep[spanned[i]], static_cast<Elem>(x));
      coord[coset_of[y]] = coord[spanned[i]] | (std::int64_t{1} << t);
      spanned.push_back(coset_of[y]);
    }
    ++t;
  }
  std::vector<std::vector<Elem>> result;
  for (std::int64_t f = 1; f < (std::int64_t{1} << t); ++f) {
    std::vector<Elem> h;
    for (std::size_t x = 0; x < n; ++x) {
      if (__builtin_popcountll(static_cast<unsigned long long>(coord[coset_of[x]] & f)) % 2 == 0) {
        h.push_back(static_cast<Elem>(x));
      }
    }
    result.push_back(std::move(h));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<unsigned> nilpotency_class(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Elem> current(n);
  std::iota(current.begin(), current.end(), Elem{0});
  unsigned c = 0;
  while (current.size() > 1) {
    ElementSet comms(n);
    for (Elem a : current)
      for (std::size_t b = 0; b < n; ++b) comms.set(g.commutator(a, static_cast<Elem>(b)));
    auto gens = to_elements(comms);
    auto next = to_elements(generated_subgroup(g, gens));
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
    ++c;
  }
  return c;
}

std::vector<Elem> center(const GroupTable& g) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.class_size(static_cast<Elem>(x)) == 1) out.push_back(static_cast<Elem>(x));
  return out;
}

std::vector<Elem> greedy_generating_set(const GroupTable& g) {
  std::vector<Elem> gens;
  ElementSet current = generated_subgroup(g, gens);
  while (current.count() < g.order()) {
    std::size_t best_size = 0;
    Elem best = 0;
    ElementSet best_set;
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (current.test(x)) continue;
      gens.push_back(static_cast<Elem>(x));
      ElementSet s = generated_subgroup(g, gens);
      gens.pop_back();
      if (s.count() > best_size) {
        best_size = s.count();
        best = static_cast<Elem>(x);
        best_set = std::move(s);
        if (best_size == g.order()) break;
      }
    }
    gens.push_back(best);
    current = std::move(best_set);
  }
  return gens;
}

Subgroup restrict_to(const GroupTable& g, std::span<const Elem> elems, std::string label) {
  Subgroup s;
  s.to_parent.assign(elems.begin(), elems.end());
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
  if (s.to_parent.empty() || s.to_parent.front() != 0) throw NotAGroup("subgroup must contain the identity");
  s.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) s.from_parent[s.to_parent[i]] = static_cast<std::int32_t>(i);
  const std::size_t m = s.to_parent.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto c = s.from_parent[g.mul(s.to_parent[a], s.to_parent[b])];
      if (c < 0) throw NotAGroup("subset is not closed under multiplication");
      table[a * m + b] = static_cast<Elem>(c);
    }
  std::vector<std::string> labels;
  for (Elem x : s.to_parent) labels.push_back(g.element_label(x));
  if (label.empty()) label = g.label() + "|sub" + std::to_string(m);
  s.table = GroupTable::from_cayley(std::move(label), m, std::move(table), std::move(labels));
  return s;
}

Elem evaluate_word(const GroupTable& g, std::string_view word,
                   const std::unordered_map<char, Elem>& symbols) {
  Elem result = 0;
  std::size_t pos = 0;
  while (pos < word.size()) {
    char c = word[pos++];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') continue;
    if (c == '1') continue;
    auto it = symbols.find(c);
    if (it == symbols.end()) throw ParseError(std::string("unknown symbol '") + c + "' in word");
    long long e = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < word.size() && word[pos] == '-') {
        neg = true;
        ++pos;
      }
      std::size_t start = pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      if (start == pos) throw ParseError("missing exponent in word");
      e = std::stoll(std::string(word.substr(start, pos - start)));
      if (neg) e = -e;
    }
    result = g.mul(result, g.power(it->second, e));
  }
  return result;
}

}  // namespace ramify
