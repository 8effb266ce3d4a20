#include "ramify/polygonal.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace ramify {

std::vector<unsigned long long> smith_invariants(IntegerMatrix m, PivotRule rule) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<unsigned long long> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool remainder = false;
    for (;;) {
      std::size_t pr = rows, pc = cols;
      if (remainder && rule == PivotRule::first_nonzero) {
        // smallest entry of row t and column t, so leftovers shrink
        auto take = [&](std::size_t i, std::size_t j) {
          if (m[i][j] && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) pr = i, pc = j;
        };
        for (std::size_t i = t; i < rows; ++i) take(i, t);
        for (std::size_t j = t + 1; j < cols; ++j) take(t, j);
      }
      if (pr == rows)
        for (std::size_t i = t; i < rows; ++i)
          for (std::size_t j = t; j < cols; ++j) {
            if (m[i][j] == 0) continue;
            if (pr == rows || (rule == PivotRule::smallest && std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
              pr = i;
              pc = j;
            }
          }
      if (pr == rows) {
        // remaining block is zero
        for (std::size_t k = t; k < std::min(rows, cols); ++k) diag.push_back(0);
        t = std::min(rows, cols);
        break;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = m[i][t] / m[t][t];
        if (q)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t]) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long q = m[t][j] / m[t][t];
        if (q)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j]) clean = false;
      }
      remainder = !clean;
      if (!clean) continue;
      // The pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            remainder = true;
            break;
          }
      if (divides) {
        diag.push_back(static_cast<unsigned long long>(std::llabs(m[t][t])));
        break;
      }
    }
  }
  // generators beyond the last relation are free
  for (std::size_t k = std::min(rows, cols); k < cols; ++k) diag.push_back(0);
  std::vector<unsigned long long> out, zeros;
  for (auto d : diag) {
    if (d == 1) continue;
    (d == 0 ? zeros : out).push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.insert(out.end(), zeros.begin(), zeros.end());
  return out;
}

IntegerMatrix polygonal_relations(std::span<const unsigned> orders) {
  const std::size_t r = orders.size();
  IntegerMatrix m(r + 1, std::vector<long long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) m[0][j] = 1;
  for (std::size_t i = 0; i < r; ++i) m[i + 1][i] = orders[i];
  return m;
}

std::vector<unsigned long long> polygonal_abelianization(std::span<const unsigned> orders, PivotRule rule) {
  return smith_invariants(polygonal_relations(orders), rule);
}

namespace {

// prime -> exponents, descending
std::map<unsigned long long, std::vector<unsigned>> primary_parts(std::span<const unsigned long long> factors) {
  std::map<unsigned long long, std::vector<unsigned>> parts;
  for (unsigned long long d : factors) {
    for (unsigned long long p = 2; p * p <= d; ++p) {
      unsigned e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      if (e) parts[p].push_back(e);
    }
    if (d > 1) parts[d].push_back(1);
  }
  for (auto& [p, v] : parts) std::sort(v.rbegin(), v.rend());
  return parts;
}

}  // namespace

bool is_abelian_quotient(std::span<const unsigned long long> a, std::span<const unsigned long long> b) {
  if (std::find(b.begin(), b.end(), 0ULL) != b.end()) {
    return std::count(b.begin(), b.end(), 0ULL) <= std::count(a.begin(), a.end(), 0ULL);
  }
  auto pa = primary_parts(a), pb = primary_parts(b);
  const auto free_a = std::count(a.begin(), a.end(), 0ULL);
  for (const auto& [p, eb] : pb) {
    std::vector<unsigned> ea = pa.count(p) ? pa[p] : std::vector<unsigned>{};
    // A free factor of a surjects onto any cyclic p-group.
    ea.insert(ea.begin(), static_cast<std::size_t>(free_a), ~0u);
    if (eb.size() > ea.size()) return false;
    for (std::size_t i = 0; i < eb.size(); ++i)
      if (eb[i] > ea[i]) return false;
  }
  return true;
}

bool quotient_admissible(const GroupTable& g, std::span<const unsigned> orders) {
  auto target = polygonal_abelianization(orders);
  auto ab = abelianization(g);
  return is_abelian_quotient(target, ab);
}

std::string format_abelian(std::span<const unsigned long long> factors) {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += factors[i] == 0 ? "Z" : "Z" + std::to_string(factors[i]);
  }
  return s;
}

}  // namespace ramify
