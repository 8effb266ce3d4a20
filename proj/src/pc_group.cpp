#include "ramify/pc_group.hpp"

#include <cctype>

#include "ramify/error.hpp"

namespace ramify {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  bool peek(char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  }
  unsigned number() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number at offset " + std::to_string(start));
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  }
  std::size_t generator(std::size_t count) {
    skip();
    if (pos >= text.size() || text[pos] != 'g') throw ParseError("expected a generator at offset " + std::to_string(pos));
    ++pos;
    unsigned k = number();
    if (k < 1 || k > count) throw ParseError("generator g" + std::to_string(k) + " out of range");
    return k - 1;
  }
};

std::vector<std::size_t> parse_word(Lexer& lex, std::size_t count) {
  std::vector<std::size_t> word;
  if (lex.peek('1')) {
    lex.number();
    return word;
  }
  while (lex.peek('g')) {
    std::size_t k = lex.generator(count);
    unsigned e = 1;
    if (lex.peek('^')) {
      lex.expect('^');
      e = lex.number();
    }
    word.insert(word.end(), e, k);
  }
  return word;
}

void check_later(const std::vector<std::size_t>& word, std::size_t i) {
  for (std::size_t k : word) {
    if (k <= i) throw ParseError("relation word must use generators after g" + std::to_string(i + 1));
  }
}

class Collector {
 public:
  explicit Collector(const PcPresentation& pc) : pc_(pc) {}

  void mul_gen(std::vector<unsigned>& v, std::size_t k) const {
    const std::size_t n = v.size();
    std::vector<std::size_t> tail;
    for (std::size_t j = k + 1; j < n; ++j) {
      tail.insert(tail.end(), v[j], j);
      v[j] = 0;
    }
    if (++v[k] == pc_.relative_orders[k]) {
      v[k] = 0;
      if (auto it = pc_.powers.find(k); it != pc_.powers.end()) {
        for (std::size_t w : it->second) mul_gen(v, w);
      }
    }
    for (std::size_t j : tail) {
      auto it = pc_.conjugates.find({j, k});
      if (it == pc_.conjugates.end()) {
        mul_gen(v, j);
      } else {
        for (std::size_t w : it->second) mul_gen(v, w);
      }
    }
  }

 private:
  const PcPresentation& pc_;
};

}  // namespace

PcPresentation parse_pc(std::string_view relations, std::size_t generators,
                        std::vector<unsigned> relative_orders) {
  PcPresentation pc;
  if (relative_orders.empty()) relative_orders.assign(generators, 2);
  if (relative_orders.size() != generators) throw ParseError("wrong number of relative orders");
  for (unsigned p : relative_orders) {
    if (p < 2) throw ParseError("relative orders must be at least 2");
  }
  pc.relative_orders = std::move(relative_orders);
  Lexer lex{relations};
  while (!lex.done()) {
    if (lex.peek(',') || lex.peek(';')) {
      ++lex.pos;
      continue;
    }
    std::size_t j = lex.generator(generators);
    lex.expect('^');
    if (lex.peek('g')) {
      std::size_t i = lex.generator(generators);
      if (i >= j) throw ParseError("conjugate relations need g_j^g_i with j > i");
      lex.expect('=');
      auto word = parse_word(lex, generators);
      check_later(word, i);
      pc.conjugates[{j, i}] = std::move(word);
    } else {
      unsigned e = lex.number();
      if (e != pc.relative_orders[j]) {
        throw ParseError("power relation for g" + std::to_string(j + 1) + " must use its relative order");
      }
      lex.expect('=');
      auto word = parse_word(lex, generators);
      check_later(word, j);
      pc.powers[j] = std::move(word);
    }
  }
  return pc;
}

Elem pc_index(const PcPresentation& pc, std::span<const unsigned> exponents) {
  if (exponents.size() != pc.generator_count()) throw IndexOutOfRange("wrong number of exponents");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] >= pc.relative_orders[i]) throw IndexOutOfRange("exponent exceeds relative order");
    idx = idx * pc.relative_orders[i] + exponents[i];
  }
  return static_cast<Elem>(idx);
}

GroupTable pc_group(const PcPresentation& pc, std::string label, std::size_t order_bound) {
  const std::size_t gens = pc.generator_count();
  std::size_t n = 1;
  for (unsigned p : pc.relative_orders) {
    n *= p;
    if (n > std::min(order_bound, kMaxOrderBound)) {
      throw BoundExceeded("pc_group: order exceeds bound " + std::to_string(order_bound));
    }
  }
  auto decode = [&](std::size_t idx) {
    std::vector<unsigned> v(gens);
    for (std::size_t i = gens; i-- > 0;) {
      v[i] = static_cast<unsigned>(idx % pc.relative_orders[i]);
      idx /= pc.relative_orders[i];
    }
    return v;
  };
  Collector collector(pc);
  // right[k][x] = x * g_k
  std::vector<std::vector<Elem>> right(gens, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < gens; ++k) {
      auto v = decode(x);
      collector.mul_gen(v, k);
      right[k][x] = pc_index(pc, v);
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    auto word = decode(b);
    for (std::size_t a = 0; a < n; ++a) {
      Elem x = static_cast<Elem>(a);
      for (std::size_t k = 0; k < gens; ++k)
        for (unsigned e = 0; e < word[k]; ++e) x = right[k][x];
      table[a * n + b] = x;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto v = decode(x);
    std::string s;
    for (std::size_t i = 0; i < gens; ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += "g" + std::to_string(i + 1);
      if (v[i] > 1) s += "^" + std::to_string(v[i]);
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  std::vector<Elem> generators;
  for (std::size_t k = 0; k < gens; ++k) generators.push_back(right[k][0]);
  return GroupTable::from_cayley(std::move(label), n, std::move(table), std::move(labels),
                                 std::move(generators), n <= 512);
}

}  // namespace ramify
