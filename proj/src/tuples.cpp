#include "ramify/tuples.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ramify/error.hpp"

namespace ramify {

Rational theta(std::span<const unsigned> entries) {
  Rational t(-2);
  for (unsigned m : entries) t += Rational(1) - Rational(1, static_cast<long long>(m));
  return t;
}

TupleType::TupleType(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty branching type");
  for (unsigned m : entries_) {
    if (m < 2) throw std::invalid_argument("branching orders must be at least 2");
  }
  std::sort(entries_.begin(), entries_.end());
  theta_ = ramify::theta(entries_);
}

std::optional<Rational> TupleType::alpha() const {
  if (theta_ <= 0) return std::nullopt;
  return Rational(2) / theta_;
}

std::optional<Rational> TupleType::beta() const {
  if (theta_ <= 0) return std::nullopt;
  return Rational(4) / theta_;
}

std::string TupleType::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + "]";
}

std::string TupleType::subscripted(bool mixed) const {
  auto v = mixed ? beta() : alpha();
  std::string s = str() + "_";
  if (!v) return s + "?";
  s += std::to_string(v->numerator());
  if (v->denominator() != 1) s += "/" + std::to_string(v->denominator());
  return s;
}

TupleType parse_type(std::string_view text) {
  std::vector<unsigned> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      entries.push_back(static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start)))));
    } else if (c == ',' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      throw ParseError("bad character in branching type: " + std::string(text));
    }
  }
  try {
    return TupleType(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": " + std::string(text));
  }
}

namespace {

bool sorted_at_least_two(std::span<const unsigned> e) {
  if (e.size() < 3) return false;
  if (e[0] < 2) return false;
  return std::is_sorted(e.begin(), e.end());
}

}  // namespace

bool in_N(std::span<const unsigned> entries) {
  if (!sorted_at_least_two(entries)) return false;
  Rational t = theta(entries);
  if (t <= 0) return false;
  Rational a = Rational(2) / t;
  if (a.denominator() != 1) return false;
  return entries.back() <= a.numerator();
}

bool in_M(std::span<const unsigned> entries) {
  if (!sorted_at_least_two(entries)) return false;
  Rational t = theta(entries);
  if (t <= 0) return false;
  Rational b = Rational(4) / t;
  if (b.denominator() != 1) return false;
  const long long beta = b.numerator();
  if (static_cast<long long>(entries.back()) > beta) return false;
  if (beta % 2 != 0) return false;
  const long long half_square = beta * beta / 2;
  for (unsigned m : entries) {
    if (half_square % m != 0) return false;
  }
  return true;
}

namespace {

// slack: 2 for N (condition m_r <= 2/Theta), 4 for M.
void search(std::size_t r, unsigned bound, long long slack, bool mixed, std::vector<unsigned>& prefix,
            Rational partial, std::vector<TupleType>& out) {
  const std::size_t k = prefix.size();
  if (k == r) {
    if (mixed ? in_M(prefix) : in_N(prefix)) out.emplace_back(prefix);
    return;
  }
  const unsigned start = prefix.empty() ? 2 : prefix.back();
  for (unsigned m = start; m <= bound; ++m) {
    // Every later entry is >= m, and m_r >= m bounds the right-hand side.
    Rational term = Rational(1) - Rational(1, m);
    Rational lower = partial + term * static_cast<long long>(r - k);
    if (lower > Rational(2) + Rational(slack, m)) break;
    prefix.push_back(m);
    search(r, bound, slack, mixed, prefix, partial + term, out);
    prefix.pop_back();
  }
}

std::vector<TupleType> enumerate(std::size_t r, unsigned bound, bool mixed) {
  std::vector<TupleType> out;
  if (r < 3) return out;
  std::vector<unsigned> prefix;
  search(r, bound, mixed ? 4 : 2, mixed, prefix, Rational(0), out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TupleType> enumerate_N(std::size_t r, unsigned bound) { return enumerate(r, bound, false); }
std::vector<TupleType> enumerate_M(std::size_t r, unsigned bound) { return enumerate(r, bound, true); }

}  // namespace ramify
