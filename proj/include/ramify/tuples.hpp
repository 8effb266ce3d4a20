#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace ramify {

using Rational = boost::rational<long long>;

/// -2 + sum(1 - 1/m_i), exactly.
Rational theta(std::span<const unsigned> entries);

/// A branching type [m1,...,mr], kept sorted.
class TupleType {
 public:
  TupleType() = default;
  /// Sorts the entries. Throws std::invalid_argument on an entry < 2 or an empty list.
  explicit TupleType(std::vector<unsigned> entries);

  std::span<const unsigned> entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }

  Rational theta() const { return theta_; }
  /// 2/Theta and 4/Theta, when Theta > 0.
  std::optional<Rational> alpha() const;
  std::optional<Rational> beta() const;

  /// "[2,3,7]"
  std::string str() const;
  /// "[2,3,7]_84" using alpha, or beta when `mixed`.
  std::string subscripted(bool mixed = false) const;

  auto operator<=>(const TupleType& o) const { return entries_ <=> o.entries_; }
  bool operator==(const TupleType& o) const { return entries_ == o.entries_; }

 private:
  std::vector<unsigned> entries_;
  Rational theta_{0};
};

/// Parses "2,5,5" or "[2,5,5]".
TupleType parse_type(std::string_view text);

bool in_N(std::span<const unsigned> entries);
bool in_M(std::span<const unsigned> entries);

inline constexpr unsigned kTupleEntryBound = 200;

/// All of N_r (resp. M_r) with entries <= bound, sorted lexicographically.
std::vector<TupleType> enumerate_N(std::size_t r, unsigned bound = kTupleEntryBound);
std::vector<TupleType> enumerate_M(std::size_t r, unsigned bound = kTupleEntryBound);

}  // namespace ramify
