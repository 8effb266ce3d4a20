#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ramify {

/// Dense index of a group element. Element 0 is always the identity.
using Elem = std::uint16_t;

/// Subset of a group's elements, indexed by `Elem`.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultOrderBound = 2048;
inline constexpr std::size_t kMaxOrderBound = 65535;

/// A finite group materialised as an immutable Cayley table.
///
/// Besides the table the object caches inverses, element orders and the
/// partition into conjugacy classes. All accessors are O(1). Instances are
/// immutable after construction and may be shared across threads.
class GroupTable {
 public:
  /// Builds a group from a row-major n*n table whose identity is element 0.
  ///
  /// The identity, inverse and associativity axioms are verified
  /// (associativity exhaustively for n <= 64, otherwise on at least 10*n^2
  /// pseudo-random triples, unless `exhaustive`). Throws NotAGroup on failure.
  static GroupTable from_cayley(std::string label, std::size_t n, std::vector<Elem> table,
                                std::vector<std::string> element_labels = {},
                                std::vector<Elem> generators = {}, bool exhaustive = false);

  GroupTable() = default;

  std::size_t order() const { return n_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// by * x * by^-1
  Elem conjugate(Elem x, Elem by) const { return mul(mul(by, x), inv_[by]); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  Elem power(Elem x, long long k) const;

  unsigned elem_order(Elem x) const { return order_[x]; }
  std::size_t conj_class(Elem x) const { return class_id_[x]; }
  std::size_t class_count() const { return class_sizes_.size(); }
  std::size_t class_size(Elem x) const { return class_sizes_[class_id_[x]]; }
  /// Least element of every conjugacy class, in increasing order.
  std::span<const Elem> class_representatives() const { return class_reps_; }

  const std::string& label() const { return label_; }
  const std::string& element_label(Elem x) const { return element_labels_[x]; }
  std::optional<Elem> find_element(std::string_view element_label) const;

  /// Elements known to generate the group (may be empty for the trivial group).
  std::span<const Elem> generators() const { return generators_; }

  std::span<const Elem> row(Elem a) const {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

  bool is_abelian() const { return abelian_; }
  /// Elements of order `m`, increasing.
  std::vector<Elem> elements_of_order(unsigned m) const;
  ElementSet empty_set() const { return ElementSet(n_); }

  GroupTable with_label(std::string label) const;

 private:
  void finish(bool exhaustive_associativity);

  std::size_t n_ = 0;
  std::string label_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<unsigned> order_;
  std::vector<std::size_t> class_id_;
  std::vector<std::size_t> class_sizes_;
  std::vector<Elem> class_reps_;
  std::vector<std::string> element_labels_;
  std::unordered_map<std::string, Elem> label_index_;
  std::vector<Elem> generators_;
  bool abelian_ = true;
};

/// A permutation of {0,...,degree-1}, stored as its image list.
using Permutation = std::vector<int>;

/// Parses cycle notation such as "(1,2,3)(4,5)" over {1,...,degree}.
/// A product of non-disjoint cycles is composed right to left.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Canonical cycle notation: cycles start at their least point and are
/// ordered by it; fixed points are omitted; the identity is "()".
std::string format_cycles(const Permutation& p);

/// The group generated by the permutations, with product (a*b)(x) = a(b(x)).
GroupTable from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                             std::string label = {}, std::size_t order_bound = kDefaultOrderBound);

GroupTable cyclic_group(std::size_t n, std::size_t order_bound = kDefaultOrderBound);

/// Componentwise product; (i, j) has index i*|b| + j.
GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string label = {},
                          std::size_t order_bound = kDefaultOrderBound);
inline Elem product_index(const GroupTable& a, const GroupTable& b, Elem i, Elem j) {
  (void)a;
  return static_cast<Elem>(static_cast<std::size_t>(i) * b.order() + j);
}

unsigned element_order(const GroupTable& g, Elem x);

/// Characteristic vector of the subgroup generated by `gens`.
ElementSet generated_subgroup(const GroupTable& g, std::span<const Elem> gens);
bool generates(const GroupTable& g, std::span<const Elem> gens);
std::vector<Elem> to_elements(const ElementSet& s);
ElementSet to_set(const GroupTable& g, std::span<const Elem> elems);

/// Sorted elements of the derived subgroup G'.
std::vector<Elem> commutator_subgroup(const GroupTable& g);
bool is_perfect(const GroupTable& g);

/// Invariant factors d1 | d2 | ... of G/G'. Empty for trivial and perfect groups.
std::vector<unsigned long long> abelianization(const GroupTable& g);

/// All subgroups of index two, each as a sorted element list; the list is
/// sorted lexicographically.
std::vector<std::vector<Elem>> index_two_subgroups(const GroupTable& g);

/// Nilpotency class, or nullopt if the group is not nilpotent.
std::optional<unsigned> nilpotency_class(const GroupTable& g);

std::vector<Elem> center(const GroupTable& g);

/// Greedy generating set: repeatedly adds the element that enlarges the
/// generated subgroup most, ties broken by lowest index.
std::vector<Elem> greedy_generating_set(const GroupTable& g);

/// A subgroup re-indexed as a standalone group.
struct Subgroup {
  GroupTable table;
  std::vector<Elem> to_parent;            ///< subgroup index -> parent index
  std::vector<std::int32_t> from_parent;  ///< parent index -> subgroup index or -1
};

/// Restricts `g` to the given subgroup (which must contain the identity and
/// be closed; NotAGroup otherwise).
Subgroup restrict_to(const GroupTable& g, std::span<const Elem> elems, std::string label = {});

/// Evaluates a word such as "zx^2y" or "x^-1" using single-letter symbols.
Elem evaluate_word(const GroupTable& g, std::string_view word,
                   const std::unordered_map<char, Elem>& symbols);

}  // namespace ramify
