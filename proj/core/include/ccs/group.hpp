#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ccs/bounds.hpp"

namespace ccs {

/// Index of a group element inside its multiplication table.
using Element = std::uint32_t;

/// Images of 0..degree-1; composition is left-to-right, (a*b)[x] = b[a[x]].
using Permutation = std::vector<std::uint32_t>;

/// A finite group stored as its full multiplication table.
///
/// Element 0 is always the identity. The table is immutable once built and
/// is validated on construction: identity law, every row and column a
/// permutation, inverses, and full associativity when the order is at most
/// kAssociativityCheckLimit.
class GroupTable {
 public:
  /// Builds a table from a row-major order x order array.
  /// Throws DomainError when any group axiom fails.
  GroupTable(std::size_t order, std::vector<Element> mul,
             std::vector<std::string> names = {});

  /// Builds the table of the law `op` on 0..order-1, where 0 must be the
  /// identity of `op`.
  static GroupTable from_law(std::size_t order,
                             const std::function<Element(Element, Element)>& op,
                             std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return elt_order_[a]; }

  Element pow(Element a, std::int64_t e) const;
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  /// g x g^-1
  Element conjugate(Element g, Element x) const noexcept {
    return mul(mul(g, x), inv_[g]);
  }

  /// lcm of all element orders.
  std::uint64_t exponent() const;

  const std::vector<Element>& table() const noexcept { return mul_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> elt_order_;
  std::vector<std::string> names_;
};

/// A subset of a group's elements, stored as a bitset over element indices.
/// Used as the handle for subgroups.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t parent_order)
      : words_((parent_order + 63) / 64, 0), n_(parent_order) {}

  static ElementSet trivial(std::size_t parent_order) {
    ElementSet s(parent_order);
    s.insert(0);
    return s;
  }
  static ElementSet whole(std::size_t parent_order);

  bool contains(Element x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

  std::size_t size() const noexcept;
  std::size_t parent_order() const noexcept { return n_; }
  std::vector<Element> elements() const;

  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet intersection(const ElementSet& other) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Canonical order: by size, then lexicographically by element list.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t n_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Sorts subgroup lists into the library's canonical order.
void sort_canonical(std::vector<ElementSet>& sets);

/// Smallest subgroup containing `seeds`.
ElementSet generated_subgroup(const GroupTable& g, std::span<const Element> seeds);

/// Incrementally grown subgroup: keeps a short generator list so that
/// joins stay O(|result| * generators).
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const GroupTable& g);
  SubgroupBuilder(const GroupTable& g, std::span<const Element> seeds);

  /// Adds x; returns true when the subgroup grew.
  bool add(Element x);
  const ElementSet& set() const noexcept { return set_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  const std::vector<Element>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }

 private:
  const GroupTable* g_;
  ElementSet set_;
  std::vector<Element> elems_;
  std::vector<Element> gens_;
};

/// True when S contains the identity and is closed under products and inverses.
bool is_subgroup(const GroupTable& g, const ElementSet& s);

/// Group generated by permutations on 0..degree-1. Element 0 is the
/// identity permutation; other elements are numbered in breadth-first order
/// of discovery. Throws SizeLimitError past bounds.construction elements.
GroupTable from_generators(std::size_t degree, std::span<const Permutation> perms,
                           const Bounds& bounds = {});

/// The subgroup S as a standalone table, elements renumbered in increasing
/// index order (so the identity stays at 0).
GroupTable subgroup_table(const GroupTable& g, const ElementSet& s);

}  // namespace ccs
