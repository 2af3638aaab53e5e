#pragma once

#include <algorithm>
#include <cstddef>

namespace ccs {

/// Size limits shared by every enumeration in the library.
struct Bounds {
  // Largest group order for subgroup, normal-subgroup, automorphism and
  // isomorphism searches.
  std::size_t order = 256;
  // Largest group any constructor or permutation closure may produce.
  std::size_t construction = 10000;
  // Largest automorphism group materialized as an explicit list.
  std::size_t aut_list = 100000;
  // Largest automorphism group tracked by the generating-set search.
  std::size_t aut_closure = 4000000;

  /// Raises the enumeration bound to n, widening the construction bound
  /// when needed so that the two stay consistent.
  static Bounds with_order(std::size_t n) {
    Bounds b;
    b.order = n;
    b.construction = std::max(b.construction, n);
    return b;
  }
};

/// Tables up to this order get the full O(n^3) associativity check.
inline constexpr std::size_t kAssociativityCheckLimit = 512;

}  // namespace ccs
