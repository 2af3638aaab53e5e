#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ccs/bounds.hpp"
#include "ccs/group.hpp"

namespace ccs {

// Families built on pairs x^i y^j store that element at index i + M*j,
// where M is the order of x: dihedral (x rotation, y reflection), dicyclic
// and quaternion (x = a, y = b), semidihedral (x = r, y = s), and both
// metacyclic families.
constexpr Element pair_index(std::int64_t i, std::int64_t j, std::int64_t modulus) {
  return static_cast<Element>(i + modulus * j);
}

enum class Sign { kPlus, kMinus };

/// Isomorphism between central subgroups, as (element of A, element of B).
using Pairing = std::vector<std::pair<Element, Element>>;

GroupTable cyclic(std::size_t n, const Bounds& bounds = {});
GroupTable elementary_abelian(std::int64_t p, int k, const Bounds& bounds = {});
/// (a, b) is stored at a + |A| * b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b, const Bounds& bounds = {});
/// S x ... x S with t >= 1 factors.
GroupTable direct_power(const GroupTable& s, int t, const Bounds& bounds = {});

/// <x, y | x^{order/2} = y^2 = 1, y x y = x^-1>; order even and >= 4.
GroupTable dihedral(std::size_t order, const Bounds& bounds = {});
/// <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>, order 4n.
GroupTable dicyclic(std::size_t n, const Bounds& bounds = {});
/// Generalized quaternion group of order 2^k >= 8 (the dicyclic group of
/// order 2^k).
GroupTable quaternion(std::size_t order, const Bounds& bounds = {});
/// <r, s | r^{order/2} = s^2 = 1, s r s = r^{order/4 - 1}>; order 2^n, n >= 4.
GroupTable semidihedral(std::size_t order, const Bounds& bounds = {});

/// Extraspecial group of order p^{1+2n}. Odd p: sign + is the Heisenberg
/// group over F_p^n (exponent p), sign - is C_{p^2} : C_p centrally
/// multiplied with n-1 Heisenberg factors (exponent p^2). p = 2: sign + is
/// the central product of n copies of D8, sign - replaces one by Q8.
GroupTable extraspecial(std::int64_t p, int n, Sign sign, const Bounds& bounds = {});

/// (A x B) / {(g, theta(g)) : g in zA} for central zA, zB and an
/// isomorphism theta: zA -> zB given by `pairing`.
GroupTable central_product(const GroupTable& a, const GroupTable& b, const ElementSet& za,
                           const ElementSet& zb, const Pairing& pairing,
                           const Bounds& bounds = {});

/// Central product identifying Z(A) with Z(B); both centers must be cyclic
/// of the same order. Lowest-index generators are paired.
GroupTable central_product_of_centers(const GroupTable& a, const GroupTable& b,
                                      const Bounds& bounds = {});

/// 2^{1+2n}_+ o C4.
GroupTable pauli(int n, const Bounds& bounds = {});

/// <x, y | x^{mp} = y^p = 1, y x y^-1 = x^k> on pairs (i mod mp, j mod p).
/// Requires p prime, (m, p) = 1, p below every prime of m, (k, mp) = 1 and
/// k^p = 1 mod mp. The CCS condition on k is deliberately not required.
GroupTable metacyclic6(std::int64_t m, std::int64_t p, std::int64_t k, const Bounds& bounds = {});

/// <x, y | x^m = y^{p^alpha} = 1, y x y^-1 = x^k> on pairs (i mod m, j mod p^alpha).
/// Requires p prime, (m, p) = 1, p below every prime of m, (m, k) = 1 and
/// k^{p^alpha} = 1 mod m.
GroupTable metacyclic7(std::int64_t m, std::int64_t p, std::int64_t alpha, std::int64_t k,
                       const Bounds& bounds = {});

/// SL(2, 5), generated by [[0,-1],[1,0]] and [[1,1],[0,1]]; order 120.
GroupTable sl25();
/// Alternating group on 5 points; order 60.
GroupTable a5();

}  // namespace ccs
