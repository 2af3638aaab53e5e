#include <doctest.h>

#include "ccs/automorphisms.hpp"
#include "ccs/constructors.hpp"
#include "ccs/errors.hpp"
#include "ccs/structure.hpp"

using namespace ccs;

namespace {

int count_of_order(const GroupTable& g, std::uint32_t k) {
  int n = 0;
  for (Element x = 0; x < g.order(); ++x) n += g.element_order(x) == k;
  return n;
}

ElementSet span(const GroupTable& g, std::vector<Element> seeds) {
  return generated_subgroup(g, seeds);
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("basic families") {
  CHECK(cyclic(1).order() == 1);
  const auto v4 = elementary_abelian(2, 2);
  CHECK(count_of_order(v4, 2) == 3);
  CHECK(direct_power(a5(), 2).order() == 3600);
  CHECK(direct_product(cyclic(2), cyclic(3)).order() == 6);
  CHECK(is_cyclic(direct_product(cyclic(2), cyclic(3))));
  CHECK_THROWS_AS(cyclic(0), DomainError);
  CHECK_THROWS_AS(elementary_abelian(4, 2), DomainError);
  CHECK_THROWS_AS(direct_power(cyclic(2), 0), DomainError);
}

TEST_CASE("dihedral") {
  CHECK(count_of_order(dihedral(8), 4) == 2);
  CHECK(is_isomorphic(dihedral(4), elementary_abelian(2, 2)));
  CHECK_FALSE(is_nilpotent(dihedral(12)));
  CHECK_THROWS_AS(dihedral(7), DomainError);
  CHECK_THROWS_AS(dihedral(2), DomainError);
  for (std::size_t n = 6; n <= 40; n += 2) {
    const auto g = dihedral(n);
    const std::size_t half = n / 2;
    // x^2 generates the derived subgroup.
    CHECK(derived_subgroup(g) == span(g, {pair_index(2 % half, 0, half)}));
    const auto rot = span(g, {pair_index(1, 0, half)});
    for (const auto& c : characteristic_subgroups(g)) {
      if (c.size() < g.order()) CHECK(c.is_subset_of(rot));
    }
  }
}

TEST_CASE("dicyclic and quaternion") {
  CHECK(count_of_order(quaternion(8), 2) == 1);
  CHECK(count_of_order(dicyclic(3), 2) == 1);
  for (int k = 1; k <= 4; ++k) {
    const std::size_t n = std::size_t{1} << k;
    CHECK(is_isomorphic(dicyclic(n), quaternion(4 * n)));
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto g = dicyclic(n);
    CHECK(count_of_order(g, 2) == 1);
    const auto a = span(g, {pair_index(1, 0, 2 * n)});
    for (const auto& c : characteristic_subgroups(g)) {
      if (c.size() < g.order()) CHECK(c.is_subset_of(a));
    }
  }
  CHECK_THROWS_AS(quaternion(12), DomainError);
  CHECK_THROWS_AS(quaternion(4), DomainError);
}

TEST_CASE("semidihedral") {
  const auto g = semidihedral(16);
  CHECK(g.order() == 16);
  CHECK(semidihedral(32).order() == 32);
  const Element r = 1;
  const Element s = 8;
  const Element r2 = g.mul(r, r);
  CHECK(is_isomorphic(subgroup_table(g, span(g, {r})), cyclic(8)));
  CHECK(is_isomorphic(subgroup_table(g, span(g, {r2, s})), dihedral(8)));
  CHECK(is_isomorphic(subgroup_table(g, span(g, {r2, g.mul(r, s)})), quaternion(8)));
  // Exactly one cyclic subgroup of index 2.
  int cyclic_maximal = 0;
  for (const auto& h : all_subgroups(g)) {
    if (h.size() == 8 && is_cyclic(g, h)) ++cyclic_maximal;
  }
  CHECK(cyclic_maximal == 1);
  CHECK_THROWS_AS(semidihedral(8), DomainError);
}

TEST_CASE("extraspecial") {
  const auto p = extraspecial(3, 1, Sign::kPlus);
  CHECK(p.order() == 27);
  CHECK(p.exponent() == 3);
  CHECK(center(p).size() == 3);

  const auto m = extraspecial(3, 1, Sign::kMinus);
  CHECK(m.order() == 27);
  CHECK(m.exponent() == 9);
  const auto w = omega(m, 1);
  CHECK(w.size() == 9);
  CHECK_FALSE(is_cyclic(m, w));
  CHECK(is_characteristic(m, w));

  CHECK(center(extraspecial(2, 2, Sign::kPlus)).size() == 2);

  for (auto [q, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
    for (Sign sg : {Sign::kPlus, Sign::kMinus}) {
      const auto g = extraspecial(q, n, sg);
      CAPTURE(q);
      CAPTURE(n);
      CHECK(center(g).size() == static_cast<std::size_t>(q));
      CHECK(derived_subgroup(g).size() == static_cast<std::size_t>(q));
      CHECK(frattini_p_group(g).size() == static_cast<std::size_t>(q));
    }
  }
  CHECK(is_isomorphic(extraspecial(2, 1, Sign::kPlus), dihedral(8)));
  CHECK(is_isomorphic(extraspecial(2, 1, Sign::kMinus), quaternion(8)));
  CHECK_THROWS_AS(extraspecial(4, 1, Sign::kPlus), DomainError);
  CHECK_THROWS_AS(extraspecial(3, 0, Sign::kPlus), DomainError);
}

TEST_CASE("2^{1+4} involution counts") {
  CHECK(count_of_order(extraspecial(2, 2, Sign::kPlus), 2) == 19);
  CHECK(count_of_order(extraspecial(2, 2, Sign::kMinus), 2) == 11);
}

TEST_CASE("central products") {
  const auto d8 = dihedral(8);
  const auto c4 = cyclic(4);
  const auto zd = center(d8);
  const auto two = span(c4, {2});
  const Element z = zd.elements()[1];
  const auto g = central_product(d8, c4, zd, two, {{0, 0}, {z, 2}});
  CHECK(g.order() == 16);
  CHECK(is_isomorphic(g, pauli(1)));

  for (int n = 1; n <= 2; ++n) {
    const auto pn = pauli(n);
    CHECK(pn.order() == (std::size_t{1} << (2 * n + 2)));
    CHECK(center(pn).size() == 4);
    CHECK(is_cyclic(pn, center(pn)));
  }

  const auto q8 = quaternion(8);
  CHECK(is_isomorphic(central_product_of_centers(d8, d8), central_product_of_centers(q8, q8)));

  // Pairing that is not a homomorphism.
  CHECK_THROWS_AS(central_product(d8, c4, zd, two, {{0, 2}, {z, 0}}), DomainError);
  // Non-central subgroup.
  CHECK_THROWS_AS(central_product(d8, c4, span(d8, {pair_index(0, 1, 4)}), two,
                                  {{0, 0}, {pair_index(0, 1, 4), 2}}),
                  DomainError);
  // Centers of different orders.
  CHECK_THROWS_AS(central_product_of_centers(d8, c4), DomainError);
}

TEST_CASE("metacyclic") {
  const auto f21 = metacyclic7(7, 3, 1, 2);
  CHECK(f21.order() == 21);
  const auto syl7 = span(f21, {pair_index(1, 0, 7)});
  CHECK(syl7.size() == 7);
  CHECK(is_normal(f21, syl7));

  const auto g63 = metacyclic6(7, 3, 4);
  CHECK(g63.order() == 63);
  CHECK(g63.element_order(pair_index(1, 0, 21)) == 21);

  for (auto [m, p, a] : {std::tuple{5, 2, 1}, {7, 3, 2}, {35, 2, 1}}) {
    const auto g = metacyclic7(m, p, a, 1);
    CHECK(is_abelian(g));
  }

  // Every element outside <x> has order p for CCS parameters of clause (vi).
  for (auto [m, p, k] : {std::tuple{7, 3, 4}, {7, 3, 16}, {13, 3, 16}, {5, 2, 9}, {11, 5, 16}}) {
    const auto g = metacyclic6(m, p, k);
    const std::int64_t mod = m * p;
    for (Element e = 0; e < g.order(); ++e) {
      if (static_cast<std::int64_t>(e) >= mod) CHECK(g.element_order(e) == static_cast<std::uint32_t>(p));
    }
  }

  CHECK_THROWS_AS(metacyclic6(7, 3, 2), DomainError);
  CHECK_THROWS_AS(metacyclic6(6, 3, 1), DomainError);
  CHECK_THROWS_AS(metacyclic7(3, 5, 1, 2), DomainError);
}

TEST_CASE("perfect groups") {
  const auto s = sl25();
  CHECK(s.order() == 120);
  CHECK(is_perfect(s));
  CHECK(count_of_order(s, 2) == 1);

  const auto a = a5();
  CHECK(a.order() == 60);
  CHECK(normal_subgroups(a).size() == 2);
  CHECK(is_isomorphic(quotient(s, center(s)).table, a));
}

TEST_CASE("size bounds") {
  Bounds b;
  b.construction = 100;
  CHECK_THROWS_AS(cyclic(101, b), SizeLimitError);
  CHECK_THROWS_AS(direct_power(a5(), 2, b), SizeLimitError);
  CHECK_THROWS_AS(dihedral(200, b), SizeLimitError);
}

}  // TEST_SUITE
