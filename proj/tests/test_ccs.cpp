#include <doctest.h>

#include <algorithm>

#include "ccs/automorphisms.hpp"
#include "ccs/classify.hpp"
#include "ccs/constructors.hpp"
#include "ccs/corpus.hpp"
#include "ccs/errors.hpp"
#include "ccs/numberth.hpp"
#include "ccs/spec.hpp"
#include "ccs/structure.hpp"
#include "oracles.hpp"

using namespace ccs;

TEST_SUITE("ccs") {

TEST_CASE("characteristically simple") {
  CHECK(is_characteristically_simple(elementary_abelian(2, 2)));
  CHECK(is_characteristically_simple(elementary_abelian(3, 3)));
  CHECK(is_characteristically_simple(a5()));
  CHECK(is_characteristically_simple(direct_power(a5(), 2), Bounds::with_order(3600)));
  CHECK_FALSE(is_characteristically_simple(dihedral(8)));
  CHECK_FALSE(is_characteristically_simple(cyclic(4)));
  CHECK(is_characteristically_simple(cyclic(1)));
}

TEST_CASE("verdicts") {
  const auto d8 = is_ccs(dihedral(8));
  CHECK(d8.is_ccs);
  CHECK(d8.reason == Reason::kCcs);

  const auto sd = semidihedral(16);
  const auto r = is_ccs(sd);
  CHECK_FALSE(r.is_ccs);
  REQUIRE(r.witness.has_value());
  CHECK(r.reason == Reason::kNoncyclicCharacteristic);
  const auto w = subgroup_table(sd, *r.witness);
  CHECK((is_isomorphic(w, dihedral(8)) || is_isomorphic(w, quaternion(8))));

  CHECK(is_ccs(cyclic(12)).reason == Reason::kCyclic);
  CHECK_FALSE(is_ccs(cyclic(12)).is_ccs);
  CHECK(is_ccs(a5()).reason == Reason::kCharacteristicallySimple);
  const auto pow = is_ccs(direct_power(a5(), 2), Bounds::with_order(3600));
  CHECK_FALSE(pow.is_ccs);
  CHECK(pow.reason == Reason::kCharacteristicallySimple);

  const auto m = is_ccs(extraspecial(3, 1, Sign::kMinus));
  CHECK_FALSE(m.is_ccs);
  REQUIRE(m.witness.has_value());
  CHECK(m.witness->size() == 9);
}

TEST_CASE("verdict agrees with the definition oracle") {
  for (const GroupTable& g :
       {dihedral(8), quaternion(8), dihedral(12), dicyclic(3), elementary_abelian(2, 3), cyclic(6),
        semidihedral(16), metacyclic7(7, 3, 1, 2), pauli(1), direct_product(cyclic(2), dihedral(8)),
        extraspecial(3, 1, Sign::kPlus), extraspecial(3, 1, Sign::kMinus)}) {
    CAPTURE(g.order());
    CHECK(is_ccs(g).is_ccs == oracle::ccs(g));
  }
}

TEST_CASE("clauses") {
  CHECK(classify_ccs(extraspecial(3, 1, Sign::kPlus)).clause == Clause::kI);
  CHECK(classify_ccs(extraspecial(5, 1, Sign::kPlus)).clause == Clause::kI);
  CHECK(classify_ccs(extraspecial(2, 2, Sign::kPlus)).clause == Clause::kII);
  CHECK(classify_ccs(extraspecial(2, 2, Sign::kMinus)).clause == Clause::kII);
  CHECK(classify_ccs(pauli(2)).clause == Clause::kIII);
  CHECK(classify_ccs(dihedral(24)).clause == Clause::kIV);
  CHECK(classify_ccs(dicyclic(5)).clause == Clause::kV);
  CHECK(classify_ccs(metacyclic6(7, 3, 4)).clause == Clause::kVI);
  CHECK(classify_ccs(metacyclic7(7, 3, 2, 2)).clause == Clause::kVII);
  CHECK(classify_ccs(sl25()).clause == Clause::kIIX);

  // D8 and Q8 are also extraspecial; both clauses are reported.
  const auto d8 = classify_ccs(dihedral(8));
  CHECK(d8.clause == Clause::kIV);
  CHECK(std::count(d8.matching_clauses.begin(), d8.matching_clauses.end(), Clause::kII) == 1);
  const auto q8 = classify_ccs(quaternion(8));
  CHECK(q8.clause == Clause::kV);
  CHECK(std::count(q8.matching_clauses.begin(), q8.matching_clauses.end(), Clause::kII) == 1);

  const auto non = classify_ccs(cyclic(9));
  CHECK_FALSE(non.is_ccs);
  CHECK(non.clause == Clause::kNotApplicable);
}

TEST_CASE("clause labels round-trip") {
  for (Clause c : {Clause::kI, Clause::kII, Clause::kIII, Clause::kIV, Clause::kV, Clause::kVI,
                   Clause::kVII, Clause::kIIX, Clause::kNotApplicable}) {
    CHECK(clause_from_string(to_string(c)) == c);
  }
  CHECK(to_string(Clause::kIIX) == "iix");
  CHECK_THROWS_AS(clause_from_string("viii"), DomainError);
}

TEST_CASE("report diagnostics") {
  const auto r = classify_ccs(dihedral(12));
  CHECK(r.order == 12);
  CHECK(r.center_order == 2);
  CHECK(r.derived_order == 3);
  CHECK(r.frattini_order == 1u);
  CHECK(r.fitting_order == 6u);
  CHECK(r.aut_order == 12);
  CHECK_FALSE(r.nilpotent);
  CHECK_FALSE(r.perfect);
  CHECK(r.characteristic_orders == std::vector<std::size_t>{1, 2, 3, 6, 12});
}

TEST_CASE("perfect case") {
  CHECK(perfect_ccs_check(sl25()));
  // A5 has trivial center.
  CHECK_FALSE(perfect_ccs_check(a5()));
  CHECK_THROWS_AS(perfect_ccs_check(dihedral(8)), DomainError);

  const auto s = sl25();
  const auto chars = characteristic_subgroups(s);
  REQUIRE(chars.size() == 3);
  CHECK(chars[1] == center(s));
  CHECK(chars[1].size() == 2);

  // Cyclic normal subgroups of a perfect group are central.
  for (const GroupTable& g : {sl25(), a5()}) {
    const auto z = center(g);
    for (const auto& n : normal_subgroups(g)) {
      if (is_cyclic(g, n)) CHECK(n.is_subset_of(z));
    }
  }
}

TEST_CASE("Frobenius kernels") {
  const auto f21 = metacyclic7(7, 3, 1, 2);
  const auto syl7 = generated_subgroup(f21, std::vector<Element>{pair_index(1, 0, 7)});
  CHECK(is_frobenius_with_kernel(f21, syl7));
  const auto d8 = dihedral(8);
  CHECK_FALSE(is_frobenius_with_kernel(d8, generated_subgroup(d8, std::vector<Element>{1})));
  CHECK(is_frobenius_with_kernel(d8, ElementSet::whole(8)));
  CHECK_THROWS_AS(
      is_frobenius_with_kernel(d8, generated_subgroup(d8, std::vector<Element>{pair_index(0, 1, 4)})),
      DomainError);
}

TEST_CASE("Fitting subgroup is maximal") {
  CHECK(fitting_maximality_holds(dihedral(12)));
  CHECK(fitting_maximality_holds(metacyclic6(7, 3, 4)));
  CHECK(fitting_maximality_holds(dicyclic(3)));
  CHECK(fitting(metacyclic6(7, 3, 4)).size() == 21);
  CHECK_THROWS_AS(fitting_maximality_holds(dihedral(8)), DomainError);
  CHECK_THROWS_AS(fitting_maximality_holds(sl25()), DomainError);
  CHECK_THROWS_AS(fitting_maximality_holds(semidihedral(16)), DomainError);
}

TEST_CASE("two independent paths agree") {
  for (const auto& e : ccs_corpus(60)) {
    const auto g = build(e.spec);
    if (g.order() > 64) continue;
    CAPTURE(e.spec);
    const auto auts = automorphism_generators(g);
    bool path2 = !is_cyclic(g);
    bool nontrivial = false;
    for (const auto& s : all_subgroups(g)) {
      if (s.size() == 1 || s.size() == g.order() || !is_invariant(s, auts)) continue;
      nontrivial = true;
      path2 = path2 && is_cyclic(g, s);
    }
    CHECK(is_ccs(g).is_ccs == (path2 && nontrivial));
  }
}

TEST_CASE("nilpotent CCS groups are nonabelian p-groups") {
  for (const auto& e : ccs_corpus(100)) {
    const auto g = build(e.spec);
    if (!is_nilpotent(g)) continue;
    const auto r = is_ccs(g);
    if (!r.is_ccs) continue;
    CAPTURE(e.spec);
    CHECK(prime_power(static_cast<std::int64_t>(g.order())).has_value());
    CHECK_FALSE(is_abelian(g));
  }
}

TEST_CASE("pauli(1) has a characteristic quaternion subgroup") {
  // C4 o D8 contains a unique Q8, so the group is not CCS.
  const auto g = pauli(1);
  const auto r = is_ccs(g);
  CHECK_FALSE(r.is_ccs);
  REQUIRE(r.witness.has_value());
  CHECK(is_isomorphic(subgroup_table(g, *r.witness), quaternion(8)));
  // pauli(2) behaves as expected.
  const auto g2 = pauli(2);
  for (const auto& c : characteristic_subgroups(g2)) {
    if (c.size() < g2.order()) CHECK(c.is_subset_of(center(g2)));
  }
}

TEST_CASE("quotients by characteristic subgroups") {
  // Dic_3 / C_3 is cyclic of order 4: neither characteristically simple
  // nor CCS.
  const auto g = dicyclic(3);
  const auto three = generated_subgroup(g, std::vector<Element>{2});
  REQUIRE(three.size() == 3);
  REQUIRE(is_characteristic(g, three));
  const auto q = quotient(g, three).table;
  CHECK(is_cyclic(q));
  CHECK(q.order() == 4);
  CHECK_FALSE(is_characteristically_simple(q));
  CHECK_FALSE(is_ccs(q).is_ccs);

  // With cyclic quotients admitted, the statement holds on the corpus.
  for (const auto& e : ccs_corpus(100)) {
    const auto h = build(e.spec);
    if (h.order() > 64 || !is_ccs(h).is_ccs) continue;
    CAPTURE(e.spec);
    for (const auto& n : characteristic_subgroups(h)) {
      if (n.size() == 1 || n.size() == h.order()) continue;
      const auto qt = quotient(h, n).table;
      CHECK((is_cyclic(qt) || is_characteristically_simple(qt) || is_ccs(qt).is_ccs));
    }
  }
}

TEST_CASE("characteristic subgroups lift through quotients") {
  for (const GroupTable& g : {dihedral(12), dicyclic(3), quaternion(16), dihedral(16),
                              metacyclic6(7, 3, 4), extraspecial(3, 1, Sign::kMinus)}) {
    for (const auto& n : characteristic_subgroups(g)) {
      if (n.size() == 1 || n.size() == g.order()) continue;
      const auto q = quotient(g, n);
      for (const auto& hbar : characteristic_subgroups(q.table)) {
        ElementSet pre(g.order());
        for (Element x = 0; x < g.order(); ++x) {
          if (hbar.contains(q.coset_of[x])) pre.insert(x);
        }
        CHECK(is_characteristic(g, pre));
      }
    }
  }
}

}  // TEST_SUITE
