#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccs/automorphisms.hpp"
#include "ccs/constructors.hpp"
#include "ccs/errors.hpp"
#include "ccs/numberth.hpp"
#include "ccs/structure.hpp"
#include "oracles.hpp"

using namespace ccs;

namespace {

std::vector<std::size_t> class_sizes(const GroupTable& g) {
  std::vector<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<ElementSet>& sets, const ElementSet& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

std::vector<GroupTable> small_groups() {
  return {cyclic(1),         cyclic(6),          elementary_abelian(2, 2), elementary_abelian(2, 3),
          dihedral(8),       quaternion(8),      dihedral(12),             dicyclic(3),
          a5(),              semidihedral(16),   metacyclic7(7, 3, 1, 2),  pauli(1),
          extraspecial(3, 1, Sign::kMinus),      direct_product(cyclic(2), dihedral(8))};
}

}  // namespace

TEST_SUITE("automorphisms") {

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(quaternion(8)).maps.size() == 24);
  CHECK(automorphisms(elementary_abelian(2, 2)).maps.size() == 6);
  CHECK(automorphisms(cyclic(1)).maps.size() == 1);
  CHECK(automorphisms(dihedral(8)).maps.size() == 8);
  CHECK(automorphisms(a5()).maps.size() == 120);
  CHECK(automorphism_generators(sl25()).order == 120);
  CHECK(automorphism_generators(semidihedral(16)).order == 16);
  CHECK(automorphism_generators(extraspecial(3, 1, Sign::kMinus)).order == 54);
  CHECK(automorphism_generators(extraspecial(2, 2, Sign::kMinus)).order == 1920);
  CHECK(automorphism_generators(pauli(2)).order == 23040);
  CHECK(automorphism_generators(cyclic(15)).order == 8);
}

TEST_CASE("search agrees with the naive oracle") {
  for (const GroupTable& g : {cyclic(6), elementary_abelian(2, 2), dihedral(8), quaternion(8),
                              dihedral(12), dicyclic(3), elementary_abelian(2, 3), cyclic(1),
                              metacyclic7(7, 3, 1, 2), dihedral(18)}) {
    CAPTURE(g.order());
    const auto ours = automorphisms(g);
    CHECK(ours.complete);
    const auto truth = oracle::automorphisms(g);
    std::set<std::vector<Element>> got(ours.maps.begin(), ours.maps.end());
    CHECK(got == truth);
    CHECK(ours.order == truth.size());
    CHECK(std::is_sorted(ours.maps.begin(), ours.maps.end()));
  }
}

TEST_CASE("elementary abelian closed form matches the search") {
  // |GL(3,2)| = 168, |GL(2,3)| = 48, |GL(4,2)| = 20160.
  for (auto [p, k, want] : {std::tuple{2, 3, 168}, {3, 2, 48}, {2, 4, 20160}, {5, 1, 4}}) {
    const auto g = elementary_abelian(p, k);
    const auto fast = automorphism_generators(g);
    CHECK(fast.order == static_cast<std::uint64_t>(want));
    for (const auto& m : fast.maps) CHECK(is_automorphism(g, m));
    // The full list path runs the search.
    CHECK(automorphisms(g).maps.size() == static_cast<std::size_t>(want));
  }
}

TEST_CASE("generator mode reproduces the full group") {
  for (const auto& g : small_groups()) {
    const auto full = automorphisms(g);
    const auto gens = automorphism_generators(g);
    CHECK(gens.order == full.maps.size());
    CHECK_FALSE(gens.complete);
    // Close the generators and compare.
    std::set<std::vector<Element>> seen{full.maps.front()};
    std::vector<std::vector<Element>> todo{full.maps.front()};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      for (const auto& s : gens.maps) {
        std::vector<Element> next(g.order());
        for (Element x = 0; x < g.order(); ++x) next[x] = s[cur[x]];
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
    CHECK(std::set<std::vector<Element>>(full.maps.begin(), full.maps.end()) == seen);
  }
}

TEST_CASE("homomorphism law") {
  for (const auto& g : small_groups()) {
    for (const auto& m : automorphism_generators(g).maps) CHECK(is_automorphism(g, m));
  }
  const auto c4 = cyclic(4);
  CHECK_FALSE(is_automorphism(c4, {0, 2, 1, 3}));
  CHECK_FALSE(is_automorphism(c4, {0, 1, 1, 3}));
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(cyclic(5)) == std::vector<std::size_t>(5, 1));
  CHECK(class_sizes(dihedral(8)) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(class_sizes(a5()) == std::vector<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(dihedral(8)).size() == 6);
  CHECK(normal_subgroups(quaternion(8)).size() == 6);
  CHECK(normal_subgroups(a5()).size() == 2);
  for (const auto& g : small_groups()) {
    const auto normals = normal_subgroups(g);
    std::vector<ElementSet> filtered;
    for (const auto& s : all_subgroups(g)) {
      if (is_normal(g, s)) filtered.push_back(s);
    }
    CHECK(normals == filtered);
  }
  Bounds tiny;
  tiny.order = 8;
  CHECK_THROWS_AS(normal_subgroups(dihedral(12), tiny), SizeLimitError);
}

TEST_CASE("characteristic subgroups") {
  const auto d8 = dihedral(8);
  const auto cd8 = characteristic_subgroups(d8);
  REQUIRE(cd8.size() == 4);
  CHECK(cd8[1].size() == 2);
  CHECK(cd8[2].size() == 4);
  CHECK(is_cyclic(d8, cd8[2]));
  CHECK(characteristic_subgroups(quaternion(8)).size() == 3);

  // Klein subgroup <r^2, s>.
  const auto klein = generated_subgroup(d8, std::vector<Element>{2, pair_index(0, 1, 4)});
  CHECK(klein.size() == 4);
  CHECK_FALSE(is_characteristic(d8, klein));

  const auto sd = semidihedral(16);
  CHECK(is_characteristic(sd, generated_subgroup(sd, std::vector<Element>{1})));
  int index_two = 0;
  for (const auto& c : characteristic_subgroups(sd)) index_two += c.size() == 8;
  CHECK(index_two == 3);

  for (const auto& g : small_groups()) {
    const auto chars = characteristic_subgroups(g);
    const auto normals = normal_subgroups(g);
    for (const auto& c : chars) CHECK(contains(normals, c));
    CHECK(contains(chars, center(g)));
    CHECK(contains(chars, derived_subgroup(g)));
    CHECK(contains(chars, frattini(g)));
    CHECK(contains(chars, fitting(g)));
    for (const auto& term : lower_central_series(g)) CHECK(contains(chars, term));
    if (g.order() > 1 && prime_power(static_cast<std::int64_t>(g.order()))) {
      for (int i = 1; i <= 2; ++i) {
        CHECK(contains(chars, omega(g, i)));
        CHECK(contains(chars, agemo(g, i)));
      }
    }
  }
}

TEST_CASE("characteristic subgroups agree with the oracle") {
  for (const GroupTable& g : {dihedral(8), quaternion(8), dihedral(12), dicyclic(3),
                              elementary_abelian(2, 3), metacyclic7(7, 3, 1, 2), pauli(1)}) {
    const auto ours = characteristic_subgroups(g);
    const auto truth = oracle::characteristic(g);
    REQUIRE(ours.size() == truth.size());
    for (const auto& c : ours) {
      const auto e = c.elements();
      CHECK(std::find(truth.begin(), truth.end(), oracle::Subset(e.begin(), e.end())) != truth.end());
    }
  }
}

TEST_CASE("isomorphism search") {
  const auto iso = find_isomorphism(dicyclic(2), quaternion(8));
  REQUIRE(iso.has_value());
  const auto a = dicyclic(2);
  const auto b = quaternion(8);
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) CHECK((*iso)[a.mul(x, y)] == b.mul((*iso)[x], (*iso)[y]));
  }
  CHECK_FALSE(find_isomorphism(dihedral(8), quaternion(8)).has_value());
  CHECK_FALSE(find_isomorphism(cyclic(8), cyclic(9)).has_value());
}

TEST_CASE("bounds") {
  Bounds b;
  b.aut_list = 100;
  CHECK_THROWS_AS(automorphisms(elementary_abelian(2, 4), b), SizeLimitError);
  Bounds c;
  c.aut_closure = 1000;
  CHECK_THROWS_AS(automorphism_generators(pauli(2), c), SizeLimitError);
  Bounds o;
  o.order = 60;
  CHECK_THROWS_AS(automorphisms(sl25(), o), SizeLimitError);
}

}  // TEST_SUITE
