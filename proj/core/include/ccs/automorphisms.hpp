#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccs/bounds.hpp"
#include "ccs/group.hpp"

namespace ccs {

/// Automorphisms as permutations of element indices.
struct AutSet {
  std::vector<std::vector<Element>> maps;
  // true: maps is all of Aut(G); false: maps generates Aut(G).
  bool complete = false;
  // |Aut(G)|, known in both modes.
  std::uint64_t order = 0;
};

/// Greedy generating tuple: each step adds the element that enlarges the
/// generated subgroup most, ties broken by lowest index.
std::vector<Element> generating_tuple(const GroupTable& g);

/// Per-element search fingerprint: element order and conjugacy class size.
std::vector<std::uint64_t> fingerprints(const GroupTable& g);

/// The full automorphism group, maps sorted lexicographically.
/// Throws SizeLimitError when |G| > bounds.order or |Aut| > bounds.aut_list.
AutSet automorphisms(const GroupTable& g, const Bounds& bounds = {});

/// A generating set of Aut(G) together with |Aut(G)|. Elementary abelian
/// groups get transvection generators of GL(k, p) and the closed-form
/// order; otherwise each generator found by the search lies outside the
/// group generated by the earlier ones.
/// Throws SizeLimitError when |G| > bounds.order or |Aut| > bounds.aut_closure
/// (the latter only on the search path).
AutSet automorphism_generators(const GroupTable& g, const Bounds& bounds = {});

/// An isomorphism A -> B as an index map, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const GroupTable& a, const GroupTable& b,
                                                     const Bounds& bounds = {});

/// map[mul(x,y)] == mul(map[x], map[y]) for all x, y, and map is a bijection.
bool is_automorphism(const GroupTable& g, const std::vector<Element>& map);

/// Orbits of conjugation; each class sorted, classes ordered by least element.
std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& g);

/// Exactly the normal subgroups, in canonical order. Atoms are the
/// subgroups generated by single conjugacy classes; the rest is their join
/// closure. Throws SizeLimitError when |G| > bounds.order.
std::vector<ElementSet> normal_subgroups(const GroupTable& g, const Bounds& bounds = {});

/// S is fixed setwise by every map in `auts`.
bool is_invariant(const ElementSet& s, const AutSet& auts);

/// All characteristic subgroups (including 1 and G), canonical order.
std::vector<ElementSet> characteristic_subgroups(const GroupTable& g, const Bounds& bounds = {});
/// Same, reusing precomputed normal subgroups and automorphisms.
std::vector<ElementSet> characteristic_subgroups(const std::vector<ElementSet>& normals,
                                                 const AutSet& auts);

/// Every automorphism fixes S setwise.
bool is_characteristic(const GroupTable& g, const ElementSet& s, const Bounds& bounds = {});

}  // namespace ccs
