#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccs/bounds.hpp"
#include "ccs/group.hpp"

namespace ccs {

ElementSet center(const GroupTable& g);
/// Subgroup generated by all commutators x^-1 y^-1 x y.
ElementSet derived_subgroup(const GroupTable& g);
/// [A, B]: subgroup generated by commutators a^-1 b^-1 a b.
ElementSet commutator_subgroup(const GroupTable& g, const ElementSet& a, const ElementSet& b);
ElementSet centralizer(const GroupTable& g, const ElementSet& s);

bool is_normal(const GroupTable& g, const ElementSet& s);

/// G = G_1 >= G_2 = [G_1, G] >= ... until it stabilizes.
std::vector<ElementSet> lower_central_series(const GroupTable& g);
/// Nilpotency class, or nullopt when G is not nilpotent.
std::optional<std::size_t> nilpotency_class(const GroupTable& g);

/// <g : g^{p^i} = 1>. Throws DomainError unless |G| is a prime power.
ElementSet omega(const GroupTable& g, int i);
/// <g^{p^i} : g in G>. Throws DomainError unless |G| is a prime power.
ElementSet agemo(const GroupTable& g, int i);

struct Quotient {
  GroupTable table;
  std::vector<Element> coset_of;  // element of G -> element of G/N
};

/// G/N with cosets numbered by their least element (so N itself is 0).
/// Throws DomainError when N is not a normal subgroup.
Quotient quotient(const GroupTable& g, const ElementSet& n);

/// Every subgroup exactly once, in canonical order. Built by joining
/// subgroups with cyclic subgroups until no new subgroup appears.
/// Throws SizeLimitError when |G| > bounds.order.
std::vector<ElementSet> all_subgroups(const GroupTable& g, const Bounds& bounds = {});

/// Proper subgroups not contained in any other proper subgroup.
std::vector<ElementSet> maximal_subgroups(const GroupTable& g,
                                          const std::vector<ElementSet>& subgroups);

/// Intersection of all maximal subgroups (G itself for the trivial group).
ElementSet frattini(const GroupTable& g, const Bounds& bounds = {});
/// G' G^p for a p-group; equals the Frattini subgroup by Burnside's basis
/// theorem and needs no subgroup enumeration.
ElementSet frattini_p_group(const GroupTable& g);
/// Largest nilpotent normal subgroup.
ElementSet fitting(const GroupTable& g, const Bounds& bounds = {});

bool is_cyclic(const GroupTable& g);
bool is_cyclic(const GroupTable& g, const ElementSet& s);
bool is_abelian(const GroupTable& g);
bool is_abelian(const GroupTable& g, const ElementSet& s);
bool is_nilpotent(const GroupTable& g);
/// Nilpotency of the subgroup S (lower central series inside S).
bool is_nilpotent(const GroupTable& g, const ElementSet& s);
bool is_perfect(const GroupTable& g);
/// A chain 1 = G_0 < ... < G_k = G of normal subgroups of G with every
/// factor of prime order exists.
bool is_supersolvable(const GroupTable& g, const Bounds& bounds = {});

/// For all g, h there is k in <g,h>' with g^p h^p = (gh)^p k^p.
/// Throws DomainError unless |G| is a prime power.
bool is_regular_p_group(const GroupTable& g);

/// Elements whose order is coprime to p.
ElementSet elements_coprime_to(const GroupTable& g, std::int64_t p);

/// A table isomorphism A -> B exists.
bool is_isomorphic(const GroupTable& a, const GroupTable& b, const Bounds& bounds = {});

}  // namespace ccs
