#include "ccs/classify.hpp"

#include <algorithm>

#include "ccs/automorphisms.hpp"
#include "ccs/constructors.hpp"
#include "ccs/errors.hpp"
#include "ccs/numberth.hpp"
#include "ccs/structure.hpp"

namespace ccs {

namespace {

constexpr Clause kPriority[] = {Clause::kIV, Clause::kV,  Clause::kI,   Clause::kII,
                                Clause::kIII, Clause::kVI, Clause::kVII, Clause::kIIX};

// Fills the verdict fields of `r` from the characteristic subgroups.
void decide(const GroupTable& g, const std::vector<ElementSet>& chars, ClassificationReport& r) {
  r.characteristic_orders.clear();
  for (const auto& c : chars) r.characteristic_orders.push_back(c.size());
  r.is_ccs = false;
  r.witness.reset();
  if (is_cyclic(g)) {
    r.reason = Reason::kCyclic;
    return;
  }
  bool any_proper = false;
  for (const auto& c : chars) {
    if (c.size() == 1 || c.size() == g.order()) continue;
    any_proper = true;
    if (!is_cyclic(g, c)) {
      r.reason = Reason::kNoncyclicCharacteristic;
      r.witness = c;
      return;
    }
  }
  if (!any_proper) {
    r.reason = Reason::kCharacteristicallySimple;
    return;
  }
  r.is_ccs = true;
  r.reason = Reason::kCcs;
}

struct Profile {
  const GroupTable& g;
  std::size_t n;
  std::optional<std::pair<std::int64_t, int>> pp;  // prime-power order
  ElementSet z;
  ElementSet d;
  bool nilpotent;
  bool perfect;
};

bool is_extraspecial(const Profile& s) {
  if (!s.pp) return false;
  auto p = static_cast<std::size_t>(s.pp->first);
  if (s.z.size() != p || s.d != s.z) return false;
  return frattini_p_group(s.g) == s.z;
}

bool squares_and_commutators_in(const GroupTable& g, const ElementSet& z) {
  for (Element x = 0; x < g.order(); ++x) {
    if (!z.contains(g.mul(x, x))) return false;
    for (Element y = 0; y < x; ++y) {
      if (!z.contains(g.commutator(x, y))) return false;
    }
  }
  return true;
}

std::size_t p_part(std::size_t n, std::int64_t p) {
  std::size_t q = 1;
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    q *= static_cast<std::size_t>(p);
  }
  return q;
}

bool has_element_of_order(const GroupTable& g, std::size_t k) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == k) return true;
  }
  return false;
}

// Shared part of (vi) and (vii): cyclic Fitting subgroup of index equal to
// the smallest prime.
bool metacyclic_shape(const Profile& s, const ElementSet& f, std::int64_t p) {
  if (s.nilpotent || s.perfect) return false;
  return is_cyclic(s.g, f) && s.n == f.size() * static_cast<std::size_t>(p);
}

bool matches(Clause c, const Profile& s, const Bounds& bounds) {
  const GroupTable& g = s.g;
  switch (c) {
    case Clause::kI:
      return s.pp && s.pp->first != 2 && is_extraspecial(s) &&
             g.exponent() == static_cast<std::uint64_t>(s.pp->first);
    case Clause::kII:
      return s.pp && s.pp->first == 2 && is_extraspecial(s);
    case Clause::kIII:
      return s.pp && s.pp->first == 2 && s.z.size() == 4 && is_cyclic(g, s.z) &&
             s.d.size() == 2 && frattini_p_group(g) == s.d && squares_and_commutators_in(g, s.z);
    case Clause::kIV:
      return s.n >= 4 && s.n % 2 == 0 && is_isomorphic(g, dihedral(s.n, bounds), bounds);
    case Clause::kV:
      return s.n >= 8 && s.n % 4 == 0 && is_isomorphic(g, dicyclic(s.n / 4, bounds), bounds);
    case Clause::kVI: {
      if (s.nilpotent || s.perfect) return false;
      const std::int64_t p = smallest_prime_divisor(static_cast<std::int64_t>(s.n));
      const auto pu = static_cast<std::size_t>(p);
      if (p_part(s.n, p) != pu * pu || has_element_of_order(g, pu * pu)) return false;
      return metacyclic_shape(s, fitting(g, bounds), p);
    }
    case Clause::kVII: {
      if (s.nilpotent || s.perfect) return false;
      const std::int64_t p = smallest_prime_divisor(static_cast<std::int64_t>(s.n));
      const std::size_t pa = p_part(s.n, p);
      if (!has_element_of_order(g, pa)) return false;
      if (!metacyclic_shape(s, fitting(g, bounds), p)) return false;
      const ElementSet hall = elements_coprime_to(g, p);
      return hall.size() == s.n / pa && is_subgroup(g, hall) && is_cyclic(g, hall);
    }
    case Clause::kIIX:
      return s.perfect && perfect_ccs_check(g, bounds);
    case Clause::kNotApplicable:
      return false;
  }
  return false;
}

}  // namespace

std::string to_string(Clause c) {
  switch (c) {
    case Clause::kI: return "i";
    case Clause::kII: return "ii";
    case Clause::kIII: return "iii";
    case Clause::kIV: return "iv";
    case Clause::kV: return "v";
    case Clause::kVI: return "vi";
    case Clause::kVII: return "vii";
    case Clause::kIIX: return "iix";
    case Clause::kNotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

Clause clause_from_string(const std::string& s) {
  for (Clause c : {Clause::kI, Clause::kII, Clause::kIII, Clause::kIV, Clause::kV, Clause::kVI,
                   Clause::kVII, Clause::kIIX, Clause::kNotApplicable}) {
    if (to_string(c) == s) return c;
  }
  throw DomainError("unknown clause label: " + s);
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kCcs: return "ccs";
    case Reason::kCyclic: return "cyclic";
    case Reason::kCharacteristicallySimple: return "characteristically-simple";
    case Reason::kNoncyclicCharacteristic: return "noncyclic-characteristic";
  }
  return "ccs";
}

bool is_characteristically_simple(const GroupTable& g, const Bounds& bounds) {
  for (const auto& c : characteristic_subgroups(g, bounds)) {
    if (c.size() != 1 && c.size() != g.order()) return false;
  }
  return true;
}

ClassificationReport is_ccs(const GroupTable& g, const Bounds& bounds) {
  ClassificationReport r;
  r.order = g.order();
  if (is_cyclic(g)) {
    r.reason = Reason::kCyclic;
    return r;
  }
  decide(g, characteristic_subgroups(g, bounds), r);
  return r;
}

ClassificationReport classify_ccs(const GroupTable& g, const Bounds& bounds) {
  ClassificationReport r;
  r.order = g.order();
  const auto normals = normal_subgroups(g, bounds);
  const auto auts = automorphism_generators(g, bounds);
  decide(g, characteristic_subgroups(normals, auts), r);
  r.aut_order = auts.order;

  Profile s{g,
            g.order(),
            g.order() > 1 ? prime_power(static_cast<std::int64_t>(g.order())) : std::nullopt,
            center(g),
            derived_subgroup(g),
            is_nilpotent(g),
            is_perfect(g)};
  r.center_order = s.z.size();
  r.derived_order = s.d.size();
  r.nilpotent = s.nilpotent;
  r.perfect = s.perfect;
  try {
    r.frattini_order = (s.pp || g.order() == 1) ? frattini_p_group(g).size() : frattini(g, bounds).size();
  } catch (const SizeLimitError&) {
    r.frattini_order.reset();
  }
  try {
    r.fitting_order = fitting(g, bounds).size();
  } catch (const SizeLimitError&) {
    r.fitting_order.reset();
  }

  if (!r.is_ccs) return r;
  for (Clause c : kPriority) {
    if (matches(c, s, bounds)) r.matching_clauses.push_back(c);
  }
  if (r.matching_clauses.empty()) {
    throw ClassificationError("CCS group of order " + std::to_string(g.order()) +
                              " matches no clause");
  }
  r.clause = r.matching_clauses.front();
  return r;
}

bool perfect_ccs_check(const GroupTable& g, const Bounds& bounds) {
  if (!is_perfect(g)) throw DomainError("perfect_ccs_check: group is not perfect");
  const ElementSet z = center(g);
  if (z.size() == 1 || z.size() == g.order() || !is_cyclic(g, z)) return false;
  for (const auto& c : characteristic_subgroups(g, bounds)) {
    if (c.size() < g.order() && !c.is_subset_of(z)) return false;
  }
  return true;
}

bool is_frobenius_with_kernel(const GroupTable& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw DomainError("is_frobenius_with_kernel: subgroup is not normal");
  for (Element x : n.elements()) {
    if (x == 0) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (!n.contains(y) && g.mul(x, y) == g.mul(y, x)) return false;
    }
  }
  return true;
}

bool fitting_maximality_holds(const GroupTable& g, const Bounds& bounds) {
  if (is_nilpotent(g) || is_perfect(g) || !is_ccs(g, bounds).is_ccs) {
    throw DomainError("fitting_maximality_holds: need a non-nilpotent CCS group with G' < G");
  }
  const ElementSet f = fitting(g, bounds);
  const std::int64_t p = smallest_prime_divisor(static_cast<std::int64_t>(g.order()));
  if (!is_cyclic(g, f) || g.order() != f.size() * static_cast<std::size_t>(p)) return false;
  const auto fe = f.elements();
  const SubgroupBuilder base(g, fe);
  for (Element x = 0; x < g.order(); ++x) {
    if (f.contains(x)) continue;
    SubgroupBuilder b = base;
    b.add(x);
    if (b.size() != g.order()) return false;
  }
  return true;
}

}  // namespace ccs
