#include "ccs/structure.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ccs/automorphisms.hpp"
#include "ccs/errors.hpp"
#include "ccs/numberth.hpp"

namespace ccs {

namespace {

void require_bound(const GroupTable& g, const Bounds& bounds, const char* what) {
  if (g.order() > bounds.order) {
    throw SizeLimitError(std::string(what) + ": group order " + std::to_string(g.order()) +
                         " exceeds bound " + std::to_string(bounds.order));
  }
}

// (p, k) for a p-group; order 1 reports (1, 0).
std::pair<std::int64_t, int> require_p_group(const GroupTable& g, const char* what) {
  if (g.order() == 1) return {1, 0};
  auto pp = prime_power(static_cast<std::int64_t>(g.order()));
  if (!pp) throw DomainError(std::string(what) + ": group order is not a prime power");
  return *pp;
}

}  // namespace

ElementSet center(const GroupTable& g) {
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

ElementSet commutator_subgroup(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  SubgroupBuilder builder(g);
  auto ea = a.elements();
  auto eb = b.elements();
  for (Element x : ea) {
    for (Element y : eb) builder.add(g.commutator(x, y));
  }
  return builder.set();
}

ElementSet derived_subgroup(const GroupTable& g) {
  auto all = ElementSet::whole(g.order());
  return commutator_subgroup(g, all, all);
}

ElementSet centralizer(const GroupTable& g, const ElementSet& s) {
  auto es = s.elements();
  ElementSet c(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element y : es) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) c.insert(x);
  }
  return c;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  auto es = s.elements();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y : es) {
      if (!s.contains(g.conjugate(x, y))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> lower_central_series(const GroupTable& g) {
  auto all = ElementSet::whole(g.order());
  std::vector<ElementSet> series{all};
  while (true) {
    auto next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const GroupTable& g) {
  auto series = lower_central_series(g);
  if (series.back().size() != 1) return std::nullopt;
  return series.size() - 1;
}

ElementSet omega(const GroupTable& g, int i) {
  auto [p, k] = require_p_group(g, "omega");
  if (i < 1) throw DomainError("omega: index must be positive");
  if (p == 1) return ElementSet::trivial(1);
  std::int64_t q = 1;
  for (int j = 0; j < i && q <= static_cast<std::int64_t>(g.order()); ++j) q *= p;
  std::vector<Element> seeds;
  for (Element x = 0; x < g.order(); ++x) {
    if (q % g.element_order(x) == 0) seeds.push_back(x);
  }
  return generated_subgroup(g, seeds);
}

ElementSet agemo(const GroupTable& g, int i) {
  auto [p, k] = require_p_group(g, "agemo");
  if (i < 1) throw DomainError("agemo: index must be positive");
  if (p == 1) return ElementSet::trivial(1);
  std::int64_t q = 1;
  for (int j = 0; j < i && q <= static_cast<std::int64_t>(g.order()); ++j) q *= p;
  std::vector<Element> seeds;
  for (Element x = 0; x < g.order(); ++x) seeds.push_back(g.pow(x, q));
  return generated_subgroup(g, seeds);
}

Quotient quotient(const GroupTable& g, const ElementSet& n) {
  if (n.parent_order() != g.order() || !is_normal(g, n)) {
    throw DomainError("quotient: subgroup is not normal");
  }
  const auto members = n.elements();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset(g.order(), kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnset) continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element h : members) coset[g.mul(x, h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) mul[a * m + b] = coset[g.mul(reps[a], reps[b])];
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (auto r : reps) names.push_back(r == 0 ? "e" : g.names()[r] + "N");
  return {GroupTable(m, std::move(mul), std::move(names)), std::move(coset)};
}

std::vector<ElementSet> all_subgroups(const GroupTable& g, const Bounds& bounds) {
  require_bound(g, bounds, "all_subgroups");
  struct Entry {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Entry> subs;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Element> cyclic_gens;
  for (Element x = 0; x < g.order(); ++x) {
    SubgroupBuilder b(g);
    b.add(x);
    if (seen.insert(b.set()).second) {
      subs.push_back({b.set(), b.generators()});
      if (x != 0) cyclic_gens.push_back(x);
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (subs[i].set.contains(c)) continue;
      SubgroupBuilder b(g, subs[i].gens);
      b.add(c);
      if (seen.insert(b.set()).second) subs.push_back({b.set(), b.generators()});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(subs.size());
  for (auto& e : subs) out.push_back(std::move(e.set));
  sort_canonical(out);
  return out;
}

std::vector<ElementSet> maximal_subgroups(const GroupTable& g,
                                          const std::vector<ElementSet>& subgroups) {
  std::vector<const ElementSet*> proper;
  for (const auto& s : subgroups) {
    if (s.size() < g.order()) proper.push_back(&s);
  }
  std::vector<ElementSet> out;
  for (const auto* h : proper) {
    bool maximal = true;
    for (const auto* k : proper) {
      if (k->size() > h->size() && h->is_subset_of(*k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(*h);
  }
  return out;
}

ElementSet frattini(const GroupTable& g, const Bounds& bounds) {
  auto maxes = maximal_subgroups(g, all_subgroups(g, bounds));
  ElementSet phi = ElementSet::whole(g.order());
  for (const auto& m : maxes) phi = phi.intersection(m);
  return phi;
}

ElementSet frattini_p_group(const GroupTable& g) {
  require_p_group(g, "frattini_p_group");
  SubgroupBuilder b(g);
  for (Element x : derived_subgroup(g).elements()) b.add(x);
  if (g.order() > 1) {
    for (Element x : agemo(g, 1).elements()) b.add(x);
  }
  return b.set();
}

ElementSet fitting(const GroupTable& g, const Bounds& bounds) {
  SubgroupBuilder b(g);
  for (const auto& n : normal_subgroups(g, bounds)) {
    if (!is_nilpotent(g, n)) continue;
    for (Element x : n.elements()) b.add(x);
  }
  return b.set();
}

bool is_cyclic(const GroupTable& g) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

bool is_cyclic(const GroupTable& g, const ElementSet& s) {
  const auto n = s.size();
  for (Element x : s.elements()) {
    if (g.element_order(x) == n) return true;
  }
  return false;
}

bool is_abelian(const GroupTable& g) { return is_abelian(g, ElementSet::whole(g.order())); }

bool is_abelian(const GroupTable& g, const ElementSet& s) {
  auto es = s.elements();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (g.mul(es[i], es[j]) != g.mul(es[j], es[i])) return false;
    }
  }
  return true;
}

bool is_nilpotent(const GroupTable& g) { return nilpotency_class(g).has_value(); }

bool is_nilpotent(const GroupTable& g, const ElementSet& s) {
  ElementSet term = s;
  while (term.size() > 1) {
    auto next = commutator_subgroup(g, term, s);
    if (next == term) return false;
    term = std::move(next);
  }
  return true;
}

bool is_perfect(const GroupTable& g) { return derived_subgroup(g).size() == g.order(); }

bool is_supersolvable(const GroupTable& g, const Bounds& bounds) {
  if (g.order() == 1) return true;
  auto normals = normal_subgroups(g, bounds);
  const std::size_t count = normals.size();
  std::vector<bool> dead(count, false);
  // normals is in canonical order: index 0 is the trivial subgroup and the
  // last entry is G.
  std::function<bool(std::size_t)> climb = [&](std::size_t i) -> bool {
    if (normals[i].size() == g.order()) return true;
    if (dead[i]) return false;
    for (std::size_t j = i + 1; j < count; ++j) {
      auto sj = normals[j].size();
      auto si = normals[i].size();
      if (sj % si != 0 || !is_prime(static_cast<std::int64_t>(sj / si))) continue;
      if (!normals[i].is_subset_of(normals[j])) continue;
      if (climb(j)) return true;
    }
    dead[i] = true;
    return false;
  };
  return climb(0);
}

bool is_regular_p_group(const GroupTable& g) {
  auto [p, k] = require_p_group(g, "is_regular_p_group");
  if (p == 1) return true;
  // p-th powers of the derived subgroup of <g,h>, cached per subgroup.
  std::unordered_map<ElementSet, ElementSet, ElementSetHash> cache;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      if (g.mul(x, y) == g.mul(y, x)) continue;  // k = 1 works
      Element target = g.mul(g.inv(g.pow(g.mul(x, y), p)), g.mul(g.pow(x, p), g.pow(y, p)));
      const Element seeds[] = {x, y};
      auto h = generated_subgroup(g, seeds);
      auto it = cache.find(h);
      if (it == cache.end()) {
        auto d = commutator_subgroup(g, h, h);
        std::vector<Element> powers;
        for (Element z : d.elements()) powers.push_back(g.pow(z, p));
        it = cache.emplace(std::move(h), generated_subgroup(g, powers)).first;
      }
      if (!it->second.contains(target)) return false;
    }
  }
  return true;
}

ElementSet elements_coprime_to(const GroupTable& g, std::int64_t p) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (gcd(g.element_order(x), p) == 1) s.insert(x);
  }
  return s;
}

bool is_isomorphic(const GroupTable& a, const GroupTable& b, const Bounds& bounds) {
  return find_isomorphism(a, b, bounds).has_value();
}

}  // namespace ccs
