#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ccs/automorphisms.hpp"
#include "ccs/classify.hpp"
#include "ccs/constructors.hpp"
#include "ccs/corpus.hpp"
#include "ccs/errors.hpp"
#include "ccs/group_io.hpp"
#include "ccs/numberth.hpp"
#include "ccs/spec.hpp"
#include "ccs/structure.hpp"
#include "commands.hpp"

namespace ccs::tools {

namespace {

struct Named {
  std::string spec;
  GroupTable g;
  const CorpusEntry* entry;
};

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void add(const std::string& check, bool passed, json detail = json::object()) {
    checks_.push_back({{"suite", name_}, {"name", check}, {"passed", passed}, {"detail", detail}});
  }

  // Runs `body` and records a failure instead of propagating errors.
  void run(const std::string& check, const std::function<json(bool&)>& body) {
    bool passed = true;
    json detail;
    try {
      detail = body(passed);
    } catch (const std::exception& e) {
      passed = false;
      detail = {{"exception", e.what()}};
    }
    add(check, passed, detail);
  }

  json& checks() { return checks_; }

 private:
  std::string name_;
  json checks_ = json::array();
};

class Corpus {
 public:
  explicit Corpus(const Bounds& bounds) : entries_(ccs_corpus()) {
    for (const auto& e : entries_) {
      GroupTable g = build(e.spec, bounds);
      if (g.order() <= bounds.order) groups_.push_back({e.spec, std::move(g), &e});
    }
  }
  const std::vector<Named>& groups() const { return groups_; }

 private:
  std::vector<CorpusEntry> entries_;
  std::vector<Named> groups_;
};

std::optional<std::pair<std::int64_t, int>> p_group(const GroupTable& g) {
  if (g.order() == 1) return std::nullopt;
  return prime_power(static_cast<std::int64_t>(g.order()));
}

// Element-by-element backtracking over order-preserving bijections; every
// product triple is checked once its largest index is assigned.
std::set<std::vector<Element>> naive_automorphisms(const GroupTable& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Element>> out;
  std::vector<Element> map(n, 0);
  std::vector<bool> used(n, false);
  used[0] = true;
  std::function<void(Element)> go = [&](Element x) {
    if (x == n) {
      out.insert(map);
      return;
    }
    for (Element y = 1; y < n; ++y) {
      if (used[y] || g.element_order(y) != g.element_order(x)) continue;
      map[x] = y;
      bool ok = true;
      for (Element a = 0; a <= x && ok; ++a) {
        for (Element b = 0; b <= x && ok; ++b) {
          Element c = g.mul(a, b);
          if (c > x || std::max({a, b, c}) != x) continue;
          ok = map[c] == g.mul(map[a], map[b]);
        }
      }
      if (!ok) continue;
      used[y] = true;
      go(x + 1);
      used[y] = false;
    }
  };
  if (n == 1) {
    out.insert(map);
  } else {
    go(1);
  }
  return out;
}

std::vector<ElementSet> invariant_under_conjugation(const GroupTable& g,
                                                    const std::vector<ElementSet>& subs) {
  std::vector<ElementSet> out;
  for (const auto& s : subs) {
    if (is_normal(g, s)) out.push_back(s);
  }
  return out;
}

bool contains_set(const std::vector<ElementSet>& list, const ElementSet& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

ElementSet preimage(const Quotient& q, const ElementSet& h) {
  ElementSet out(q.coset_of.size());
  for (Element x = 0; x < q.coset_of.size(); ++x) {
    if (h.contains(q.coset_of[x])) out.insert(x);
  }
  return out;
}

json core_suite(const Bounds& b, Suite& s, const Corpus& corpus) {
  s.run("group-axioms", [&](bool& ok) {
    std::size_t checked = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      const auto n = g.order();
      for (Element x = 0; x < n; ++x) {
        ok = ok && g.mul(0, x) == x && g.mul(x, 0) == x && g.mul(x, g.inv(x)) == 0;
        ok = ok && g.pow(x, g.element_order(x)) == 0;
        for (std::uint32_t k = 1; k < g.element_order(x); ++k) ok = ok && g.pow(x, k) != 0;
      }
      if (n <= 64) {
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
              ok = ok && g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
      }
      ++checked;
    }
    return json{{"groups", checked}};
  });

  s.run("lagrange", [&](bool& ok) {
    std::size_t subgroups = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 64) continue;
      for (const auto& h : all_subgroups(g, b)) {
        ok = ok && g.order() % h.size() == 0 && is_subgroup(g, h);
        ++subgroups;
      }
    }
    return json{{"subgroups", subgroups}};
  });

  s.run("regular-index-identity", [&](bool& ok) {
    json seen = json::array();
    for (const auto& [spec, g, e] : corpus.groups()) {
      auto pp = p_group(g);
      if (!pp || pp->first == 2) continue;
      auto cls = nilpotency_class(g);
      if (!cls || static_cast<std::int64_t>(*cls) >= pp->first) continue;
      const bool holds = g.order() / agemo(g, 1).size() == omega(g, 1).size();
      const bool regular = is_regular_p_group(g);
      ok = ok && holds && regular;
      seen.push_back({{"spec", spec}, {"identity", holds}, {"regular", regular}});
    }
    ok = ok && !seen.empty();
    return json{{"groups", seen}};
  });

  s.run("cyclic-derived-supersolvable", [&](bool& ok) {
    std::size_t count = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (!is_cyclic(g, derived_subgroup(g))) continue;
      ok = ok && is_supersolvable(g, b);
      ++count;
    }
    return json{{"groups", count}};
  });

  s.run("coprime-elements-hall", [&](bool& ok) {
    std::size_t count = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() == 1 || !is_supersolvable(g, b)) continue;
      const std::int64_t p = smallest_prime_divisor(static_cast<std::int64_t>(g.order()));
      const ElementSet h = elements_coprime_to(g, p);
      std::size_t pp = 1;
      for (std::size_t n = g.order(); n % static_cast<std::size_t>(p) == 0; n /= static_cast<std::size_t>(p))
        pp *= static_cast<std::size_t>(p);
      ok = ok && is_normal(g, h) && g.order() / h.size() == pp;
      ++count;
    }
    return json{{"groups", count}};
  });

  s.run("quotient-homomorphism", [&](bool& ok) {
    std::size_t quotients = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 32) continue;
      for (const auto& n : normal_subgroups(g, b)) {
        const Quotient q = quotient(g, n);
        ok = ok && q.table.order() * n.size() == g.order();
        for (Element x = 0; x < g.order(); ++x)
          for (Element y = 0; y < g.order(); ++y)
            ok = ok && q.coset_of[g.mul(x, y)] == q.table.mul(q.coset_of[x], q.coset_of[y]);
        ++quotients;
      }
    }
    return json{{"quotients", quotients}};
  });

  s.run("table-json-round-trip", [&](bool& ok) {
    for (const auto& [spec, g, e] : corpus.groups()) {
      ok = ok && read_group_json(write_group_json(g)).table() == g.table();
    }
    return json{{"groups", corpus.groups().size()}};
  });

  s.run("reference-values", [&](bool& ok) {
    const auto d8 = dihedral(8), q8 = quaternion(8), d12 = dihedral(12), c6 = cyclic(6);
    const auto a = a5(), sl = sl25();
    const std::map<std::string, bool> facts{
        {"a5 order 60", a.order() == 60},
        {"C6 has 4 subgroups", all_subgroups(c6, b).size() == 4},
        {"D8 has 10 subgroups", all_subgroups(d8, b).size() == 10},
        {"Q8 has 6 subgroups", all_subgroups(q8, b).size() == 6},
        {"|Z(D8)| = |D8'| = 2", center(d8).size() == 2 && derived_subgroup(d8).size() == 2},
        {"|Z(SL(2,5))| = 2", center(sl).size() == 2},
        {"|Omega_1(Q8)| = 2", omega(q8, 1).size() == 2},
        {"|agemo_1(D8)| = 2", agemo(d8, 1).size() == 2},
        {"|Phi(D8)| = 2", frattini(d8, b).size() == 2},
        {"|F(D12)| = 6", fitting(d12, b).size() == 6},
        {"D12 supersolvable, not nilpotent", is_supersolvable(d12, b) && !is_nilpotent(d12)},
        {"A5 perfect", is_perfect(a)},
        {"C2 x C2 not cyclic", !is_cyclic(elementary_abelian(2, 2))},
        {"D8 not isomorphic to Q8", !is_isomorphic(d8, q8, b)},
        {"Dic(2^k) isomorphic to Q(2^(k+2))",
         is_isomorphic(dicyclic(4), quaternion(16), b) && is_isomorphic(dicyclic(8), quaternion(32), b)},
        {"3^{1+2}_+ regular", is_regular_p_group(extraspecial(3, 1, Sign::kPlus))},
        {"D8 / Z(D8) has exponent 2", quotient(d8, center(d8)).table.exponent() == 2},
    };
    json failed = json::array();
    for (const auto& [name, holds] : facts) {
      if (!holds) failed.push_back(name);
    }
    ok = failed.empty();
    return json{{"facts", facts.size()}, {"failed", failed}};
  });
  return s.checks();
}

json aut_suite(const Bounds& b, Suite& s, const Corpus& corpus) {
  s.run("homomorphism-law", [&](bool& ok) {
    std::size_t maps = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 64) continue;
      const AutSet full = automorphisms(g, b);
      ok = ok && std::adjacent_find(full.maps.begin(), full.maps.end()) == full.maps.end();
      for (const auto& m : full.maps) ok = ok && is_automorphism(g, m);
      maps += full.maps.size();
    }
    return json{{"maps", maps}};
  });

  s.run("naive-automorphism-oracle", [&](bool& ok) {
    json rows = json::array();
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 24) continue;
      const AutSet fast = automorphisms(g, b);
      const auto slow = naive_automorphisms(g);
      const bool same = std::set<std::vector<Element>>(fast.maps.begin(), fast.maps.end()) == slow;
      ok = ok && same;
      rows.push_back({{"spec", spec}, {"aut_order", fast.order}, {"agree", same}});
    }
    return json{{"groups", rows}};
  });

  s.run("normal-subgroups-vs-lattice", [&](bool& ok) {
    std::size_t groups = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 64) continue;
      ok = ok && normal_subgroups(g, b) == invariant_under_conjugation(g, all_subgroups(g, b));
      ++groups;
    }
    return json{{"groups", groups}};
  });

  s.run("characteristic-structure", [&](bool& ok) {
    std::size_t groups = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 64) continue;
      const auto normals = normal_subgroups(g, b);
      const auto chars = characteristic_subgroups(g, b);
      for (const auto& c : chars) ok = ok && contains_set(normals, c);
      std::vector<ElementSet> canonical{center(g), derived_subgroup(g), frattini(g, b), fitting(g, b)};
      for (const auto& t : lower_central_series(g)) canonical.push_back(t);
      if (auto pp = p_group(g)) {
        for (int i = 1; i <= pp->second; ++i) {
          canonical.push_back(omega(g, i));
          canonical.push_back(agemo(g, i));
        }
      }
      for (const auto& c : canonical) ok = ok && contains_set(chars, c);
      ++groups;
    }
    return json{{"groups", groups}};
  });

  s.run("generators-vs-full-list", [&](bool& ok) {
    std::size_t groups = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 32) continue;
      const auto normals = normal_subgroups(g, b);
      const AutSet full = automorphisms(g, b);
      const AutSet gens = automorphism_generators(g, b);
      ok = ok && full.order == gens.order;
      ok = ok && characteristic_subgroups(normals, full) == characteristic_subgroups(normals, gens);
      ++groups;
    }
    return json{{"groups", groups}};
  });

  s.run("characteristic-lift", [&](bool& ok) {
    std::size_t pairs = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 64) continue;
      const auto chars = characteristic_subgroups(g, b);
      for (const auto& n : chars) {
        const Quotient q = quotient(g, n);
        for (const auto& h : characteristic_subgroups(q.table, b)) {
          ok = ok && contains_set(chars, preimage(q, h));
          ++pairs;
        }
      }
    }
    return json{{"pairs", pairs}};
  });

  s.run("perfect-cyclic-normal-central", [&](bool& ok) {
    std::size_t checked = 0;
    for (const GroupTable& g : {a5(), sl25()}) {
      if (g.order() > b.order) continue;
      const ElementSet z = center(g);
      for (const auto& n : normal_subgroups(g, b)) {
        if (is_cyclic(g, n)) {
          ok = ok && n.is_subset_of(z);
          ++checked;
        }
      }
    }
    return json{{"cyclic_normals", checked}};
  });

  s.run("extraspecial-unique-characteristic", [&](bool& ok) {
    json rows = json::array();
    for (const char* spec : {"extraspecial:2:2:+", "extraspecial:2:2:-", "extraspecial:3:1:+",
                             "extraspecial:5:1:+"}) {
      const GroupTable g = build(spec);
      if (g.order() > b.order) continue;
      const auto chars = characteristic_subgroups(g, b);
      const bool holds = chars.size() == 3 && chars[1] == center(g);
      ok = ok && holds;
      rows.push_back({{"spec", spec}, {"holds", holds}});
    }
    return json{{"groups", rows}};
  });

  s.run("reference-values", [&](bool& ok) {
    const auto d8 = dihedral(8), q8 = quaternion(8), a = a5();
    auto class_sizes = [](const GroupTable& g) {
      std::vector<std::size_t> sizes;
      for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    };
    ElementSet klein(8);
    for (Element x : {0U, 2U, 4U, 6U}) klein.insert(x);  // <x^2, y> in pair layout
    const auto sd = semidihedral(16);
    ElementSet rotations(16);
    for (Element x = 0; x < 8; ++x) rotations.insert(x);
    const std::map<std::string, bool> facts{
        {"|Aut(Q8)| = 24", automorphisms(q8, b).maps.size() == 24},
        {"|Aut(C2 x C2)| = 6", automorphisms(elementary_abelian(2, 2), b).maps.size() == 6},
        {"|Aut(C1)| = 1", automorphisms(cyclic(1), b).maps.size() == 1},
        {"D8 class sizes 1,1,2,2,2", class_sizes(d8) == std::vector<std::size_t>{1, 1, 2, 2, 2}},
        {"A5 class sizes 1,12,12,15,20",
         class_sizes(a) == std::vector<std::size_t>{1, 12, 12, 15, 20}},
        {"D8 has 6 normal subgroups", normal_subgroups(d8, b).size() == 6},
        {"Q8 has 6 normal subgroups", normal_subgroups(q8, b).size() == 6},
        {"A5 has 2 normal subgroups", normal_subgroups(a, b).size() == 2},
        {"D8 has 4 characteristic subgroups", characteristic_subgroups(d8, b).size() == 4},
        {"Q8 has 3 characteristic subgroups", characteristic_subgroups(q8, b).size() == 3},
        {"Klein subgroup of D8 not characteristic",
         is_subgroup(d8, klein) && !is_characteristic(d8, klein, b)},
        {"<r> characteristic in SD16", is_characteristic(sd, rotations, b)},
    };
    json failed = json::array();
    for (const auto& [name, holds] : facts) {
      if (!holds) failed.push_back(name);
    }
    ok = failed.empty();
    return json{{"facts", facts.size()}, {"failed", failed}};
  });
  return s.checks();
}

bool is_family_p_group(const GroupTable& g, const Bounds& b) {
  const auto pp = p_group(g);
  if (!pp) return false;
  const auto [p, k] = *pp;
  const std::size_t n = g.order();
  if (p != 2) {
    return k % 2 == 1 && is_isomorphic(g, extraspecial(p, (k - 1) / 2, Sign::kPlus, b), b);
  }
  if (n >= 4 && is_isomorphic(g, dihedral(n, b), b)) return true;
  if (n >= 8 && is_isomorphic(g, quaternion(n, b), b)) return true;
  if (k % 2 == 1 && k >= 3) {
    for (Sign sg : {Sign::kPlus, Sign::kMinus}) {
      if (is_isomorphic(g, extraspecial(2, (k - 1) / 2, sg, b), b)) return true;
    }
  }
  return k % 2 == 0 && k >= 4 && is_isomorphic(g, pauli((k - 2) / 2, b), b);
}

json ccs_suite(const Bounds& b, Suite& s, const Corpus& corpus) {
  s.run("semidihedral-not-ccs", [&](bool& ok) {
    json rows = json::array();
    for (std::size_t n : {16U, 32U, 64U}) {
      if (n > b.order) continue;
      const GroupTable g = semidihedral(n, b);
      const auto r = is_ccs(g, b);
      const std::size_t half = n / 2;
      // r^i s^j sits at i + half * j.
      ElementSet h1(n), h2(n), h3(n);
      for (Element i = 0; i < half; ++i) {
        h1.insert(i);
        if (i % 2 == 0) {
          h2.insert(i);
          h2.insert(static_cast<Element>(i + half));
          h3.insert(i);
        } else {
          h3.insert(static_cast<Element>(i + half));
        }
      }
      const auto chars = characteristic_subgroups(g, b);
      const bool types = is_cyclic(g, h1) &&
                         is_isomorphic(subgroup_table(g, h2), dihedral(half), b) &&
                         is_isomorphic(subgroup_table(g, h3), quaternion(half), b);
      const bool holds = !r.is_ccs && r.witness && !is_cyclic(g, *r.witness) &&
                         contains_set(chars, h1) && contains_set(chars, h2) &&
                         contains_set(chars, h3) && types;
      ok = ok && holds;
      rows.push_back({{"order", n}, {"holds", holds}});
    }
    return json{{"groups", rows}};
  });

  s.run("corpus-verdicts", [&](bool& ok) {
    json mismatches = json::array();
    for (const auto& [spec, g, e] : corpus.groups()) {
      const auto r = classify_ccs(g, b);
      if (r.is_ccs != e->expect_ccs || r.clause != e->expected) {
        mismatches.push_back({{"spec", spec},
                              {"is_ccs", r.is_ccs},
                              {"clause", to_string(r.clause)},
                              {"expected", to_string(e->expected)},
                              {"witness_order", r.witness ? json(r.witness->size()) : json(nullptr)}});
      }
    }
    ok = mismatches.empty();
    return json{{"groups", corpus.groups().size()}, {"mismatches", mismatches}};
  });

  s.run("fitting-maximality", [&](bool& ok) {
    std::size_t count = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (is_nilpotent(g) || is_perfect(g) || !is_ccs(g, b).is_ccs) continue;
      ok = ok && fitting_maximality_holds(g, b);
      ++count;
    }
    return json{{"groups", count}};
  });

  // Checked twice: literally, and with cyclic quotients admitted. Cyclic
  // quotients such as Dic3 / C3 = C4 violate the literal form.
  json literal = json::array();
  std::size_t quotients = 0;
  bool amended_ok = true;
  s.run("quotient-char-simple-or-ccs", [&](bool& ok) {
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 128 || !is_ccs(g, b).is_ccs) continue;
      for (const auto& n : characteristic_subgroups(g, b)) {
        if (n.size() == 1 || n.size() == g.order()) continue;
        const GroupTable q = quotient(g, n).table;
        const bool passes = is_characteristically_simple(q, b) || is_ccs(q, b).is_ccs;
        if (!passes) {
          literal.push_back({{"spec", spec}, {"kernel_order", n.size()}, {"quotient_cyclic", is_cyclic(q)}});
          amended_ok = amended_ok && is_cyclic(q);
        }
        ++quotients;
      }
    }
    ok = literal.empty();
    return json{{"quotients", quotients}, {"counterexamples", literal}};
  });
  s.add("quotient-char-simple-ccs-or-cyclic", amended_ok, json{{"quotients", quotients}});

  s.run("perfect-case", [&](bool& ok) {
    const GroupTable g = sl25();
    const auto r = classify_ccs(g, b);
    const auto chars = characteristic_subgroups(g, b);
    const ElementSet z = center(g);
    ok = is_perfect(g) && r.is_ccs && r.clause == Clause::kIIX && chars.size() == 3 &&
         chars[1] == z && z.size() == 2 && perfect_ccs_check(g, b) &&
         is_isomorphic(quotient(g, z).table, a5(), b);
    return json{{"aut_order", r.aut_order}, {"characteristic_orders", r.characteristic_orders}};
  });

  s.run("two-path-soundness", [&](bool& ok) {
    std::size_t groups = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (g.order() > 64) continue;
      const AutSet gens = automorphism_generators(g, b);
      bool second = !is_cyclic(g);
      bool nontrivial = false;
      for (const auto& h : all_subgroups(g, b)) {
        if (h.size() == 1 || h.size() == g.order() || !is_invariant(h, gens)) continue;
        nontrivial = true;
        second = second && is_cyclic(g, h);
      }
      ok = ok && is_ccs(g, b).is_ccs == (second && nontrivial);
      ++groups;
    }
    return json{{"groups", groups}};
  });

  s.run("nilpotent-ccs-are-nonabelian-p-groups", [&](bool& ok) {
    std::size_t count = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (!is_nilpotent(g) || !is_ccs(g, b).is_ccs) continue;
      ok = ok && p_group(g).has_value() && !is_abelian(g);
      ++count;
    }
    return json{{"groups", count}};
  });

  s.run("ccs-p-group-families", [&](bool& ok) {
    json misses = json::array();
    std::size_t count = 0;
    for (const auto& [spec, g, e] : corpus.groups()) {
      if (!p_group(g) || !is_ccs(g, b).is_ccs) continue;
      ++count;
      if (!is_family_p_group(g, b)) misses.push_back(spec);
    }
    ok = misses.empty();
    return json{{"groups", count}, {"misses", misses}};
  });

  s.run("pauli-characteristic-central", [&](bool& ok) {
    json rows = json::array();
    for (int n : {1, 2}) {
      const GroupTable g = pauli(n, b);
      const ElementSet z = center(g);
      bool holds = true;
      for (const auto& c : characteristic_subgroups(g, b)) {
        if (c.size() < g.order()) holds = holds && c.is_subset_of(z);
      }
      ok = ok && holds;
      rows.push_back({{"n", n}, {"holds", holds}});
    }
    return json{{"groups", rows}};
  });

  s.run("reference-values", [&](bool& ok) {
    const auto d8 = dihedral(8), c7x3 = metacyclic7(7, 3, 1, 2);
    ElementSet sylow7(21), rot(8);
    for (Element i = 0; i < 7; ++i) sylow7.insert(i);
    for (Element i = 0; i < 4; ++i) rot.insert(i);
    const std::map<std::string, bool> facts{
        {"C2 x C2 characteristically simple", is_characteristically_simple(elementary_abelian(2, 2), b)},
        {"A5 characteristically simple", is_characteristically_simple(a5(), b)},
        {"D8 not characteristically simple", !is_characteristically_simple(d8, b)},
        {"D8 is CCS", is_ccs(d8, b).is_ccs},
        {"C12 not CCS (cyclic)", is_ccs(cyclic(12), b).reason == Reason::kCyclic},
        {"3^{1+2}_+ in clause i", classify_ccs(extraspecial(3, 1, Sign::kPlus), b).clause == Clause::kI},
        {"metacyclic6(7,3,4) in clause vi", classify_ccs(metacyclic6(7, 3, 4), b).clause == Clause::kVI},
        {"metacyclic7(7,3,2,2) in clause vii",
         classify_ccs(metacyclic7(7, 3, 2, 2), b).clause == Clause::kVII},
        {"A5 fails the perfect check", !perfect_ccs_check(a5(), b)},
        {"C7:C3 Frobenius with kernel C7", is_frobenius_with_kernel(c7x3, sylow7)},
        {"D8 not Frobenius with kernel <r>", !is_frobenius_with_kernel(d8, rot)},
        {"Fitting maximality for D12, Dic3, metacyclic6(7,3,4)",
         fitting_maximality_holds(dihedral(12), b) && fitting_maximality_holds(dicyclic(3), b) &&
             fitting_maximality_holds(metacyclic6(7, 3, 4), b)},
    };
    json failed = json::array();
    for (const auto& [name, holds] : facts) {
      if (!holds) failed.push_back(name);
    }
    ok = failed.empty();
    return json{{"facts", facts.size()}, {"failed", failed}};
  });
  return s.checks();
}

json numberth_suite(const Bounds& b, Suite& s) {
  s.run("coprime-power-equivalence", [&](bool& ok) {
    std::size_t tuples = 0;
    json exceptions = json::array();
    for (std::int64_t m = 1; m <= 200; ++m) {
      for (std::int64_t p : primes_up_to(13)) {
        if (!below_all_primes_of(p, m)) continue;
        for (std::int64_t k = 2; k <= m * p; ++k) {
          if (!coprime_power_admissible(m, p, k)) continue;
          const auto sides = coprime_power_equivalence(m, p, k);
          if (sides.lhs != sides.rhs) exceptions.push_back({m, p, k});
          ++tuples;
        }
      }
    }
    ok = exceptions.empty() && tuples > 0;
    return json{{"tuples", tuples}, {"exceptions", exceptions}};
  });

  s.run("valid-k-is-one-mod-p", [&](bool& ok) {
    std::size_t count = 0;
    for (const auto& t : vi_parameters(1500, primes_up_to(37), false)) {
      ok = ok && mod(t[2], t[1]) == 1;
      ++count;
    }
    return json{{"tuples", count}};
  });

  s.run("iff-scan", [&](bool& ok) {
    const auto cap = static_cast<std::int64_t>(std::min<std::size_t>(1500, b.order));
    json disagreements = json::array();
    std::size_t groups = 0;
    for (const auto& t : vi_parameters(cap, {2, 3, 5}, false)) {
      const bool brute = is_ccs(metacyclic6(t[0], t[1], t[2], b), b).is_ccs;
      if (brute != validate_vi(t[0], t[1], t[2]).ccs_condition) disagreements.push_back(t);
      ++groups;
    }
    for (const auto& t : vii_parameters(cap, {2, 3, 5}, 2, false)) {
      const bool brute = is_ccs(metacyclic7(t[0], t[1], t[2], t[3], b), b).is_ccs;
      if (brute != validate_vii(t[0], t[1], t[2], t[3]).ccs_condition) disagreements.push_back(t);
      ++groups;
    }
    ok = disagreements.empty();
    return json{{"order_max", cap}, {"groups", groups}, {"disagreements", disagreements}};
  });

  s.run("reference-values", [&](bool& ok) {
    auto side = [](std::int64_t m, std::int64_t p, std::int64_t k) {
      auto r = coprime_power_equivalence(m, p, k);
      return r.lhs && r.rhs;
    };
    const std::map<std::string, bool> facts{
        {"gcd(0, 12) = 12", gcd(0, 12) == 12},
        {"4^3 = 1 mod 21", powmod(4, 3, 21) == 1},
        {"b^0 = 1 mod 1 is 0", powmod(5, 0, 1) == 0},
        {"equivalence (7,3,2), (7,3,4), (31,5,2)", side(7, 3, 2) && side(7, 3, 4) && side(31, 5, 2)},
        {"vi (7,3,4) valid and CCS", validate_vi(7, 3, 4).ccs_condition},
        {"vi (7,3,2) invalid", !validate_vi(7, 3, 2).valid_presentation},
        {"vi (7,3,1) invalid", !validate_vi(7, 3, 1).valid_presentation},
        {"vii (7,3,2,2) CCS", validate_vii(7, 3, 2, 2).ccs_condition},
        {"vii (7,3,1,2) CCS", validate_vii(7, 3, 1, 2).ccs_condition},
        {"vii (15,2,1,4) not CCS", !validate_vii(15, 2, 1, 4).ccs_condition},
    };
    json failed = json::array();
    for (const auto& [name, holds] : facts) {
      if (!holds) failed.push_back(name);
    }
    ok = failed.empty();
    return json{{"facts", facts.size()}, {"failed", failed}};
  });
  return s.checks();
}

}  // namespace

json verify_report(const std::string& suite, const Bounds& bounds) {
  const bool all = suite == "all";
  if (!all && suite != "core" && suite != "aut" && suite != "ccs" && suite != "numberth") {
    throw DomainError("unknown suite: " + suite);
  }
  json checks = json::array();
  std::optional<Corpus> corpus;
  auto need_corpus = [&]() -> const Corpus& {
    if (!corpus) corpus.emplace(bounds);
    return *corpus;
  };
  auto append = [&](const json& part) {
    for (const auto& c : part) checks.push_back(c);
  };
  if (all || suite == "core") {
    Suite s("core");
    append(core_suite(bounds, s, need_corpus()));
  }
  if (all || suite == "aut") {
    Suite s("aut");
    append(aut_suite(bounds, s, need_corpus()));
  }
  if (all || suite == "ccs") {
    Suite s("ccs");
    append(ccs_suite(bounds, s, need_corpus()));
  }
  if (all || suite == "numberth") {
    Suite s("numberth");
    append(numberth_suite(bounds, s));
  }
  json failed = json::array();
  for (const auto& c : checks) {
    if (!c["passed"].get<bool>()) failed.push_back(c["suite"].get<std::string>() + "/" + c["name"].get<std::string>());
  }
  return json{{"suite", suite},
              {"bound", bounds.order},
              {"checks", checks},
              {"failed", failed},
              {"passed", failed.empty()}};
}

}  // namespace ccs::tools
