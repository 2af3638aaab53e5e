#pragma once

// Slow reference implementations used only by the tests. None of them calls
// into the library's search code; they work from the raw table.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ccs/group.hpp"

namespace oracle {

using ccs::Element;
using ccs::GroupTable;
using Subset = std::set<Element>;

/// Size of the group generated by permutations, by plain orbit closure
/// over std::set.
inline std::size_t permutation_closure_size(std::size_t degree,
                                            const std::vector<std::vector<std::uint32_t>>& gens) {
  std::vector<std::uint32_t> id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> todo{id};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> next(degree);
      for (std::uint32_t i = 0; i < degree; ++i) next[i] = g[cur[i]];
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen.size();
}

inline Subset closure(const GroupTable& g, Subset s) {
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur) {
      for (Element b : cur) {
        if (s.insert(g.mul(a, b)).second) grew = true;
      }
    }
  }
  return s;
}

inline bool closed(const GroupTable& g, const Subset& s) {
  if (!s.count(0)) return false;
  for (Element a : s) {
    for (Element b : s) {
      if (!s.count(g.mul(a, b))) return false;
    }
  }
  return true;
}

/// Every subgroup, by testing every subset containing the identity.
/// Only for |G| <= 16.
inline std::set<Subset> subgroups_by_subsets(const GroupTable& g) {
  const std::size_t n = g.order();
  std::set<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Subset s{0};
    for (std::size_t i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1U) s.insert(static_cast<Element>(i));
    }
    if (n % s.size() == 0 && closed(g, s)) out.insert(s);
  }
  return out;
}

/// Every subgroup, by closing every pair and then joining until stable.
inline std::set<Subset> subgroups_by_joins(const GroupTable& g) {
  std::set<Subset> out;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a; b < g.order(); ++b) out.insert(closure(g, {a, b}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> cur(out.begin(), out.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Subset u = cur[i];
        u.insert(cur[j].begin(), cur[j].end());
        if (out.insert(closure(g, u)).second) grew = true;
      }
    }
  }
  return out;
}

inline bool normal(const GroupTable& g, const Subset& s) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element h : s) {
      if (!s.count(g.mul(g.mul(x, h), g.inv(x)))) return false;
    }
  }
  return true;
}

/// All automorphisms: every image tuple of a fixed generating list is
/// expanded along words and kept when it is a bijective homomorphism.
inline std::set<std::vector<Element>> automorphisms(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Element> gens;
  Subset span{0};
  for (Element x = 1; x < n && span.size() < n; ++x) {
    if (span.count(x)) continue;
    gens.push_back(x);
    Subset next = span;
    next.insert(x);
    span = closure(g, next);
  }
  // word[x] = (parent, generator index) so that x = parent * gens[index].
  std::vector<std::pair<Element, std::size_t>> word(n, {0, 0});
  std::vector<Element> order_seen{0};
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t i = 0; i < order_seen.size(); ++i) {
    for (std::size_t t = 0; t < gens.size(); ++t) {
      Element y = g.mul(order_seen[i], gens[t]);
      if (!reached[y]) {
        reached[y] = true;
        word[y] = {order_seen[i], t};
        order_seen.push_back(y);
      }
    }
  }
  std::set<std::vector<Element>> out;
  std::vector<Element> images(gens.size());
  std::function<void(std::size_t)> pick = [&](std::size_t t) {
    if (t == gens.size()) {
      std::vector<Element> map(n, 0);
      for (std::size_t i = 1; i < order_seen.size(); ++i) {
        Element y = order_seen[i];
        map[y] = g.mul(map[word[y].first], images[word[y].second]);
      }
      std::vector<bool> hit(n, false);
      for (Element v : map) {
        if (hit[v]) return;
        hit[v] = true;
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (map[g.mul(a, b)] != g.mul(map[a], map[b])) return;
        }
      }
      out.insert(map);
      return;
    }
    for (Element c = 1; c < n; ++c) {
      images[t] = c;
      pick(t + 1);
    }
  };
  if (n == 1) {
    out.insert({0});
  } else {
    pick(0);
  }
  return out;
}

inline std::vector<Subset> characteristic(const GroupTable& g) {
  const auto auts = oracle::automorphisms(g);
  std::vector<Subset> out;
  for (const auto& s : subgroups_by_joins(g)) {
    bool fixed = true;
    for (const auto& m : auts) {
      for (Element x : s) fixed = fixed && s.count(m[x]);
    }
    if (fixed) out.push_back(s);
  }
  return out;
}

inline bool cyclic(const GroupTable& g, const Subset& s) {
  for (Element x : s) {
    if (closure(g, {x}).size() == s.size()) return true;
  }
  return false;
}

/// CCS by definition, from the oracle characteristic subgroups.
inline bool ccs(const GroupTable& g) {
  Subset all;
  for (Element x = 0; x < g.order(); ++x) all.insert(x);
  if (oracle::cyclic(g, all)) return false;
  bool nontrivial = false;
  for (const auto& c : oracle::characteristic(g)) {
    if (c.size() == 1 || c.size() == g.order()) continue;
    nontrivial = true;
    if (!oracle::cyclic(g, c)) return false;
  }
  return nontrivial;
}

}  // namespace oracle
