#include "ccs/automorphisms.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ccs/errors.hpp"
#include "ccs/numberth.hpp"
#include "ccs/structure.hpp"

namespace ccs {

namespace {

void require_bound(const GroupTable& g, const Bounds& bounds, const char* what) {
  if (g.order() > bounds.order) {
    throw SizeLimitError(std::string(what) + ": group order " + std::to_string(g.order()) +
                         " exceeds bound " + std::to_string(bounds.order));
  }
}

struct TupleHash {
  std::size_t operator()(const std::vector<Element>& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : t) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

using TupleSet = std::unordered_set<std::vector<Element>, TupleHash>;

// Breadth-first spanning structure of A over a generating tuple. Level j
// holds the elements of <g_0..g_j> not already in <g_0..g_{j-1}>; every
// element other than the identity is parent * g_via.
struct Plan {
  struct Edge {
    Element from;
    std::uint32_t gen;
    Element to;
  };

  std::vector<Element> gens;
  std::vector<Element> bfs;
  std::vector<Element> parent;
  std::vector<std::uint32_t> via;
  std::vector<std::uint32_t> level_of;
  std::vector<std::size_t> level_begin;  // bfs index where level j starts
  std::vector<std::size_t> level_end;
  std::vector<std::vector<Edge>> nontree;  // per level, in discovery order
};

Plan make_plan(const GroupTable& a, std::vector<Element> gens) {
  Plan plan;
  const std::size_t n = a.order();
  plan.gens = std::move(gens);
  plan.parent.assign(n, 0);
  plan.via.assign(n, 0);
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  plan.level_of.assign(n, kNone);
  plan.bfs.push_back(0);
  plan.level_of[0] = 0;
  const std::size_t d = plan.gens.size();
  plan.nontree.resize(d);
  for (std::uint32_t j = 0; j < d; ++j) {
    const std::size_t old = plan.bfs.size();
    plan.level_begin.push_back(old);
    auto visit = [&](Element x, std::uint32_t t) {
      Element y = a.mul(x, plan.gens[t]);
      if (plan.level_of[y] == kNone) {
        plan.level_of[y] = j;
        plan.parent[y] = x;
        plan.via[y] = t;
        plan.bfs.push_back(y);
      } else {
        plan.nontree[j].push_back({x, t, y});
      }
    };
    for (std::size_t i = 0; i < old; ++i) visit(plan.bfs[i], j);
    for (std::size_t i = old; i < plan.bfs.size(); ++i) {
      for (std::uint32_t t = 0; t <= j; ++t) visit(plan.bfs[i], t);
    }
    plan.level_end.push_back(plan.bfs.size());
  }
  return plan;
}

enum class Mode { kAll, kFirst, kGenerators };

// Backtracking search for injective homomorphisms A -> B, one generator
// image per level, pruned by fingerprints, product orders and relations.
class HomSearch {
 public:
  HomSearch(const GroupTable& a, const GroupTable& b, std::vector<Element> gens,
            const std::vector<std::uint64_t>& fp_a, const std::vector<std::uint64_t>& fp_b,
            Mode mode, const Bounds& bounds)
      : a_(a),
        b_(b),
        plan_(make_plan(a, std::move(gens))),
        mode_(mode),
        bounds_(bounds),
        phi_(a.order(), 0),
        owner_(b.order(), -1),
        img_(plan_.gens.size(), 0),
        lazy_(a.order(), 0),
        lazy_stamp_(a.order(), 0) {
    const std::size_t d = plan_.gens.size();
    candidates_.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      auto want = fp_a[plan_.gens[j]];
      for (Element c = 0; c < b.order(); ++c) {
        if (fp_b[c] == want) candidates_[j].push_back(c);
      }
    }
    pair_order_.assign(d * d, 0);
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < s; ++t) {
        pair_order_[s * d + t] = a.element_order(a.mul(plan_.gens[t], plan_.gens[s]));
      }
    }
    owner_[0] = -2;  // identity maps to identity at the root
    if (mode_ == Mode::kGenerators) {
      closure_list_.push_back(plan_.gens);
      closure_.insert(plan_.gens);
    }
  }

  void run() { descend(0); }

  const std::vector<std::vector<Element>>& found() const { return found_; }
  std::size_t closure_size() const { return closure_list_.size(); }

 private:
  // Returns true to stop the whole search.
  bool descend(std::size_t level) {
    const std::size_t d = plan_.gens.size();
    if (level == d) return accept();
    for (Element c : candidates_[level]) {
      if (owner_[c] != -1) continue;
      if (!pair_orders_match(level, c)) continue;
      img_[level] = c;
      if (mode_ == Mode::kGenerators && level + 1 == d && closure_.count(img_)) continue;
      if (!quick_relations(level)) continue;
      if (!assign_level(level)) continue;
      bool stop = descend(level + 1);
      unassign_level(level, plan_.level_end[level]);
      if (stop) return true;
    }
    return false;
  }

  bool pair_orders_match(std::size_t level, Element c) const {
    const std::size_t d = plan_.gens.size();
    for (std::size_t t = 0; t < level; ++t) {
      if (b_.element_order(b_.mul(img_[t], c)) != pair_order_[level * d + t]) return false;
    }
    return true;
  }

  // Image of y under the candidate map, following parent links down to
  // elements fixed at earlier levels.
  Element lazy_image(Element y, std::uint32_t level) {
    if (plan_.level_of[y] < level || y == 0) return phi_[y];
    if (lazy_stamp_[y] == stamp_) return lazy_[y];
    chain_.clear();
    Element z = y;
    while (z != 0 && plan_.level_of[z] == level && lazy_stamp_[z] != stamp_) {
      chain_.push_back(z);
      z = plan_.parent[z];
    }
    Element base = (z == 0 || plan_.level_of[z] < level) ? phi_[z] : lazy_[z];
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
      base = b_.mul(base, img_[plan_.via[*it]]);
      lazy_[*it] = base;
      lazy_stamp_[*it] = stamp_;
    }
    return base;
  }

  bool quick_relations(std::size_t level) {
    constexpr std::size_t kQuick = 24;
    ++stamp_;
    const auto& edges = plan_.nontree[level];
    const auto lv = static_cast<std::uint32_t>(level);
    const std::size_t limit = std::min(kQuick, edges.size());
    for (std::size_t i = 0; i < limit; ++i) {
      const auto& e = edges[i];
      if (lazy_image(e.to, lv) != b_.mul(lazy_image(e.from, lv), img_[e.gen])) return false;
    }
    return true;
  }

  bool assign_level(std::size_t level) {
    const std::size_t begin = plan_.level_begin[level];
    const std::size_t end = plan_.level_end[level];
    for (std::size_t i = begin; i < end; ++i) {
      Element y = plan_.bfs[i];
      Element v = b_.mul(phi_[plan_.parent[y]], img_[plan_.via[y]]);
      if (owner_[v] != -1) {
        unassign_level(level, i);
        return false;
      }
      owner_[v] = static_cast<int>(level);
      phi_[y] = v;
    }
    for (const auto& e : plan_.nontree[level]) {
      if (phi_[e.to] != b_.mul(phi_[e.from], img_[e.gen])) {
        unassign_level(level, end);
        return false;
      }
    }
    return true;
  }

  void unassign_level(std::size_t level, std::size_t upto) {
    for (std::size_t i = plan_.level_begin[level]; i < upto; ++i) owner_[phi_[plan_.bfs[i]]] = -1;
  }

  bool accept() {
    switch (mode_) {
      case Mode::kFirst:
        found_.push_back(phi_);
        return true;
      case Mode::kAll:
        if (found_.size() >= bounds_.aut_list) {
          throw SizeLimitError("automorphism group exceeds " + std::to_string(bounds_.aut_list) +
                               " maps");
        }
        found_.push_back(phi_);
        return false;
      case Mode::kGenerators:
        found_.push_back(phi_);
        extend_closure();
        return false;
    }
    return false;
  }

  void extend_closure() {
    const auto& sigma = found_.back();
    const std::size_t old = closure_list_.size();
    auto push = [&](std::vector<Element> t) {
      if (closure_.insert(t).second) {
        closure_list_.push_back(std::move(t));
        if (closure_list_.size() > bounds_.aut_closure) {
          throw SizeLimitError("automorphism group exceeds " +
                               std::to_string(bounds_.aut_closure) + " elements");
        }
      }
    };
    auto apply = [](const std::vector<Element>& map, const std::vector<Element>& t) {
      std::vector<Element> r(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) r[i] = map[t[i]];
      return r;
    };
    for (std::size_t i = 0; i < old; ++i) push(apply(sigma, closure_list_[i]));
    for (std::size_t i = old; i < closure_list_.size(); ++i) {
      for (const auto& gen : found_) push(apply(gen, closure_list_[i]));
    }
  }

  const GroupTable& a_;
  const GroupTable& b_;
  Plan plan_;
  Mode mode_;
  Bounds bounds_;
  std::vector<Element> phi_;
  std::vector<int> owner_;
  std::vector<Element> img_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::uint32_t> pair_order_;
  std::vector<Element> lazy_;
  std::vector<std::uint64_t> lazy_stamp_;
  std::uint64_t stamp_ = 0;
  std::vector<Element> chain_;
  std::vector<std::vector<Element>> found_;
  TupleSet closure_;
  std::vector<std::vector<Element>> closure_list_;
};

// Elementary abelian p^k: Aut is GL(k, p), generated by the transvections
// b_i -> b_i + b_j together with b_0 -> w b_0 for a primitive root w.
std::optional<AutSet> elementary_abelian_automorphisms(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 1) return std::nullopt;
  auto pp = prime_power(static_cast<std::int64_t>(n));
  if (!pp || g.exponent() != static_cast<std::uint64_t>(pp->first) || !is_abelian(g)) {
    return std::nullopt;
  }
  const auto p = static_cast<std::uint32_t>(pp->first);
  const auto k = static_cast<std::size_t>(pp->second);
  const std::vector<Element> basis = generating_tuple(g);
  if (basis.size() != k) return std::nullopt;

  // coords[x] lists the coefficients of x over the basis.
  std::vector<std::vector<std::uint32_t>> coords(n);
  std::vector<std::uint32_t> c(k, 0);
  auto element_of = [&](const std::vector<std::uint32_t>& v) {
    Element x = 0;
    for (std::size_t i = 0; i < k; ++i) x = g.mul(x, g.pow(basis[i], v[i]));
    return x;
  };
  for (std::size_t idx = 0; idx < n; ++idx) {
    coords[element_of(c)] = c;
    for (std::size_t i = 0; i < k && ++c[i] == p; ++i) c[i] = 0;
  }
  auto map_of = [&](const std::vector<std::vector<std::uint32_t>>& images) {
    std::vector<Element> map(n);
    for (Element x = 0; x < n; ++x) {
      std::vector<std::uint32_t> v(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) v[j] = (v[j] + coords[x][i] * images[i][j]) % p;
      }
      map[x] = element_of(v);
    }
    return map;
  };
  std::vector<std::vector<std::uint32_t>> identity(k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;

  AutSet out;
  out.complete = false;
  std::uint32_t w = 1;
  for (std::uint32_t cand = 1; cand < p; ++cand) {
    std::uint32_t ord = 1;
    for (std::uint64_t t = cand; t != 1; t = t * cand % p) ++ord;
    if (ord == p - 1) {
      w = cand;
      break;
    }
  }
  if (w != 1) {
    auto images = identity;
    images[0][0] = w;
    out.maps.push_back(map_of(images));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      auto images = identity;
      images[i][j] = 1;
      out.maps.push_back(map_of(images));
    }
  }
  out.order = 1;
  std::uint64_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out.order *= pk - pi;
    pi *= p;
  }
  return out;
}

}  // namespace

std::vector<Element> generating_tuple(const GroupTable& g) {
  std::vector<Element> gens;
  if (g.order() == 1) return gens;
  Element first = 0;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) > g.element_order(first)) first = x;
  }
  SubgroupBuilder h(g);
  h.add(first);
  gens.push_back(first);
  while (h.size() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 1; x < g.order(); ++x) {
      if (h.set().contains(x)) continue;
      SubgroupBuilder trial = h;
      trial.add(x);
      if (trial.size() > best_size) {
        best_size = trial.size();
        best = x;
        if (best_size == g.order()) break;
      }
    }
    h.add(best);
    gens.push_back(best);
  }
  return gens;
}

std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < n; ++y) {
      Element c = g.conjugate(y, x);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::uint64_t> fingerprints(const GroupTable& g) {
  std::vector<std::uint64_t> fp(g.order());
  for (const auto& cls : conjugacy_classes(g)) {
    for (Element x : cls) {
      fp[x] = (static_cast<std::uint64_t>(g.element_order(x)) << 32) | cls.size();
    }
  }
  return fp;
}

AutSet automorphisms(const GroupTable& g, const Bounds& bounds) {
  require_bound(g, bounds, "automorphisms");
  auto fp = fingerprints(g);
  HomSearch search(g, g, generating_tuple(g), fp, fp, Mode::kAll, bounds);
  search.run();
  AutSet out;
  out.maps = search.found();
  std::sort(out.maps.begin(), out.maps.end());
  out.complete = true;
  out.order = out.maps.size();
  return out;
}

AutSet automorphism_generators(const GroupTable& g, const Bounds& bounds) {
  require_bound(g, bounds, "automorphism_generators");
  if (auto ea = elementary_abelian_automorphisms(g)) return *ea;
  auto fp = fingerprints(g);
  HomSearch search(g, g, generating_tuple(g), fp, fp, Mode::kGenerators, bounds);
  search.run();
  AutSet out;
  out.maps = search.found();
  out.complete = false;
  out.order = search.closure_size();
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& a, const GroupTable& b,
                                                     const Bounds& bounds) {
  if (a.order() != b.order()) return std::nullopt;
  require_bound(a, bounds, "is_isomorphic");
  auto fa = fingerprints(a);
  auto fb = fingerprints(b);
  auto sa = fa;
  auto sb = fb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  HomSearch search(a, b, generating_tuple(a), fa, fb, Mode::kFirst, bounds);
  search.run();
  if (search.found().empty()) return std::nullopt;
  return search.found().front();
}

bool is_automorphism(const GroupTable& g, const std::vector<Element>& map) {
  const std::size_t n = g.order();
  if (map.size() != n || map[0] != 0) return false;
  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (map[g.mul(x, y)] != g.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

std::vector<ElementSet> normal_subgroups(const GroupTable& g, const Bounds& bounds) {
  require_bound(g, bounds, "normal_subgroups");
  struct Entry {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Entry> atoms;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Entry> all{{ElementSet::trivial(g.order()), {}}};
  seen.insert(all[0].set);
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == 0) continue;
    SubgroupBuilder b(g, cls);
    if (seen.insert(b.set()).second) {
      atoms.push_back({b.set(), b.generators()});
      all.push_back(atoms.back());
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& atom : atoms) {
      if (atom.set.is_subset_of(all[i].set)) continue;
      SubgroupBuilder b(g, all[i].gens);
      for (Element x : atom.gens) b.add(x);
      if (seen.insert(b.set()).second) all.push_back({b.set(), b.generators()});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.set));
  sort_canonical(out);
  return out;
}

bool is_invariant(const ElementSet& s, const AutSet& auts) {
  auto es = s.elements();
  for (const auto& map : auts.maps) {
    for (Element x : es) {
      if (!s.contains(map[x])) return false;
    }
  }
  return true;
}

std::vector<ElementSet> characteristic_subgroups(const std::vector<ElementSet>& normals,
                                                 const AutSet& auts) {
  std::vector<ElementSet> out;
  for (const auto& n : normals) {
    if (is_invariant(n, auts)) out.push_back(n);
  }
  return out;
}

std::vector<ElementSet> characteristic_subgroups(const GroupTable& g, const Bounds& bounds) {
  auto normals = normal_subgroups(g, bounds);
  auto auts = automorphism_generators(g, bounds);
  return characteristic_subgroups(normals, auts);
}

bool is_characteristic(const GroupTable& g, const ElementSet& s, const Bounds& bounds) {
  if (!is_subgroup(g, s)) throw DomainError("is_characteristic: not a subgroup");
  return is_invariant(s, automorphism_generators(g, bounds));
}

}  // namespace ccs
