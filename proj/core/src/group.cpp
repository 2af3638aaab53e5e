#include "ccs/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  if (n > 0) names[0] = "e";
  for (std::size_t i = 1; i < n; ++i) names[i] = "g" + std::to_string(i);
  return names;
}

}  // namespace

GroupTable::GroupTable(std::size_t order, std::vector<Element> table,
                       std::vector<std::string> names)
    : order_(order), mul_(std::move(table)), names_(std::move(names)) {
  if (order_ == 0) throw DomainError("group order must be positive");
  if (mul_.size() != order_ * order_) throw DomainError("multiplication table has wrong size");
  if (names_.empty()) names_ = default_names(order_);
  if (names_.size() != order_) throw DomainError("names list has wrong size");

  for (Element x : mul_) {
    if (x >= order_) throw DomainError("table entry out of range");
  }
  for (Element x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw DomainError("element 0 is not the identity");
  }

  // Rows and columns must be permutations (Latin square).
  std::vector<std::uint32_t> seen(order_, 0);
  std::uint32_t stamp = 0;
  for (Element x = 0; x < order_; ++x) {
    ++stamp;
    for (Element y = 0; y < order_; ++y) {
      Element v = mul(x, y);
      if (seen[v] == stamp) throw DomainError("row is not a permutation");
      seen[v] = stamp;
    }
  }
  for (Element y = 0; y < order_; ++y) {
    ++stamp;
    for (Element x = 0; x < order_; ++x) {
      Element v = mul(x, y);
      if (seen[v] == stamp) throw DomainError("column is not a permutation");
      seen[v] = stamp;
    }
  }

  inv_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    auto r = row(x);
    auto it = std::find(r.begin(), r.end(), Element{0});
    Element y = static_cast<Element>(it - r.begin());
    if (mul(y, x) != 0) throw DomainError("left and right inverses differ");
    inv_[x] = y;
  }

  if (order_ <= kAssociativityCheckLimit) {
    for (Element x = 0; x < order_; ++x) {
      auto rx = row(x);
      for (Element y = 0; y < order_; ++y) {
        auto rxy = row(rx[y]);
        auto ry = row(y);
        for (Element z = 0; z < order_; ++z) {
          if (rxy[z] != rx[ry[z]]) throw DomainError("table is not associative");
        }
      }
    }
  }

  elt_order_.assign(order_, 1);
  for (Element x = 1; x < order_; ++x) {
    std::uint32_t k = 1;
    Element p = x;
    while (p != 0) {
      p = mul(p, x);
      ++k;
    }
    elt_order_[x] = k;
  }
}

GroupTable GroupTable::from_law(std::size_t order,
                                const std::function<Element(Element, Element)>& op,
                                std::vector<std::string> names) {
  std::vector<Element> mul(order * order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) mul[static_cast<std::size_t>(a) * order + b] = op(a, b);
  }
  return GroupTable(order, std::move(mul), std::move(names));
}

Element GroupTable::pow(Element a, std::int64_t e) const {
  std::int64_t ord = elt_order_[a];
  e %= ord;
  if (e < 0) e += ord;
  Element result = 0;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t GroupTable::exponent() const {
  std::uint64_t e = 1;
  for (auto o : elt_order_) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

ElementSet ElementSet::whole(std::size_t parent_order) {
  ElementSet s(parent_order);
  for (Element x = 0; x < parent_order; ++x) s.insert(x);
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  ElementSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = n_ * 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  // Lexicographic on the sorted element lists: the first differing bit
  // decides, and the set holding the lower element comes first.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
}

SubgroupBuilder::SubgroupBuilder(const GroupTable& g)
    : g_(&g), set_(ElementSet::trivial(g.order())), elems_{0} {}

SubgroupBuilder::SubgroupBuilder(const GroupTable& g, std::span<const Element> seeds)
    : SubgroupBuilder(g) {
  for (Element s : seeds) add(s);
}

bool SubgroupBuilder::add(Element x) {
  if (set_.contains(x)) return false;
  gens_.push_back(x);
  const std::size_t old = elems_.size();
  auto push = [&](Element y) {
    if (!set_.contains(y)) {
      set_.insert(y);
      elems_.push_back(y);
    }
  };
  for (std::size_t i = 0; i < old; ++i) push(g_->mul(elems_[i], x));
  for (std::size_t i = old; i < elems_.size(); ++i) {
    Element e = elems_[i];
    for (Element gen : gens_) push(g_->mul(e, gen));
  }
  return true;
}

ElementSet generated_subgroup(const GroupTable& g, std::span<const Element> seeds) {
  return SubgroupBuilder(g, seeds).set();
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (s.parent_order() != g.order() || !s.contains(0)) return false;
  auto elems = s.elements();
  for (Element x : elems) {
    if (!s.contains(g.inv(x))) return false;
    for (Element y : elems) {
      if (!s.contains(g.mul(x, y))) return false;
    }
  }
  return true;
}

GroupTable from_generators(std::size_t degree, std::span<const Permutation> perms,
                           const Bounds& bounds) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  for (const auto& p : perms) {
    if (p.size() != degree) throw DomainError("permutation has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw DomainError("not a bijection");
      hit[v] = true;
    }
  }

  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = b[a[x]];
    return c;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  // Right-multiplication by generators: elems[i] * perms[j].
  std::vector<std::vector<Element>> right;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<Element> r;
    r.reserve(perms.size());
    for (const auto& p : perms) {
      Permutation q = compose(elems[i], p);
      auto [it, inserted] = index.try_emplace(q, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= bounds.construction) {
          throw SizeLimitError("permutation closure exceeds " +
                               std::to_string(bounds.construction) + " elements");
        }
        elems.push_back(std::move(q));
      }
      r.push_back(it->second);
    }
    right.push_back(std::move(r));
  }

  const std::size_t n = elems.size();
  // Every element is a word in the generators; x * y follows y's word.
  // Record each element's breadth-first parent and generator.
  std::vector<Element> parent(n, 0);
  std::vector<std::uint32_t> via(n, 0);
  std::vector<bool> reached(n, false);
  std::vector<Element> bfs{0};
  reached[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    Element e = bfs[i];
    for (std::uint32_t j = 0; j < perms.size(); ++j) {
      Element t = right[e][j];
      if (!reached[t]) {
        reached[t] = true;
        parent[t] = e;
        via[t] = j;
        bfs.push_back(t);
      }
    }
  }

  std::vector<Element> mul(n * n);
  for (Element x = 0; x < n; ++x) mul[static_cast<std::size_t>(x) * n] = x;
  for (std::size_t i = 1; i < bfs.size(); ++i) {
    Element y = bfs[i];
    for (Element x = 0; x < n; ++x) {
      Element xp = mul[static_cast<std::size_t>(x) * n + parent[y]];
      mul[static_cast<std::size_t>(x) * n + y] = right[xp][via[y]];
    }
  }
  return GroupTable(n, std::move(mul));
}

GroupTable subgroup_table(const GroupTable& g, const ElementSet& s) {
  auto elems = s.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const std::size_t m = elems.size();
  std::vector<Element> mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Element p = g.mul(elems[i], elems[j]);
      if (!s.contains(p)) throw DomainError("subset is not closed under multiplication");
      mul[i * m + j] = local[p];
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (auto e : elems) names.push_back(g.names()[e]);
  return GroupTable(m, std::move(mul), std::move(names));
}

}  // namespace ccs
