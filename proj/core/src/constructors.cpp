#include "ccs/constructors.hpp"

#include <array>
#include <string>

#include "ccs/errors.hpp"
#include "ccs/numberth.hpp"
#include "ccs/structure.hpp"

namespace ccs {

namespace {

void require_size(std::uint64_t order, const Bounds& bounds, const char* what) {
  if (order > bounds.construction) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(order) +
                         " exceeds bound " + std::to_string(bounds.construction));
  }
}

std::string power_name(const char* sym, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

std::vector<std::string> pair_names(std::int64_t mx, std::int64_t my, const char* x,
                                    const char* y) {
  std::vector<std::string> names(static_cast<std::size_t>(mx * my));
  for (std::int64_t j = 0; j < my; ++j) {
    for (std::int64_t i = 0; i < mx; ++i) {
      std::string s = power_name(x, i) + power_name(y, j);
      names[pair_index(i, j, mx)] = s.empty() ? "e" : s;
    }
  }
  return names;
}

// Table of the law (i, j)(i', j') = (i + mult^j i' mod mx, j + j' mod my),
// the semidirect product C_mx : C_my where the generator acts by mult.
GroupTable cyclic_semidirect(std::int64_t mx, std::int64_t my, std::int64_t mult, const char* x,
                             const char* y) {
  std::vector<std::int64_t> act(static_cast<std::size_t>(my));
  for (std::int64_t j = 0; j < my; ++j) act[static_cast<std::size_t>(j)] = powmod(mult, j, mx);
  return GroupTable::from_law(
      static_cast<std::size_t>(mx * my),
      [=](Element a, Element b) {
        std::int64_t i = a % mx, j = a / mx, i2 = b % mx, j2 = b / mx;
        return pair_index((i + act[static_cast<std::size_t>(j)] * i2) % mx, (j + j2) % my, mx);
      },
      pair_names(mx, my, x, y));
}

GroupTable heisenberg(std::int64_t p, int n) {
  std::int64_t order = 1;
  for (int i = 0; i < 2 * n + 1; ++i) order *= p;
  const auto width = static_cast<std::size_t>(2 * n + 1);
  auto decode = [=](Element x) {
    std::vector<std::int64_t> d(width);
    std::int64_t v = x;
    for (auto& digit : d) {
      digit = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [=](const std::vector<std::int64_t>& d) {
    std::int64_t v = 0;
    for (std::size_t i = width; i-- > 0;) v = v * p + d[i];
    return static_cast<Element>(v);
  };
  return GroupTable::from_law(static_cast<std::size_t>(order), [=](Element a, Element b) {
    auto u = decode(a);
    auto w = decode(b);
    std::vector<std::int64_t> r(width);
    std::int64_t c = u[width - 1] + w[width - 1];
    for (int i = 0; i < n; ++i) {
      r[static_cast<std::size_t>(i)] = (u[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i)]) % p;
      auto bi = static_cast<std::size_t>(n + i);
      r[bi] = (u[bi] + w[bi]) % p;
      c += u[static_cast<std::size_t>(i)] * w[bi];
    }
    r[width - 1] = c % p;
    return encode(r);
  });
}

// Lowest-index element of maximal order in a cyclic subgroup.
Element cyclic_generator(const GroupTable& g, const ElementSet& s) {
  for (Element x : s.elements()) {
    if (g.element_order(x) == s.size()) return x;
  }
  throw DomainError("subgroup is not cyclic");
}

}  // namespace

GroupTable cyclic(std::size_t n, const Bounds& bounds) {
  if (n < 1) throw DomainError("cyclic: order must be positive");
  require_size(n, bounds, "cyclic");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = i == 0 ? "e" : power_name("x", static_cast<std::int64_t>(i));
  return GroupTable::from_law(
      n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, std::move(names));
}

GroupTable elementary_abelian(std::int64_t p, int k, const Bounds& bounds) {
  if (!is_prime(p)) throw DomainError("elementary_abelian: p must be prime");
  if (k < 0) throw DomainError("elementary_abelian: rank must be nonnegative");
  std::uint64_t order = 1;
  for (int i = 0; i < k; ++i) {
    order *= static_cast<std::uint64_t>(p);
    require_size(order, bounds, "elementary_abelian");
  }
  return GroupTable::from_law(order, [p, k](Element a, Element b) {
    std::int64_t r = 0, place = 1, x = a, y = b;
    for (int i = 0; i < k; ++i) {
      r += ((x % p + y % p) % p) * place;
      x /= p;
      y /= p;
      place *= p;
    }
    return static_cast<Element>(r);
  });
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, const Bounds& bounds) {
  const std::size_t na = a.order(), nb = b.order();
  require_size(static_cast<std::uint64_t>(na) * nb, bounds, "direct_product");
  std::vector<std::string> names(na * nb);
  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      names[i + na * j] = i + j == 0 ? "e" : "(" + a.names()[i] + "," + b.names()[j] + ")";
    }
  }
  return GroupTable::from_law(
      na * nb,
      [&](Element x, Element y) {
        return static_cast<Element>(a.mul(x % na, y % na) + na * b.mul(x / na, y / na));
      },
      std::move(names));
}

GroupTable direct_power(const GroupTable& s, int t, const Bounds& bounds) {
  if (t < 1) throw DomainError("direct_power: need at least one factor");
  GroupTable g = s;
  for (int i = 1; i < t; ++i) g = direct_product(g, s, bounds);
  return g;
}

GroupTable dihedral(std::size_t order, const Bounds& bounds) {
  if (order < 4 || order % 2 != 0) throw DomainError("dihedral: order must be even and >= 4");
  require_size(order, bounds, "dihedral");
  auto n = static_cast<std::int64_t>(order / 2);
  return cyclic_semidirect(n, 2, n - 1, "x", "y");
}

GroupTable dicyclic(std::size_t n, const Bounds& bounds) {
  if (n < 1) throw DomainError("dicyclic: n must be positive");
  require_size(4 * static_cast<std::uint64_t>(n), bounds, "dicyclic");
  const auto m = static_cast<std::int64_t>(2 * n);
  const auto half = static_cast<std::int64_t>(n);
  return GroupTable::from_law(
      static_cast<std::size_t>(2 * m),
      [=](Element x, Element y) {
        std::int64_t i = x % m, j = x / m, i2 = y % m, j2 = y / m;
        if (j == 0) return pair_index((i + i2) % m, j2, m);
        if (j2 == 0) return pair_index(mod(i - i2, m), 1, m);
        // a^i b a^i2 b = a^{i - i2} b^2 = a^{i - i2 + n}
        return pair_index(mod(i - i2 + half, m), 0, m);
      },
      pair_names(m, 2, "a", "b"));
}

GroupTable quaternion(std::size_t order, const Bounds& bounds) {
  if (order < 8 || (order & (order - 1)) != 0) {
    throw DomainError("quaternion: order must be a power of two >= 8");
  }
  return dicyclic(order / 4, bounds);
}

GroupTable semidihedral(std::size_t order, const Bounds& bounds) {
  if (order < 16 || (order & (order - 1)) != 0) {
    throw DomainError("semidihedral: order must be a power of two >= 16");
  }
  require_size(order, bounds, "semidihedral");
  auto half = static_cast<std::int64_t>(order / 2);
  return cyclic_semidirect(half, 2, half / 2 - 1, "r", "s");
}

GroupTable extraspecial(std::int64_t p, int n, Sign sign, const Bounds& bounds) {
  if (!is_prime(p)) throw DomainError("extraspecial: p must be prime");
  if (n < 1) throw DomainError("extraspecial: n must be positive");
  std::uint64_t order = 1;
  for (int i = 0; i < 2 * n + 1; ++i) {
    order *= static_cast<std::uint64_t>(p);
    require_size(order, bounds, "extraspecial");
  }
  if (p == 2) {
    GroupTable g = (sign == Sign::kMinus) ? quaternion(8, bounds) : dihedral(8, bounds);
    const GroupTable d8 = dihedral(8, bounds);
    for (int i = 1; i < n; ++i) g = central_product_of_centers(g, d8, bounds);
    return g;
  }
  if (sign == Sign::kPlus) return heisenberg(p, n);
  GroupTable g = cyclic_semidirect(p * p, p, 1 + p, "x", "y");
  if (n > 1) g = central_product_of_centers(g, heisenberg(p, n - 1), bounds);
  return g;
}

GroupTable central_product(const GroupTable& a, const GroupTable& b, const ElementSet& za,
                           const ElementSet& zb, const Pairing& pairing, const Bounds& bounds) {
  if (!is_subgroup(a, za) || !is_subgroup(b, zb)) {
    throw DomainError("central_product: identified sets must be subgroups");
  }
  if (!za.is_subset_of(center(a)) || !zb.is_subset_of(center(b))) {
    throw DomainError("central_product: identified subgroups must be central");
  }
  if (pairing.size() != za.size() || za.size() != zb.size()) {
    throw DomainError("central_product: pairing must cover both subgroups");
  }
  std::vector<Element> theta(a.order(), 0);
  ElementSet dom(a.order()), img(b.order());
  for (auto [x, y] : pairing) {
    if (!za.contains(x) || !zb.contains(y) || dom.contains(x) || img.contains(y)) {
      throw DomainError("central_product: pairing is not a bijection between the subgroups");
    }
    dom.insert(x);
    img.insert(y);
    theta[x] = y;
  }
  for (auto [x, y] : pairing) {
    for (auto [x2, y2] : pairing) {
      if (theta[a.mul(x, x2)] != b.mul(y, y2)) {
        throw DomainError("central_product: pairing is not a homomorphism");
      }
    }
  }
  const GroupTable prod = direct_product(a, b, bounds);
  ElementSet n(prod.order());
  for (auto [x, y] : pairing) n.insert(static_cast<Element>(x + a.order() * y));
  return quotient(prod, n).table;
}

GroupTable central_product_of_centers(const GroupTable& a, const GroupTable& b,
                                      const Bounds& bounds) {
  const ElementSet za = center(a), zb = center(b);
  if (za.size() != zb.size() || !is_cyclic(a, za) || !is_cyclic(b, zb)) {
    throw DomainError("central product of centers: centers must be cyclic of equal order");
  }
  const Element ga = cyclic_generator(a, za), gb = cyclic_generator(b, zb);
  Pairing pairing;
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(za.size()); ++t) {
    pairing.emplace_back(a.pow(ga, t), b.pow(gb, t));
  }
  return central_product(a, b, za, zb, pairing, bounds);
}

GroupTable pauli(int n, const Bounds& bounds) {
  const GroupTable e = extraspecial(2, n, Sign::kPlus, bounds);
  const GroupTable c4 = cyclic(4, bounds);
  const ElementSet ze = center(e);
  ElementSet omega1(4);
  omega1.insert(0);
  omega1.insert(2);
  Element z = ze.elements().back();
  return central_product(e, c4, ze, omega1, {{0, 0}, {z, 2}}, bounds);
}

GroupTable metacyclic6(std::int64_t m, std::int64_t p, std::int64_t k, const Bounds& bounds) {
  if (m < 1 || !is_prime(p)) throw DomainError("metacyclic6: need m >= 1 and p prime");
  if (gcd(m, p) != 1 || !below_all_primes_of(p, m)) {
    throw DomainError("metacyclic6: p must be coprime to m and below every prime of m");
  }
  const std::int64_t n = m * p;
  if (gcd(k, n) != 1 || powmod(k, p, n) != 1 % n) {
    throw DomainError("metacyclic6: need (k, mp) = 1 and k^p = 1 mod mp");
  }
  require_size(static_cast<std::uint64_t>(n * p), bounds, "metacyclic6");
  return cyclic_semidirect(n, p, mod(k, n), "x", "y");
}

GroupTable metacyclic7(std::int64_t m, std::int64_t p, std::int64_t alpha, std::int64_t k,
                       const Bounds& bounds) {
  if (m < 1 || !is_prime(p) || alpha < 1) {
    throw DomainError("metacyclic7: need m >= 1, p prime and alpha >= 1");
  }
  if (gcd(m, p) != 1 || !below_all_primes_of(p, m)) {
    throw DomainError("metacyclic7: p must be coprime to m and below every prime of m");
  }
  std::int64_t pa = 1;
  for (std::int64_t i = 0; i < alpha; ++i) {
    pa *= p;
    require_size(static_cast<std::uint64_t>(pa), bounds, "metacyclic7");
  }
  if (gcd(m, k) != 1 || powmod(k, pa, m) != 1 % m) {
    throw DomainError("metacyclic7: need (m, k) = 1 and k^(p^alpha) = 1 mod m");
  }
  require_size(static_cast<std::uint64_t>(m * pa), bounds, "metacyclic7");
  return cyclic_semidirect(m, pa, mod(k, m), "x", "y");
}

GroupTable sl25() {
  constexpr int q = 5;
  using Mat = std::array<int, 4>;  // row-major a b / c d
  auto encode = [](const Mat& m) { return ((m[0] * q + m[1]) * q + m[2]) * q + m[3]; };
  auto times = [](const Mat& x, const Mat& y) {
    return Mat{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
               (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
  };
  const Mat id{1, 0, 0, 1};
  const std::array<Mat, 2> gens{Mat{0, q - 1, 1, 0}, Mat{1, 1, 0, 1}};
  std::vector<Mat> elems{id};
  std::vector<int> index(q * q * q * q, -1);
  index[static_cast<std::size_t>(encode(id))] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Mat m = times(elems[i], g);
      auto& slot = index[static_cast<std::size_t>(encode(m))];
      if (slot < 0) {
        slot = static_cast<int>(elems.size());
        elems.push_back(m);
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& m : elems) {
    names.push_back("[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + "; " +
                    std::to_string(m[2]) + " " + std::to_string(m[3]) + "]");
  }
  names[0] = "e";
  return GroupTable::from_law(
      elems.size(),
      [&](Element a, Element b) {
        return static_cast<Element>(index[static_cast<std::size_t>(encode(times(elems[a], elems[b])))]);
      },
      std::move(names));
}

GroupTable a5() {
  const std::vector<Permutation> gens{{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}};
  return from_generators(5, gens);
}

}  // namespace ccs
