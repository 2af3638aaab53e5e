#include "ccs/numberth.hpp"

#include <cstdlib>

#include "ccs/errors.hpp"

namespace ccs {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd(a, b) * b);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

__extension__ using Wide = unsigned __int128;

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  if (m < 1) throw DomainError("powmod modulus must be positive");
  if (e < 0) throw DomainError("powmod exponent must be nonnegative");
  Wide result = 1 % static_cast<std::uint64_t>(m);
  Wide base = static_cast<std::uint64_t>(mod(b, m));
  while (e > 0) {
    if (e & 1) result = result * base % static_cast<std::uint64_t>(m);
    base = base * base % static_cast<std::uint64_t>(m);
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t smallest_prime_divisor(std::int64_t n) {
  auto ps = prime_divisors(n);
  return ps.empty() ? 0 : ps.front();
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  int k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return std::make_pair(ps[0], k);
}

bool below_all_primes_of(std::int64_t p, std::int64_t m) {
  for (auto q : prime_divisors(m)) {
    if (q <= p) return false;
  }
  return true;
}

bool coprime_power_admissible(std::int64_t m, std::int64_t p, std::int64_t k) {
  return m >= 1 && is_prime(p) && below_all_primes_of(p, m) && gcd(m, k) == 1 &&
         mod(k - 1, m) != 0 && powmod(k, p, m) == 1 % m;
}

CoprimePowerSides coprime_power_equivalence(std::int64_t m, std::int64_t p, std::int64_t k) {
  if (!coprime_power_admissible(m, p, k)) {
    throw DomainError("coprime_power_equivalence: hypotheses not met for (m=" + std::to_string(m) +
                      ", p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")");
  }
  CoprimePowerSides s{gcd(k - 1, m) == 1, true};
  for (std::int64_t u = 1; u < p; ++u) {
    std::int64_t ku = powmod(k, u, m);
    // gcd(k^u - 1, m) depends only on k^u mod m.
    if (gcd(ku - 1, m) != 1) {
      s.rhs = false;
      break;
    }
  }
  return s;
}

namespace {

void check_common(std::int64_t m, std::int64_t p, ParamVerdict& v) {
  if (gcd(m, p) != 1) v.reasons.emplace_back("gcd(m,p)!=1");
  if (!below_all_primes_of(p, m)) v.reasons.emplace_back("p-not-smallest-prime");
}

}  // namespace

ParamVerdict validate_vi(std::int64_t m, std::int64_t p, std::int64_t k) {
  if (m < 1) throw DomainError("validate_vi: m must be positive");
  if (!is_prime(p)) throw DomainError("validate_vi: p must be prime");
  const std::int64_t n = m * p;
  ParamVerdict v;
  v.k = mod(k, n);
  check_common(m, p, v);
  if (powmod(v.k, p, n) != 1 % n) v.reasons.emplace_back("k^p!=1(mod mp)");
  if (mod(v.k - 1, n) == 0) v.reasons.emplace_back("k==1(mod mp)");
  v.valid_presentation = v.reasons.empty();
  if (gcd(v.k - 1, m) != 1) v.reasons.emplace_back("gcd(k-1,m)!=1");
  v.ccs_condition = v.valid_presentation && v.reasons.empty();
  return v;
}

ParamVerdict validate_vii(std::int64_t m, std::int64_t p, std::int64_t alpha, std::int64_t k) {
  if (m < 1) throw DomainError("validate_vii: m must be positive");
  if (!is_prime(p)) throw DomainError("validate_vii: p must be prime");
  if (alpha < 1) throw DomainError("validate_vii: alpha must be positive");
  std::int64_t pa = 1;
  for (std::int64_t i = 0; i < alpha; ++i) pa *= p;
  ParamVerdict v;
  v.k = mod(k, m);
  check_common(m, p, v);
  if (gcd(m, v.k) != 1) v.reasons.emplace_back("gcd(m,k)!=1");
  if (powmod(v.k, pa, m) != 1 % m) v.reasons.emplace_back("k^(p^alpha)!=1(mod m)");
  v.valid_presentation = v.reasons.empty();
  if (gcd(m, v.k - 1) != 1) v.reasons.emplace_back("gcd(k-1,m)!=1");
  if (powmod(v.k, p, m) != 1 % m) v.reasons.emplace_back("k^p!=1(mod m)");
  if (mod(v.k - 1, m) == 0) v.reasons.emplace_back("k==1(mod m)");
  v.ccs_condition = v.valid_presentation && v.reasons.empty();
  return v;
}

}  // namespace ccs
