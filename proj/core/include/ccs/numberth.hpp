#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// b^e mod m, result in [0, m). Requires m >= 1 and e >= 0.
std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m);
/// Least nonnegative residue of a mod m.
std::int64_t mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
/// Smallest prime divisor; 0 for n <= 1.
std::int64_t smallest_prime_divisor(std::int64_t n);
/// (p, k) with n = p^k, k >= 1; nullopt when n is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n);
/// True when p < q for every prime q dividing m (vacuous for m = 1).
bool below_all_primes_of(std::int64_t p, std::int64_t m);

/// Both sides of the coprimality equivalence for metacyclic actions:
/// lhs = [(k-1, m) = 1], rhs = [(k^u - 1, m) = 1 for u = 1..p-1].
struct CoprimePowerSides {
  bool lhs;
  bool rhs;
};

/// Evaluates both sides by direct gcd computation. The hypotheses are
/// mandatory: p prime, p below every prime of m, (m, k) = 1, k != 1 mod m,
/// k^p = 1 mod m. Throws DomainError otherwise.
CoprimePowerSides coprime_power_equivalence(std::int64_t m, std::int64_t p, std::int64_t k);

/// True when (m, p, k) satisfies every hypothesis of coprime_power_equivalence.
bool coprime_power_admissible(std::int64_t m, std::int64_t p, std::int64_t k);

/// Verdict on metacyclic parameters. ccs_condition implies valid_presentation.
struct ParamVerdict {
  bool valid_presentation = false;
  bool ccs_condition = false;
  std::int64_t k = 0;                // canonical residue actually checked
  std::vector<std::string> reasons;  // tags of failed constraints
};

/// <x, y | x^{mp} = y^p = 1, y x y^-1 = x^k>: presentation validity and the
/// CCS condition (k-1, m) = 1. k is reduced mod mp first.
ParamVerdict validate_vi(std::int64_t m, std::int64_t p, std::int64_t k);

/// <x, y | x^m = y^{p^alpha} = 1, y x y^-1 = x^k>: presentation validity and
/// the CCS condition (m, k-1) = 1, k^p = 1 mod m, k != 1 mod m.
/// k is reduced mod m first.
ParamVerdict validate_vii(std::int64_t m, std::int64_t p, std::int64_t alpha, std::int64_t k);

}  // namespace ccs
