#include "ccs/corpus.hpp"

#include "ccs/numberth.hpp"

namespace ccs {

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q <= n; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> vi_parameters(std::int64_t order_max,
                                                     const std::vector<std::int64_t>& primes,
                                                     bool ccs_only) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t p : primes) {
    for (std::int64_t m = 1; m * p * p <= order_max; ++m) {
      for (std::int64_t k = 0; k < m * p; ++k) {
        auto v = validate_vi(m, p, k);
        if (ccs_only ? v.ccs_condition : v.valid_presentation) out.push_back({m, p, k});
      }
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> vii_parameters(std::int64_t order_max,
                                                      const std::vector<std::int64_t>& primes,
                                                      std::int64_t alpha_max, bool ccs_only) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t p : primes) {
    std::int64_t pa = 1;
    for (std::int64_t alpha = 1; alpha <= alpha_max; ++alpha) {
      pa *= p;
      if (pa > order_max) break;
      for (std::int64_t m = 1; m * pa <= order_max; ++m) {
        for (std::int64_t k = 0; k < m; ++k) {
          auto v = validate_vii(m, p, alpha, k);
          if (ccs_only ? v.ccs_condition : v.valid_presentation) out.push_back({m, p, alpha, k});
        }
      }
    }
  }
  return out;
}

std::vector<CorpusEntry> ccs_corpus(std::int64_t metacyclic_order_max) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string spec, Clause c) { out.push_back({std::move(spec), true, c}); };
  for (int n = 6; n <= 64; n += 2) add("dihedral:" + std::to_string(n), Clause::kIV);
  for (int n = 2; 4 * n <= 64; ++n) add("dicyclic:" + std::to_string(n), Clause::kV);
  for (int n = 8; n <= 64; n *= 2) add("quaternion:" + std::to_string(n), Clause::kV);
  add("extraspecial:2:1:+", Clause::kIV);
  add("extraspecial:2:1:-", Clause::kV);
  add("extraspecial:2:2:+", Clause::kII);
  add("extraspecial:2:2:-", Clause::kII);
  add("extraspecial:3:1:+", Clause::kI);
  out.push_back({"extraspecial:3:1:-", false, Clause::kNotApplicable});
  add("extraspecial:5:1:+", Clause::kI);
  add("pauli:1", Clause::kIII);
  add("pauli:2", Clause::kIII);
  add("sl25", Clause::kIIX);

  const auto primes = primes_up_to(metacyclic_order_max);
  for (const auto& t : vi_parameters(metacyclic_order_max, primes, true)) {
    // p = 2 forces k = -1 mod m, which is the dihedral group of order 4m.
    add("metacyclic6:" + std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" +
            std::to_string(t[2]),
        t[1] == 2 ? Clause::kIV : Clause::kVI);
  }
  for (const auto& t : vii_parameters(metacyclic_order_max, primes, 64, true)) {
    Clause c = Clause::kVII;
    if (t[1] == 2 && t[2] == 1) c = Clause::kIV;
    if (t[1] == 2 && t[2] == 2) c = Clause::kV;
    add("metacyclic7:" + std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" +
            std::to_string(t[2]) + ":" + std::to_string(t[3]),
        c);
  }
  return out;
}

}  // namespace ccs
