#pragma once

#include <string>
#include <vector>

#include "ccs/classify.hpp"

namespace ccs {

struct CorpusEntry {
  std::string spec;  // canonical spec text
  bool expect_ccs = true;
  Clause expected = Clause::kNotApplicable;
};

/// Reference groups with known verdicts: dihedral orders 6..64, dicyclic
/// and quaternion orders 8..64, small extraspecial and Pauli groups,
/// SL(2,5), and every metacyclic group of order <= metacyclic_order_max
/// whose parameters satisfy the CCS condition of its family.
std::vector<CorpusEntry> ccs_corpus(std::int64_t metacyclic_order_max = 200);

/// Parameter tuples (m, p, k) passing validate_vi with m p^2 <= order_max.
std::vector<std::vector<std::int64_t>> vi_parameters(std::int64_t order_max,
                                                     const std::vector<std::int64_t>& primes,
                                                     bool ccs_only);
/// Parameter tuples (m, p, alpha, k) passing validate_vii with
/// m p^alpha <= order_max and alpha <= alpha_max.
std::vector<std::vector<std::int64_t>> vii_parameters(std::int64_t order_max,
                                                      const std::vector<std::int64_t>& primes,
                                                      std::int64_t alpha_max, bool ccs_only);

/// Primes up to n.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

}  // namespace ccs
