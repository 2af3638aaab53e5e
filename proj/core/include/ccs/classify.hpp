#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccs/bounds.hpp"
#include "ccs/group.hpp"

namespace ccs {

/// Clause labels of the CCS classification. The eighth clause keeps the
/// label "iix".
enum class Clause { kI, kII, kIII, kIV, kV, kVI, kVII, kIIX, kNotApplicable };

std::string to_string(Clause c);
Clause clause_from_string(const std::string& s);

/// Why a group is or is not CCS.
enum class Reason { kCcs, kCyclic, kCharacteristicallySimple, kNoncyclicCharacteristic };

std::string to_string(Reason r);

struct ClassificationReport {
  bool is_ccs = false;
  Clause clause = Clause::kNotApplicable;
  Reason reason = Reason::kCyclic;
  // Smallest noncyclic proper nontrivial characteristic subgroup, when the
  // verdict fails for that reason.
  std::optional<ElementSet> witness;

  // Diagnostics. Optional orders are absent when the computation exceeded
  // the configured bounds.
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::optional<std::size_t> frattini_order;
  std::optional<std::size_t> fitting_order;
  std::uint64_t aut_order = 0;
  bool nilpotent = false;
  bool perfect = false;
  std::vector<Clause> matching_clauses;  // every clause whose test matched
  std::vector<std::size_t> characteristic_orders;
};

/// Only 1 and G are characteristic.
bool is_characteristically_simple(const GroupTable& g, const Bounds& bounds = {});

/// CCS verdict: G is not cyclic, has a nontrivial proper characteristic
/// subgroup, and every proper characteristic subgroup is cyclic. Fills the
/// verdict, reason, witness and characteristic_orders fields only.
ClassificationReport is_ccs(const GroupTable& g, const Bounds& bounds = {});

/// Full report with the canonical clause. Overlaps resolve in the order
/// iv, v, i, ii, iii, vi, vii, iix; every matching clause is listed in
/// matching_clauses. Throws ClassificationError when a CCS group matches
/// no clause.
ClassificationReport classify_ccs(const GroupTable& g, const Bounds& bounds = {});

/// Perfect case: Z(G) is nontrivial, proper and cyclic, and every proper
/// characteristic subgroup lies in Z(G). Throws DomainError unless G is perfect.
bool perfect_ccs_check(const GroupTable& g, const Bounds& bounds = {});

/// C_G(n) <= N for every nonidentity n in N. Throws DomainError unless N
/// is normal.
bool is_frobenius_with_kernel(const GroupTable& g, const ElementSet& n);

/// For a non-nilpotent CCS group with G' < G: F(G) is cyclic of index
/// equal to the smallest prime dividing |G|, and is maximal.
/// Throws DomainError when the hypotheses fail.
bool fitting_maximality_holds(const GroupTable& g, const Bounds& bounds = {});

}  // namespace ccs
