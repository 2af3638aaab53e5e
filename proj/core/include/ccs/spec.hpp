#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/bounds.hpp"
#include "ccs/constructors.hpp"
#include "ccs/group.hpp"

namespace ccs {

enum class Family {
  kCyclic,
  kElemab,
  kDihedral,
  kDicyclic,
  kQuaternion,
  kSemidihedral,
  kExtraspecial,
  kPauli,
  kMetacyclic6,
  kMetacyclic7,
  kSl25,
  kA5,
  kDirect,
  kPower,
  kCentral,
};

/// Parsed group description. `operands` is used by direct, power and
/// central; power keeps its exponent in params.
struct GroupSpec {
  Family family = Family::kCyclic;
  std::vector<std::int64_t> params;
  Sign sign = Sign::kPlus;
  std::vector<GroupSpec> operands;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Grammar:
///   cyclic:n  elemab:p:k  dihedral:N  dicyclic:n  quaternion:N
///   semidihedral:N  extraspecial:p:n:+|-  pauli:n  metacyclic6:m:p:k
///   metacyclic7:m:p:a:k  sl25  a5  dp(A,B)  power(A,t)  central(A,B)
/// Whitespace is ignored. Throws ParseError with the byte offset.
GroupSpec parse_spec(std::string_view text);

/// Canonical text; parse_spec(render_spec(s)) == s.
std::string render_spec(const GroupSpec& spec);

/// Runs the family constructor. Constructor preconditions surface as
/// DomainError, size bounds as SizeLimitError.
GroupTable build(const GroupSpec& spec, const Bounds& bounds = {});

/// parse_spec followed by build.
GroupTable build(std::string_view text, const Bounds& bounds = {});

}  // namespace ccs
