#pragma once

#include <string>
#include <string_view>

#include "ccs/group.hpp"

namespace ccs {

/// {"order": n, "mul": [[...], ...], "names": [...]}, compact, keys sorted.
std::string write_group_json(const GroupTable& g);

/// Inverse of write_group_json; the mul table is restored exactly.
/// Throws ParseError on malformed JSON and DomainError when the table is
/// not a group.
GroupTable read_group_json(std::string_view text);

}  // namespace ccs
