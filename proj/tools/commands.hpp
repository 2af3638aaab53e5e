#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccs/bounds.hpp"
#include "ccs/group.hpp"

namespace ccs::tools {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kSizeLimit = 3,
};

/// A spec string, or "@path" naming a group table JSON file.
GroupTable load_group(const std::string& arg, const Bounds& bounds);

json analyze_report(const GroupTable& g, const Bounds& bounds);
json classify_report(const GroupTable& g, const Bounds& bounds);

struct ScanOptions {
  std::string clause;  // "vi" or "vii"
  std::int64_t m_max = 0;
  std::vector<std::int64_t> primes;
  std::int64_t alpha_max = 1;
  std::int64_t order_max = 0;  // 0: no cap
};

/// Validator verdict against brute-force is_ccs for every tuple with a
/// valid presentation, sorted by (m, p, alpha, k).
json scan_report(const ScanOptions& opts, const Bounds& bounds);

/// Runs a verification suite: core, aut, ccs, numberth or all.
json verify_report(const std::string& suite, const Bounds& bounds);

/// Full command line (without the program name). Writes one JSON document
/// to `out`, diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccs::tools
