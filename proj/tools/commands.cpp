#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccs/automorphisms.hpp"
#include "ccs/classify.hpp"
#include "ccs/constructors.hpp"
#include "ccs/errors.hpp"
#include "ccs/group_io.hpp"
#include "ccs/numberth.hpp"
#include "ccs/spec.hpp"
#include "ccs/structure.hpp"

namespace ccs::tools {

namespace {

constexpr std::size_t kScanDefaultBound = 2048;

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename F>
json bounded(F&& f) {
  try {
    return json(f());
  } catch (const SizeLimitError&) {
    return json(nullptr);
  }
}

std::optional<std::size_t> env_bound() {
  const char* v = std::getenv("CCS_BOUND");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw CLI::ValidationError("CCS_BOUND", "must be a positive integer");
  return static_cast<std::size_t>(n);
}

Bounds resolve_bounds(std::optional<std::size_t> flag, std::size_t fallback) {
  if (flag) return Bounds::with_order(*flag);
  if (auto e = env_bound()) return Bounds::with_order(*e);
  return Bounds::with_order(fallback);
}

json error_doc(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

GroupTable load_group(const std::string& arg, const Bounds& bounds) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw DomainError("cannot open " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_group_json(buf.str());
  }
  return build(arg, bounds);
}

json analyze_report(const GroupTable& g, const Bounds& bounds) {
  const auto normals = normal_subgroups(g, bounds);
  const auto auts = automorphism_generators(g, bounds);
  const auto chars = characteristic_subgroups(normals, auts);
  json summary = json::array();
  for (const auto& c : chars) summary.push_back({{"order", c.size()}, {"cyclic", is_cyclic(g, c)}});
  const bool p_group = g.order() == 1 || prime_power(static_cast<std::int64_t>(g.order()));
  return json{
      {"order", g.order()},
      {"exponent", g.exponent()},
      {"center_order", center(g).size()},
      {"derived_order", derived_subgroup(g).size()},
      {"frattini_order",
       bounded([&] { return p_group ? frattini_p_group(g).size() : frattini(g, bounds).size(); })},
      {"fitting_order", fitting(g, bounds).size()},
      {"nilpotent", is_nilpotent(g)},
      {"perfect", is_perfect(g)},
      {"supersolvable", is_supersolvable(g, bounds)},
      {"normal_count", normals.size()},
      {"characteristic_count", chars.size()},
      {"characteristic_summary", summary},
      {"aut_order", auts.order},
  };
}

json classify_report(const GroupTable& g, const Bounds& bounds) {
  const ClassificationReport r = classify_ccs(g, bounds);
  json matching = json::array();
  for (Clause c : r.matching_clauses) matching.push_back(to_string(c));
  return json{
      {"order", r.order},
      {"is_ccs", r.is_ccs},
      {"clause", to_string(r.clause)},
      {"reason", to_string(r.reason)},
      {"witness_order", r.witness ? json(r.witness->size()) : json(nullptr)},
      {"witness_is_cyclic", r.witness ? json(is_cyclic(g, *r.witness)) : json(nullptr)},
      {"center_order", r.center_order},
      {"derived_order", r.derived_order},
      {"frattini_order", optional_json(r.frattini_order)},
      {"fitting_order", optional_json(r.fitting_order)},
      {"aut_order", r.aut_order},
      {"nilpotent", r.nilpotent},
      {"perfect", r.perfect},
      {"matching_clauses", matching},
      {"characteristic_orders", r.characteristic_orders},
  };
}

json scan_report(const ScanOptions& opts, const Bounds& bounds) {
  const bool vi = opts.clause == "vi";
  if (!vi && opts.clause != "vii") throw DomainError("scan: clause must be vi or vii");
  for (auto p : opts.primes) {
    if (!is_prime(p)) throw DomainError("scan: " + std::to_string(p) + " is not prime");
  }
  if (opts.m_max < 1 || opts.alpha_max < 1) throw DomainError("scan: ranges must be positive");

  std::vector<std::int64_t> primes = opts.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  json rows = json::array();
  json disagreements = json::array();
  std::size_t invalid = 0, skipped = 0, size_limited = 0;
  auto check = [&](std::int64_t m, std::int64_t p, std::int64_t alpha, std::int64_t k) {
    const ParamVerdict v = vi ? validate_vi(m, p, k) : validate_vii(m, p, alpha, k);
    if (!v.valid_presentation) {
      ++invalid;
      return;
    }
    std::int64_t pa = 1;
    for (std::int64_t i = 0; i < (vi ? 2 : alpha); ++i) pa *= p;
    const std::int64_t order = m * pa;
    if (opts.order_max > 0 && order > opts.order_max) {
      ++skipped;
      return;
    }
    json row{{"m", m}, {"p", p}, {"k", v.k}, {"order", order}, {"validator", v.ccs_condition},
             {"reasons", v.reasons}};
    if (!vi) row["alpha"] = alpha;
    try {
      const GroupTable g = vi ? metacyclic6(m, p, v.k, bounds) : metacyclic7(m, p, alpha, v.k, bounds);
      const bool brute = is_ccs(g, bounds).is_ccs;
      row["brute_force"] = brute;
      row["agree"] = brute == v.ccs_condition;
      if (brute != v.ccs_condition) disagreements.push_back(row);
    } catch (const SizeLimitError& e) {
      ++size_limited;
      row["brute_force"] = nullptr;
      row["agree"] = nullptr;
      row["error"] = std::string("size-limit: ") + e.what();
    }
    rows.push_back(std::move(row));
  };

  for (std::int64_t m = 1; m <= opts.m_max; ++m) {
    for (std::int64_t p : primes) {
      if (vi) {
        for (std::int64_t k = 0; k < m * p; ++k) check(m, p, 1, k);
      } else {
        for (std::int64_t alpha = 1; alpha <= opts.alpha_max; ++alpha) {
          for (std::int64_t k = 0; k < m; ++k) check(m, p, alpha, k);
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
    auto key = [](const json& r) {
      return std::make_tuple(r["m"].get<std::int64_t>(), r["p"].get<std::int64_t>(),
                             r.value("alpha", std::int64_t{1}), r["k"].get<std::int64_t>());
    };
    return key(a) < key(b);
  });
  return json{
      {"clause", opts.clause},
      {"m_max", opts.m_max},
      {"p_list", primes},
      {"alpha_max", vi ? json(nullptr) : json(opts.alpha_max)},
      {"order_max", opts.order_max > 0 ? json(opts.order_max) : json(nullptr)},
      {"bound", bounds.order},
      {"checked", rows.size() - size_limited},
      {"invalid_presentation", invalid},
      {"skipped_order", skipped},
      {"size_limited", size_limited},
      {"disagreements", disagreements},
      {"rows", rows},
  };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite group toolkit: CCS predicate, classification and verification"};
  app.require_subcommand(1);

  std::optional<std::size_t> bound;
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "Size bound for enumerations (default 256, env CCS_BOUND)")
        ->check(CLI::PositiveNumber);
  };

  std::string spec, out_file;
  auto* build_cmd = app.add_subcommand("build", "Build a group and emit its table as JSON");
  build_cmd->add_option("spec", spec, "Group spec")->required();
  build_cmd->add_option("--out", out_file, "Write the table to FILE instead of stdout");
  add_bound(build_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural report for a group");
  analyze_cmd->add_option("spec", spec, "Group spec or @table.json")->required();
  add_bound(analyze_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "CCS verdict and clause");
  classify_cmd->add_option("spec", spec, "Group spec or @table.json")->required();
  add_bound(classify_cmd);

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Validator vs brute force over metacyclic parameters");
  scan_cmd->add_option("--clause", scan.clause, "vi or vii")
      ->required()
      ->check(CLI::IsMember({"vi", "vii"}));
  scan_cmd->add_option("--m-max", scan.m_max, "Largest m")->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--p-list", scan.primes, "Primes p")->required()->expected(1, -1);
  scan_cmd->add_option("--alpha-max", scan.alpha_max, "Largest alpha (vii)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--order-max", scan.order_max, "Skip groups above this order");
  add_bound(scan_cmd);

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "core, aut, ccs, numberth or all")
      ->required()
      ->check(CLI::IsMember({"core", "aut", "ccs", "numberth", "all"}));
  add_bound(verify_cmd);

  std::vector<std::string> argv_store{"ccs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    emit(out, error_doc("usage", "help requested"));
    return kUsage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    emit(out, error_doc("usage", e.what()));
    return kUsage;
  }

  try {
    if (*build_cmd) {
      const Bounds b = resolve_bounds(bound, Bounds{}.order);
      const GroupSpec parsed = parse_spec(spec);
      const GroupTable g = build(parsed, b);
      const std::string table = write_group_json(g);
      if (out_file.empty()) {
        out << table << "\n";
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw DomainError("cannot write " + out_file);
        f << table << "\n";
        emit(out, json{{"spec", render_spec(parsed)}, {"order", g.order()}, {"out", out_file}});
      }
      return kOk;
    }
    if (*analyze_cmd || *classify_cmd) {
      const Bounds b = resolve_bounds(bound, Bounds{}.order);
      const GroupTable g = load_group(spec, b);
      json doc = *analyze_cmd ? analyze_report(g, b) : classify_report(g, b);
      if (spec.front() != '@') doc["spec"] = render_spec(parse_spec(spec));
      emit(out, doc);
      return kOk;
    }
    if (*scan_cmd) {
      const Bounds b = resolve_bounds(bound, kScanDefaultBound);
      const json doc = scan_report(scan, b);
      emit(out, doc);
      return doc["disagreements"].empty() ? kOk : kVerifyFailed;
    }
    if (*verify_cmd) {
      const Bounds b = resolve_bounds(bound, Bounds{}.order);
      const json doc = verify_report(suite, b);
      emit(out, doc);
      return doc["passed"].get<bool>() ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    json doc = error_doc("parse", e.what());
    doc["error"]["offset"] = e.offset();
    emit(out, doc);
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    emit(out, error_doc("domain", e.what()));
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    emit(out, error_doc("size-limit", e.what()));
    return kSizeLimit;
  } catch (const ClassificationError& e) {
    err << "classification failure: " << e.what() << "\n";
    emit(out, error_doc("classification", e.what()));
    return kVerifyFailed;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    emit(out, error_doc("usage", e.what()));
    return kUsage;
  }
  return kUsage;
}

}  // namespace ccs::tools
