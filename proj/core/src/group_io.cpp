#include "ccs/group_io.hpp"

#include <json.hpp>

#include "ccs/errors.hpp"

namespace ccs {

std::string write_group_json(const GroupTable& g) {
  const std::size_t n = g.order();
  nlohmann::json mul = nlohmann::json::array();
  for (Element a = 0; a < n; ++a) {
    auto row = g.row(a);
    mul.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  nlohmann::json doc;
  doc["order"] = n;
  doc["mul"] = std::move(mul);
  doc["names"] = g.names();
  return doc.dump();
}

GroupTable read_group_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid group JSON: ") + e.what(), e.byte);
  }
  try {
    const auto n = doc.at("order").get<std::size_t>();
    const auto& rows = doc.at("mul");
    if (n == 0 || !rows.is_array() || rows.size() != n) {
      throw DomainError("group JSON: mul must have order rows");
    }
    std::vector<Element> mul;
    mul.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw DomainError("group JSON: ragged mul row");
      for (const auto& v : row) {
        auto x = v.get<std::uint64_t>();
        if (x >= n) throw DomainError("group JSON: entry out of range");
        mul.push_back(static_cast<Element>(x));
      }
    }
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return GroupTable(n, std::move(mul), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("group JSON: ") + e.what());
  }
}

}  // namespace ccs
