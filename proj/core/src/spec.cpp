#include "ccs/spec.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "ccs/errors.hpp"

namespace ccs {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int params;  // integer parameters after the name
};

constexpr std::array<FamilyInfo, 15> kFamilies{{
    {Family::kCyclic, "cyclic", 1},
    {Family::kElemab, "elemab", 2},
    {Family::kDihedral, "dihedral", 1},
    {Family::kDicyclic, "dicyclic", 1},
    {Family::kQuaternion, "quaternion", 1},
    {Family::kSemidihedral, "semidihedral", 1},
    {Family::kExtraspecial, "extraspecial", 2},
    {Family::kPauli, "pauli", 1},
    {Family::kMetacyclic6, "metacyclic6", 3},
    {Family::kMetacyclic7, "metacyclic7", 4},
    {Family::kSl25, "sl25", 0},
    {Family::kA5, "a5", 0},
    {Family::kDirect, "dp", 0},
    {Family::kPower, "power", 0},
    {Family::kCentral, "central", 0},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw DomainError("unknown family");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec spec = group();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                (pos_ > start && std::isdigit(static_cast<unsigned char>(s_[pos_]))))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a family name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip();
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t v = 0;
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max() / 10 - 9;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > kMax) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return negative ? -v : v;
  }

  GroupSpec group() {
    skip();
    const std::size_t start = pos_;
    const std::string name = identifier();
    const FamilyInfo* fi = nullptr;
    for (const auto& f : kFamilies) {
      if (name == f.name) fi = &f;
    }
    if (fi == nullptr) {
      pos_ = start;
      fail("unknown family '" + name + "'");
    }
    GroupSpec spec;
    spec.family = fi->family;
    if (fi->family == Family::kDirect || fi->family == Family::kCentral ||
        fi->family == Family::kPower) {
      expect('(');
      spec.operands.push_back(group());
      expect(',');
      if (fi->family == Family::kPower) {
        spec.params.push_back(integer());
      } else {
        spec.operands.push_back(group());
      }
      expect(')');
      return spec;
    }
    for (int i = 0; i < fi->params; ++i) {
      expect(':');
      spec.params.push_back(integer());
    }
    if (fi->family == Family::kExtraspecial) {
      expect(':');
      if (peek('+')) {
        spec.sign = Sign::kPlus;
      } else if (peek('-')) {
        spec.sign = Sign::kMinus;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return spec;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::size_t positive(std::int64_t v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + ": parameter must be positive");
  return static_cast<std::size_t>(v);
}

int small(std::int64_t v, const char* what) {
  if (v < 0 || v > 64) throw DomainError(std::string(what) + ": parameter out of range");
  return static_cast<int>(v);
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string render_spec(const GroupSpec& spec) {
  const FamilyInfo& fi = info(spec.family);
  std::string out = fi.name;
  switch (spec.family) {
    case Family::kDirect:
    case Family::kCentral:
      return out + "(" + render_spec(spec.operands.at(0)) + "," + render_spec(spec.operands.at(1)) +
             ")";
    case Family::kPower:
      return out + "(" + render_spec(spec.operands.at(0)) + "," +
             std::to_string(spec.params.at(0)) + ")";
    default:
      break;
  }
  for (auto v : spec.params) out += ":" + std::to_string(v);
  if (spec.family == Family::kExtraspecial) out += spec.sign == Sign::kPlus ? ":+" : ":-";
  return out;
}

GroupTable build(const GroupSpec& spec, const Bounds& bounds) {
  const auto& p = spec.params;
  const FamilyInfo& fi = info(spec.family);
  if (static_cast<int>(p.size()) != fi.params && spec.family != Family::kPower) {
    throw DomainError(std::string(fi.name) + ": wrong parameter count");
  }
  switch (spec.family) {
    case Family::kCyclic:
      return cyclic(positive(p[0], "cyclic"), bounds);
    case Family::kElemab:
      return elementary_abelian(p[0], small(p[1], "elemab"), bounds);
    case Family::kDihedral:
      return dihedral(positive(p[0], "dihedral"), bounds);
    case Family::kDicyclic:
      return dicyclic(positive(p[0], "dicyclic"), bounds);
    case Family::kQuaternion:
      return quaternion(positive(p[0], "quaternion"), bounds);
    case Family::kSemidihedral:
      return semidihedral(positive(p[0], "semidihedral"), bounds);
    case Family::kExtraspecial:
      return extraspecial(p[0], small(p[1], "extraspecial"), spec.sign, bounds);
    case Family::kPauli:
      return pauli(small(p[0], "pauli"), bounds);
    case Family::kMetacyclic6:
      return metacyclic6(p[0], p[1], p[2], bounds);
    case Family::kMetacyclic7:
      return metacyclic7(p[0], p[1], p[2], p[3], bounds);
    case Family::kSl25:
      return sl25();
    case Family::kA5:
      return a5();
    case Family::kDirect:
      return direct_product(build(spec.operands.at(0), bounds), build(spec.operands.at(1), bounds),
                            bounds);
    case Family::kPower:
      if (p.size() != 1) throw DomainError("power: wrong parameter count");
      return direct_power(build(spec.operands.at(0), bounds), small(p[0], "power"), bounds);
    case Family::kCentral:
      return central_product_of_centers(build(spec.operands.at(0), bounds),
                                        build(spec.operands.at(1), bounds), bounds);
  }
  throw DomainError("unknown family");
}

GroupTable build(std::string_view text, const Bounds& bounds) {
  return build(parse_spec(text), bounds);
}

}  // namespace ccs
