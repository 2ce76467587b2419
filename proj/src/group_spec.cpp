#include "ncfact/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>

#include "ncfact/errors.hpp"

namespace ncfact {

namespace {

// Elements are stored as byte permutations of at most this many points.
constexpr int kMaxPoints = 256;

void require_rank(bool ok, const std::string& what) {
  if (!ok) throw RankTooSmall(what);
}

void require_points(int points, const std::string& what) {
  if (points > kMaxPoints) {
    throw UnsupportedGroup(what + ": needs " + std::to_string(points) +
                           " permutation points, the limit is " + std::to_string(kMaxPoints));
  }
}

}  // namespace

GroupSpec GroupSpec::A(int n) {
  require_rank(n >= 1, "A(n) needs n >= 1");
  require_points(n + 1, "A" + std::to_string(n));
  return {Family::A, n, 1};
}

GroupSpec GroupSpec::B(int n) {
  require_rank(n >= 2, "B(n) needs n >= 2");
  require_points(2 * n, "B" + std::to_string(n));
  return {Family::B, n, 2};
}

GroupSpec GroupSpec::D(int n) {
  require_rank(n >= 2, "D(n) needs n >= 2");
  require_points(2 * n, "D" + std::to_string(n));
  return {Family::D, n, 2};
}

GroupSpec GroupSpec::I2(int e) {
  if (e < 3) throw UnsupportedGroup("I2(e) needs e >= 3");
  require_points(2 * e, "I2(" + std::to_string(e) + ")");
  return {Family::I2, 2, e};
}

GroupSpec GroupSpec::GD1N(int d, int n) {
  if (d < 2) throw UnsupportedGroup("G(d,1,n) needs d >= 2");
  require_rank(n >= 1, "G(d,1,n) needs n >= 1");
  if (d == 2 && n >= 2) return B(n);
  require_points(d * n, "G(" + std::to_string(d) + ",1," + std::to_string(n) + ")");
  return {Family::GD1N, n, d};
}

GroupSpec GroupSpec::GEEN(int e, int n) {
  if (e < 2) throw UnsupportedGroup("G(e,e,n) needs e >= 2");
  require_rank(n >= 2, "G(e,e,n) needs n >= 2");
  if (e == 2) return D(n);
  if (n == 2) return I2(e);
  require_points(e * n, "G(" + std::to_string(e) + "," + std::to_string(e) + "," +
                            std::to_string(n) + ")");
  return {Family::GEEN, n, e};
}

GroupSpec GroupSpec::H3() { return {Family::H3, 3, 0}; }
GroupSpec GroupSpec::H4() { return {Family::H4, 4, 0}; }
GroupSpec GroupSpec::F4() { return {Family::F4, 4, 0}; }
GroupSpec GroupSpec::E6() { return {Family::E6, 6, 0}; }
GroupSpec GroupSpec::E7() { return {Family::E7, 7, 0}; }
GroupSpec GroupSpec::E8() { return {Family::E8, 8, 0}; }

std::string GroupSpec::name() const {
  const std::string n = std::to_string(rank_);
  const std::string p = std::to_string(parameter_);
  switch (family_) {
    case Family::A: return "A" + n;
    case Family::B: return "B" + n;
    case Family::D: return "D" + n;
    case Family::I2: return "I2(" + p + ")";
    case Family::GD1N: return "G(" + p + ",1," + n + ")";
    case Family::GEEN: return "G(" + p + "," + p + "," + n + ")";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

bool GroupSpec::is_two_reflection_group() const {
  return family_ != Family::GD1N || parameter_ == 2;
}

bool GroupSpec::is_real() const {
  switch (family_) {
    case Family::GD1N: return parameter_ == 2;
    case Family::GEEN: return false;
    default: return true;
  }
}

bool GroupSpec::is_monomial() const {
  switch (family_) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::I2:
    case Family::GD1N:
    case Family::GEEN: return true;
    default: return false;
  }
}

namespace {

int parse_int(const std::string& digits, std::string_view original) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("bad number in group string '" + std::string(original) + "'");
  }
  return value;
}

}  // namespace

GroupSpec parse_group(std::string_view text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  static const std::regex kSimple(R"(^([ABD])(\d+)$)");
  static const std::regex kDihedral(R"(^I2\((\d+)\)$)");
  static const std::regex kMonomial(R"(^G\((\d+),(\d+),(\d+)\)$)");
  static const std::regex kExceptional(R"(^([EFH])(\d+)$)");
  static const std::regex kShephardTodd(R"(^G(\d+)$)");
  std::smatch m;
  if (std::regex_match(s, m, kSimple)) {
    const int n = parse_int(m[2], text);
    switch (m[1].str()[0]) {
      case 'A': return GroupSpec::A(n);
      case 'B': return GroupSpec::B(n);
      default: return GroupSpec::D(n);
    }
  }
  if (std::regex_match(s, m, kDihedral)) return GroupSpec::I2(parse_int(m[1], text));
  if (std::regex_match(s, m, kMonomial)) {
    const int a = parse_int(m[1], text);
    const int b = parse_int(m[2], text);
    const int n = parse_int(m[3], text);
    if (b == 1 && a >= 2) return GroupSpec::GD1N(a, n);
    if (a == b) return GroupSpec::GEEN(a, n);
    throw UnsupportedGroup("'" + std::string(text) +
                           "' is not well-generated or not supported; only G(d,1,n) and "
                           "G(e,e,n) are");
  }
  if (std::regex_match(s, m, kExceptional)) {
    if (s == "H3") return GroupSpec::H3();
    if (s == "H4") return GroupSpec::H4();
    if (s == "F4") return GroupSpec::F4();
    if (s == "E6") return GroupSpec::E6();
    if (s == "E7") return GroupSpec::E7();
    if (s == "E8") return GroupSpec::E8();
    throw UnsupportedGroup("unsupported exceptional type '" + std::string(text) + "'");
  }
  if (std::regex_match(s, m, kShephardTodd)) {
    throw UnsupportedGroup("Shephard-Todd group '" + std::string(text) +
                           "' is not supported; use H3, H4, F4, E6, E7, E8");
  }
  throw ParseError("cannot parse group string '" + std::string(text) + "'");
}

InvariantData invariant_data(const GroupSpec& spec) {
  InvariantData data;
  const int n = spec.rank();
  const int m = spec.parameter();
  data.rank = n;
  auto& deg = data.degrees;
  switch (spec.family()) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) deg.push_back(i);
      data.order = factorial(n + 1);
      break;
    case Family::B:
    case Family::GD1N:
      for (int i = 1; i <= n; ++i) deg.push_back(i * m);
      data.order = power(m, n) * factorial(n);
      break;
    case Family::D:
    case Family::GEEN:
      for (int i = 1; i < n; ++i) deg.push_back(i * m);
      deg.push_back(n);
      data.order = power(m, n - 1) * factorial(n);
      break;
    case Family::I2:
      deg = {2, m};
      data.order = 2 * m;
      break;
    case Family::H3:
      deg = {2, 6, 10};
      data.order = 120;
      break;
    case Family::H4:
      deg = {2, 12, 20, 30};
      data.order = 14400;
      break;
    case Family::F4:
      deg = {2, 6, 8, 12};
      data.order = 1152;
      break;
    case Family::E6:
      deg = {2, 5, 6, 8, 9, 12};
      data.order = 51840;
      break;
    case Family::E7:
      deg = {2, 6, 8, 10, 12, 14, 18};
      data.order = 2903040;
      break;
    case Family::E8:
      deg = {2, 8, 12, 14, 18, 20, 24, 30};
      data.order = BigInt(696729600);
      break;
  }
  std::sort(deg.begin(), deg.end());
  return data;
}

}  // namespace ncfact
