#include "ncfact/closedform.hpp"

#include <cctype>
#include <numeric>

#include <json.hpp>

#include "ncfact/errors.hpp"
#include "ncfact/nc_poset.hpp"

namespace ncfact {

namespace {

BigInt exact(const Rational& q, const std::string& what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw NonIntegerResult(what + " = " + to_fraction_string(q) + " is not an integer");
  }
  return boost::multiprecision::numerator(q);
}

BigInt sum_lower_degrees(const InvariantData& data) {
  BigInt s = 0;
  for (std::size_t i = 0; i + 1 < data.degrees.size(); ++i) s += data.degrees[i];
  return s;
}

}  // namespace

BigInt ll_number(const InvariantData& data) {
  const int n = data.rank;
  return exact(Rational(factorial(n) * power(data.coxeter_number(), n), data.order), "n! h^n / |W|");
}

BigInt submax_total_closed(const InvariantData& data) {
  const int n = data.rank;
  const int h = data.coxeter_number();
  const Rational lead(factorial(n - 1) * power(h, n - 1), data.order);
  const Rational bracket = Rational((n - 1) * (n - 2), 2) * h + Rational(sum_lower_degrees(data));
  return exact(lead * bracket, "submaximal factorization count");
}

BigInt deg_jacobian(const InvariantData& data) {
  const int n = data.rank;
  BigInt s = 0;
  for (int i = 2; i <= n; ++i) s += BigInt(i) * data.coxeter_number();
  return s - sum_lower_degrees(data);
}

BigInt deg_discriminant(const InvariantData& data) {
  return BigInt(data.rank) * (data.rank - 1) * data.coxeter_number();
}

BigInt chapoton_rhs(const InvariantData& data, int p) { return fuss_catalan(data, p); }

Rational position_prefactor(const InvariantData& data) {
  const int n = data.rank;
  if (n < 2) throw RankTooSmall("the per-position prefactor needs rank >= 2");
  return Rational(factorial(n - 2) * power(data.coxeter_number(), n - 1), data.order);
}

// ---------------------------------------------------------------------------
// Expression evaluation

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int n, int e) : text_(text), n_(n), e_(e) {}

  Rational parse() {
    Rational v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression '" + std::string(text_) + "': " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Rational expr() {
    Rational v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      const Rational rhs = term();
      v = c == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  Rational term() {
    Rational v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        const Rational rhs = unary();
        if (c == '/' && rhs == 0) fail("division by zero");
        v = c == '*' ? v * rhs : v / rhs;
      } else if (c == '(' || c == 'n' || c == 'e' || std::isdigit(static_cast<unsigned char>(c))) {
        v *= unary();  // implicit multiplication
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power_expr();
  }

  Rational power_expr() {
    const Rational base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const Rational exponent = unary();
    if (boost::multiprecision::denominator(exponent) != 1) fail("non-integer exponent");
    const BigInt k = boost::multiprecision::numerator(exponent);
    if (k < 0 || k > 10000) fail("exponent out of range");
    Rational r = 1;
    for (BigInt i = 0; i < k; ++i) r *= base;
    return r;
  }

  Rational primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Rational v = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (c == 'n') {
      ++pos_;
      return n_;
    }
    if (c == 'e') {
      ++pos_;
      return e_;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return Rational(v);
    }
    fail(c == '\0' ? "unexpected end" : std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  int e_;
};

}  // namespace

Rational evaluate_expression(std::string_view text, int n, int e) {
  return ExpressionParser(text, n, e).parse();
}

// ---------------------------------------------------------------------------
// The table

const std::vector<TableRow>& ll_table() {
  static const std::vector<TableRow> rows = {
      {"A_n", "n >= 2", "G4, G8, G16, G25, G32", "(n+1)^(n-2)/(n(n-1))",
       {{"2", "n(n-1)(n-2)/2"}, {"3", "n(n-1)"}}, {}},
      {"B_n", "n >= 2", "G(d,1,n), G5, G10, G18, G26", "n^(n-2)/(2(n-1))",
       {{"2", "(n-1)(n-2)(n-3)"}, {"2", "2(n-1)(n-2)"}, {"3", "2(n-1)(n-2)"}, {"4", "2(n-1)"}},
       {}},
      {"I2(e)", "e >= 3", "G6, G9, G17, G14, G20, G21", "1/2", {{"e", "2"}}, {}},
      {"G(e,e,n)", "e >= 2, n >= 5 (D_n for e = 2)", "", "(n-1)^(n-2)/n",
       {{"2", "n(n-2)(n-3)e/2"}, {"3", "n(n-2)e"}, {"e", "n"}}, {}},
      {"G(e,e,3)", "e >= 3, 3 does not divide e", "", "2/3", {{"3", "3e"}, {"e", "3"}}, {}},
      {"G(e,e,3)", "e >= 3, 3 divides e", "", "2/3",
       {{"3", "e"}, {"3", "e"}, {"3", "e"}, {"e", "3"}}, {}},
      {"G(e,e,4)", "e >= 3, e odd", "", "9/4", {{"2", "4e"}, {"3", "8e"}, {"e", "4"}}, {}},
      {"G(e,e,4)", "e >= 2, e even (D_4 for e = 2)", "", "9/4",
       {{"2", "2e"}, {"2", "2e"}, {"3", "8e"}, {"e", "4"}}, {}},
      {"G23 (H3)", "", "", "5/6", {{"2", "6"}, {"3", "6"}, {"5", "6"}}, {}},
      {"G24", "", "", "7/12", {{"3", "12"}, {"4", "12"}}, {4, 6, 14}},
      {"G27", "", "", "5/12", {{"3", "12"}, {"3", "12"}, {"4", "12"}, {"5", "12"}}, {6, 12, 30}},
      {"G28 (F4)", "", "", "3", {{"2", "24"}, {"3", "8"}, {"3", "8"}, {"4", "12"}}, {}},
      {"G29", "", "", "25/12", {{"2", "24"}, {"3", "48"}, {"4", "12"}}, {4, 8, 12, 20}},
      {"G30 (H4)", "", "", "15/4", {{"2", "60"}, {"3", "40"}, {"5", "24"}}, {}},
      {"G33", "", "", "243/20", {{"2", "60"}, {"3", "80"}}, {4, 6, 10, 12, 18}},
      {"G34", "", "", "2401/30", {{"2", "270"}, {"3", "240"}}, {6, 12, 18, 24, 30, 42}},
      {"G35 (E6)", "", "", "576/5", {{"2", "90"}, {"3", "60"}}, {}},
      {"G36 (E7)", "", "", "19683/14", {{"2", "210"}, {"3", "112"}}, {}},
      {"G37 (E8)", "", "", "1265625/56", {{"2", "504"}, {"3", "224"}}, {}},
  };
  return rows;
}

ExpectedRow instantiate(const TableRow& row, int n, int e) {
  ExpectedRow out;
  out.row_label = row.label;
  out.n = n;
  out.e = e;
  out.prefactor = evaluate_expression(row.prefactor, n, e);
  for (const auto& entry : row.entries) {
    const BigInt p = exact(evaluate_expression(entry.p, n, e), "table power");
    const BigInt u = exact(evaluate_expression(entry.u, n, e), "table degree");
    if (u != 0) out.entries.push_back({p, u});
  }
  return out;
}

namespace {

std::size_t row_named(std::string_view label, std::string_view condition_prefix = {}) {
  const auto& rows = ll_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].label == label && rows[i].condition.starts_with(condition_prefix)) return i;
  }
  throw std::logic_error("missing table row " + std::string(label));
}

}  // namespace

std::optional<std::size_t> table_row_index(const GroupSpec& spec) {
  const int n = spec.rank();
  const int e = spec.parameter();
  switch (spec.family()) {
    case Family::A:
      if (n >= 2) return row_named("A_n");
      return std::nullopt;
    case Family::B: return row_named("B_n");
    case Family::I2: return row_named("I2(e)");
    case Family::D:
    case Family::GEEN:
      if (n >= 5) return row_named("G(e,e,n)");
      if (n == 4) return e % 2 == 0 ? row_named("G(e,e,4)", "e >= 2") : row_named("G(e,e,4)", "e >= 3");
      if (n == 3 && spec.family() == Family::D) return row_named("A_n");  // D3 = A3
      if (n == 3) return e % 3 == 0 ? row_named("G(e,e,3)", "e >= 3, 3 divides")
                                    : row_named("G(e,e,3)", "e >= 3, 3 does not");
      return std::nullopt;
    case Family::GD1N: return std::nullopt;
    case Family::H3: return row_named("G23 (H3)");
    case Family::H4: return row_named("G30 (H4)");
    case Family::F4: return row_named("G28 (F4)");
    case Family::E6: return row_named("G35 (E6)");
    case Family::E7: return row_named("G36 (E7)");
    case Family::E8: return row_named("G37 (E8)");
  }
  return std::nullopt;
}

ExpectedRow expected_ll_data(const GroupSpec& spec) {
  const auto index = table_row_index(spec);
  if (!index) {
    if (spec.family() == Family::GD1N && spec.rank() >= 2) {
      throw NoTableRow(spec.name() + " has no row of its own; it is isodiscriminantal to B" +
                       std::to_string(spec.rank()) + " (proxy only, not compared)");
    }
    throw NoTableRow(spec.name() + " has no table row");
  }
  // D3 is read off the A_n row at n = 3
  return instantiate(ll_table()[*index], spec.rank(), spec.parameter());
}

std::string export_table_json() {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : ll_table()) {
    nlohmann::ordered_json r;
    r["family"] = row.label;
    r["condition"] = row.condition;
    r["isodiscriminantal"] = row.isodiscriminantal;
    r["prefactor"] = row.prefactor;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& entry : row.entries) entries.push_back({{"p", entry.p}, {"u", entry.u}});
    r["entries"] = std::move(entries);
    r["reference_only"] = !row.reference_degrees.empty();
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json doc;
  doc["description"] =
      "Factorization of the Lyashko-Looijenga discriminant: each entry (p, u) is an irreducible "
      "factor of weighted degree u appearing with power p; prefactor is (n-2)! h^(n-1) / |W|.";
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace ncfact
