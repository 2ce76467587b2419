#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncfact/group.hpp"
#include "ncfact/group_spec.hpp"
#include "ncfact/numeric.hpp"

namespace ncfact {

/// n! h^n / |W|: the number of reduced decompositions of c.
BigInt ll_number(const InvariantData& data);
/// (n-1)! h^(n-1) / |W| * ((n-1)(n-2)/2 h + sum_{i<n} d_i).
BigInt submax_total_closed(const InvariantData& data);
/// sum_{i=2..n} i h - sum_{j<n} d_j.
BigInt deg_jacobian(const InvariantData& data);
/// n (n-1) h.
BigInt deg_discriminant(const InvariantData& data);
/// prod (d_i + p h) / d_i; same contract as fuss_catalan.
BigInt chapoton_rhs(const InvariantData& data, int p);
/// (n-2)! h^(n-1) / |W|, the per-position prefactor of the table.
Rational position_prefactor(const InvariantData& data);

inline BigInt ll_number(const Group& g) { return ll_number(g.invariants()); }
inline BigInt submax_total_closed(const Group& g) { return submax_total_closed(g.invariants()); }
inline BigInt deg_jacobian(const Group& g) { return deg_jacobian(g.invariants()); }
inline BigInt deg_discriminant(const Group& g) { return deg_discriminant(g.invariants()); }
inline BigInt chapoton_rhs(const Group& g, int p) { return chapoton_rhs(g.invariants(), p); }

/// Evaluates an arithmetic expression in the variables n and e: integers,
/// + - * / ^, parentheses and implicit multiplication ("2(n-1)(n-2)").
/// Throws ParseError.
Rational evaluate_expression(std::string_view text, int n, int e);

/// One row of the discriminant-factorization table, kept symbolic in (n, e).
struct TableEntryText {
  std::string p;  // power of the factor; equals the order of the class in 2-reflection groups
  std::string u;  // weighted degree of the factor
};

struct TableRow {
  std::string label;              // e.g. "G(e,e,4)"
  std::string condition;          // parameter domain, e.g. "e >= 2, e even"
  std::string isodiscriminantal;  // groups sharing the row
  std::string prefactor;          // (n-2)! h^(n-1) / |W| as an expression
  std::vector<TableEntryText> entries;
  /// Degrees of a group that cannot be built here (non-real exceptional
  /// rows kept as reference data); empty for buildable rows.
  std::vector<int> reference_degrees;
};

/// Every row of the table, in table order.
const std::vector<TableRow>& ll_table();

struct ExpectedEntry {
  BigInt p;
  BigInt u;
  auto operator<=>(const ExpectedEntry&) const = default;
};

/// A table row with its parameters substituted and zero-degree entries
/// dropped.
struct ExpectedRow {
  std::string row_label;
  int n = 0;
  int e = 0;
  Rational prefactor;
  std::vector<ExpectedEntry> entries;
};

ExpectedRow instantiate(const TableRow& row, int n, int e);

/// The table row that applies to the group. Throws NoTableRow, e.g. for
/// G(d,1,n) with d > 2, whose row is only the isodiscriminantal B_n proxy.
ExpectedRow expected_ll_data(const GroupSpec& spec);

/// Index into ll_table() of the row for this group, or nullopt.
std::optional<std::size_t> table_row_index(const GroupSpec& spec);

/// The table as machine-readable JSON text (one record per row).
std::string export_table_json();

}  // namespace ncfact
