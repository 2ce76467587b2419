#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncfact/element.hpp"
#include "ncfact/element_index.hpp"
#include "ncfact/group_spec.hpp"
#include "ncfact/numeric.hpp"
#include "ncfact/qphi.hpp"

namespace ncfact {

/// Caps on exhaustive enumeration of W.
struct EnumerationBudget {
  std::uint64_t max_order = 10'000'000;
  /// E7 fits under the default cap but costs minutes and gigabytes; it is
  /// only enumerated when explicitly requested. E8 is never enumerated.
  bool allow_e7 = false;
};

enum class ScalarDomain { Permutation, Monomial, RationalMatrix, QuadraticFieldMatrix };

/// Canonical conjugacy-class identifier: the least serialization in the
/// conjugation orbit.
class ClassId {
 public:
  ClassId() = default;
  explicit ClassId(std::string canonical) : canonical_(std::move(canonical)) {}
  const std::string& canonical() const { return canonical_; }
  /// 16 hex digits of an FNV-1a digest of the canonical bytes, for display.
  std::string short_hex() const;
  auto operator<=>(const ClassId&) const = default;

 private:
  std::string canonical_;
};

struct ParabolicDegrees {
  int d1 = 0;
  int h = 0;
  bool operator==(const ParabolicDegrees&) const = default;
};

/// Reflection length of every element of W, by breadth-first layering of
/// the Cayley graph on the full reflection set.
struct LengthTable {
  explicit LengthTable(std::size_t degree) : index(degree) {}
  ElementIndex index;
  std::vector<std::uint8_t> length;
  std::vector<std::size_t> layer_start;  // ids of length k are [layer_start[k], layer_start[k+1])
};

namespace detail {
struct MonomialRealization {
  int coords = 0;   // dimension of the ambient monomial representation
  int modulus = 1;  // colors live in Z/modulus
};
struct RootRealization {
  QPhiMatrix roots;  // coordinates in the simple-root basis; roots[0..rank) are simple
};
struct GroupCaches;
}  // namespace detail

/// A well-generated reflection group with exact element arithmetic. Immutable
/// after construction except for lazily built enumeration tables, whose first
/// use is thread-safe.
class Group {
 public:
  Group(GroupSpec spec, EnumerationBudget budget);
  ~Group();
  Group(Group&&) noexcept;
  Group& operator=(Group&&) noexcept;

  const GroupSpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  int rank() const { return invariants_.rank; }
  const BigInt& order() const { return invariants_.order; }
  const std::vector<int>& degrees() const { return invariants_.degrees; }
  int coxeter_number() const { return invariants_.coxeter_number(); }
  const InvariantData& invariants() const { return invariants_; }
  const EnumerationBudget& budget() const { return budget_; }
  ScalarDomain scalar_domain() const { return domain_; }

  std::size_t point_count() const { return identity_.degree(); }
  const Element& identity() const { return identity_; }
  const Element& coxeter() const { return coxeter_; }
  /// Generating reflections (n of them, except 3 for the G(e,e,n) fork).
  std::span<const Element> generators() const { return generators_; }
  /// All reflections, deduplicated, sorted by serialization.
  std::span<const Element> reflections() const { return reflections_; }
  bool is_reflection(const Element& w) const;

  Element multiply(const Element& a, const Element& b) const { return compose(a, b); }
  Element invert(const Element& a) const { return inverse(a); }
  int element_order(const Element& w) const;

  /// Family tag followed by the point images; canonical and fixed-endian.
  std::string serialize(const Element& w) const;

  /// n minus dim ker(w - 1), computed exactly.
  int fixed_space_codim(const Element& w) const;

  /// True when W may be enumerated under the budget.
  bool enumerable() const;
  /// Builds the length table on first use. Throws BudgetExceeded.
  const LengthTable& length_table() const;
  int reflection_length(const Element& w) const;
  std::optional<int> reflection_length(std::string_view bytes) const;
  bool absolute_leq(const Element& u, const Element& v) const;

  ClassId conjugacy_class_id(const Element& w) const;
  /// Degrees (d1', h') of the parabolic subgroup fixing Fix(w) pointwise.
  /// Requires l(w) = 2 and w below c.
  ParabolicDegrees parabolic_degrees(const Element& w) const;
  /// Order of that parabolic subgroup and its number of reflections.
  std::pair<std::uint64_t, std::size_t> parabolic_subgroup_size(const Element& w) const;
  /// True when the parabolic subgroup fixing Fix(w) is a direct product of
  /// two rank-1 groups.
  bool parabolic_is_reducible(const Element& w) const;

  /// Monomial decoding: w e_i = zeta^{colors[i]} e_{perm[i]}. Only valid
  /// for monomial groups.
  struct Monomial {
    std::vector<int> perm;
    std::vector<int> colors;
  };
  Monomial to_monomial(const Element& w) const;
  /// Matrix of w in the simple-root basis. Only valid for root groups.
  QPhiMatrix to_matrix(const Element& w) const;

 private:
  std::vector<Element> reflections_fixing(const Element& w) const;
  bool hyperplane_contains_fix(const Element& reflection, const Element& w) const;
  int class_label(std::uint32_t id) const;

  GroupSpec spec_;
  EnumerationBudget budget_;
  InvariantData invariants_;
  ScalarDomain domain_;
  std::variant<detail::MonomialRealization, detail::RootRealization> realization_;
  Element identity_;
  Element coxeter_;
  std::vector<Element> generators_;
  std::vector<Element> reflections_;
  std::unique_ptr<detail::GroupCaches> caches_;
};

/// Constructs the group. Errors: UnsupportedGroup, RankTooSmall.
std::shared_ptr<const Group> build_group(const GroupSpec& spec, EnumerationBudget budget = {});

}  // namespace ncfact
