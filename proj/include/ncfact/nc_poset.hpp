#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ncfact/group.hpp"
#include "ncfact/numeric.hpp"

namespace ncfact {

/// A pair u < v in NC together with the NC index of the factor u^{-1} v.
struct Interval {
  std::uint32_t lower;
  std::uint32_t factor;
};

struct NcClass {
  ClassId id;
  int rank = 0;
  Element representative;  // least member of the class inside NC
  std::uint64_t size_in_nc = 0;
};

/// The interval [1, c] of the absolute order. Element 0 is the identity, the
/// last element is c; elements are sorted by rank, then serialization.
class NcPoset {
 public:
  NcPoset(std::shared_ptr<const Group> group, std::vector<Element> elements,
          std::vector<int> ranks, std::vector<std::vector<Interval>> below,
          std::vector<ClassId> class_of);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }

  std::size_t size() const { return elements_.size(); }
  std::span<const Element> elements() const { return elements_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  int rank_of(std::size_t i) const { return ranks_[i]; }
  int max_rank() const { return ranks_.back(); }
  std::size_t top() const { return elements_.size() - 1; }
  /// Indices of the elements of rank k.
  std::span<const std::uint32_t> at_rank(int k) const;

  bool leq(std::size_t u, std::size_t v) const {
    return (leq_bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  /// Strictly smaller elements of v, each with its factor.
  std::span<const Interval> below(std::size_t v) const { return below_[v]; }

  std::optional<std::size_t> find(const Element& w) const;
  std::size_t index_of(const Element& w) const;  // throws NotInNC

  const ClassId& class_of(std::size_t i) const { return class_of_[i]; }

 private:
  std::shared_ptr<const Group> group_;
  std::vector<Element> elements_;
  std::vector<int> ranks_;
  std::vector<std::vector<Interval>> below_;
  std::vector<ClassId> class_of_;
  std::vector<std::vector<std::uint32_t>> by_rank_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> leq_bits_;
};

/// Filters W by w <= c. Throws BudgetExceeded.
NcPoset build_nc(std::shared_ptr<const Group> group);

/// Number of multichains w_1 <= ... <= w_p in NC, by repeated products with
/// the order matrix.
BigInt count_multichains(const NcPoset& nc, int p);

/// prod (d_i + p h) / d_i, asserted integral. Throws NonIntegerResult.
BigInt fuss_catalan(const InvariantData& data, int p);
inline BigInt fuss_catalan(const Group& g, int p) { return fuss_catalan(g.invariants(), p); }

/// Conjugacy classes of the rank-2 elements of NC, ordered by
/// (size in NC, class id).
std::vector<NcClass> strata_codim2(const NcPoset& nc);

}  // namespace ncfact
