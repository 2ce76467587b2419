#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ncfact/group.hpp"
#include "ncfact/nc_poset.hpp"
#include "ncfact/numeric.hpp"

namespace ncfact {

/// Ordered tuple of nontrivial elements whose product (left to right) is c
/// and whose reflection lengths add up to the rank.
struct Factorization {
  std::vector<Element> factors;
  std::vector<int> composition;  // composition[i] = l(factors[i])

  std::size_t size() const { return factors.size(); }
  /// Concatenated element bytes; used for orbit deduplication.
  std::string key() const;
  auto operator<=>(const Factorization&) const = default;
};

/// Checks every invariant of a block factorization of c.
bool is_block_factorization(const Group& g, const Factorization& f);

/// Number of block factorizations of c with the given composition, by a
/// rank-graded transfer over NC.
BigInt count_fact_by_composition(const NcPoset& nc, const std::vector<int>& composition);

/// Number of block factorizations of c into k factors.
BigInt count_fact_k(const NcPoset& nc, int k);

/// All compositions of n into k positive parts, lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k);

/// Explicit enumeration of the factorizations with a given composition.
std::vector<Factorization> enumerate_factorizations(const NcPoset& nc,
                                                    const std::vector<int>& composition);
/// Explicit enumeration of Red(c), the factorizations into n reflections.
std::vector<Factorization> enumerate_reduced_decompositions(const NcPoset& nc);

/// Number of pairs (r1, r2) of reflections with r1 r2 = w.
/// Throws NotLengthTwo.
int r_lambda(const Group& g, const Element& w);

/// count * |W| / ((n-1)! h^(n-1)), asserted exact. Throws NonIntegerResult.
BigInt derived_degree(const BigInt& count, const InvariantData& data);
inline BigInt derived_degree(const BigInt& count, const Group& g) {
  return derived_degree(count, g.invariants());
}

/// One stratum of codimension 2 with its submaximal-factorization data.
struct LLRow {
  NcClass cls;
  int r = 0;                // pairs of reflections with product in the class
  BigInt u;                 // derived discriminant-factor degree
  BigInt count_submax;      // (n-1)-factorizations whose length-2 factor lies in the class
  ParabolicDegrees parabolic;
  int element_order = 0;
  bool parabolic_reducible = false;
};

/// Per-class submaximal counts, summed over all n-1 positions of the
/// length-2 block. Requires rank >= 2.
std::vector<LLRow> submaximal_by_class(const NcPoset& nc);

/// counts[j][k]: factorizations with the length-2 block at position j
/// (0-based) whose block lies in class k of strata_codim2(nc).
std::vector<std::vector<BigInt>> submaximal_by_position(const NcPoset& nc);

/// Hurwitz move on factors i, i+1 (0-based). direction +1:
/// (a, b) -> (a b a^-1, a); direction -1 is the inverse, (a, b) -> (b, b^-1 a b).
/// Throws IndexOutOfRange.
Factorization hurwitz_move(const Group& g, const Factorization& f, std::size_t i, int direction);

/// Size of the closure of {f} under all Hurwitz moves. Throws
/// BudgetExceeded if the orbit grows beyond cap.
std::size_t hurwitz_orbit(const Group& g, const Factorization& f, std::size_t cap);

/// For every factorization of composition (2,1,...,1), the number of
/// reduced decompositions (s1, ..., sn) with (s1 s2, s3, ..., sn) equal to it.
std::map<Factorization, std::uint64_t> concatenation_fibers(const NcPoset& nc);

}  // namespace ncfact
