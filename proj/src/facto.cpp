#include "ncfact/facto.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "ncfact/errors.hpp"

namespace ncfact {

std::string Factorization::key() const {
  std::string out;
  for (const auto& f : factors) out += f.bytes();
  return out;
}

bool is_block_factorization(const Group& g, const Factorization& f) {
  if (f.factors.empty() || f.factors.size() != f.composition.size()) return false;
  Element prod = g.identity();
  int total = 0;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (f.factors[i].is_identity()) return false;
    const int len = g.reflection_length(f.factors[i]);
    if (len != f.composition[i]) return false;
    total += len;
    prod = g.multiply(prod, f.factors[i]);
  }
  return prod == g.coxeter() && total == g.rank();
}

namespace {

void check_composition(const NcPoset& nc, const std::vector<int>& composition) {
  if (composition.empty()) throw std::invalid_argument("empty composition");
  int sum = 0;
  for (const int part : composition) {
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
    sum += part;
  }
  if (sum != nc.group().rank()) {
    throw std::invalid_argument("composition sums to " + std::to_string(sum) + ", not the rank " +
                                std::to_string(nc.group().rank()));
  }
}

struct Upper {
  std::uint32_t upper;
  std::uint32_t factor;
};

std::vector<std::vector<Upper>> above_lists(const NcPoset& nc) {
  std::vector<std::vector<Upper>> above(nc.size());
  for (std::size_t v = 0; v < nc.size(); ++v) {
    for (const auto& iv : nc.below(v)) above[iv.lower].push_back({static_cast<std::uint32_t>(v), iv.factor});
  }
  return above;
}

}  // namespace

BigInt count_fact_by_composition(const NcPoset& nc, const std::vector<int>& composition) {
  check_composition(nc, composition);
  std::vector<BigInt> cur(nc.size(), BigInt(0));
  cur[0] = 1;
  int rank = 0;
  for (const int part : composition) {
    std::vector<BigInt> next(nc.size(), BigInt(0));
    for (const std::uint32_t v : nc.at_rank(rank + part)) {
      for (const auto& iv : nc.below(v)) {
        if (nc.rank_of(iv.lower) == rank) next[v] += cur[iv.lower];
      }
    }
    cur = std::move(next);
    rank += part;
  }
  return cur[nc.top()];
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int remaining) {
    if (static_cast<int>(parts.size()) == k) {
      if (remaining == 0) out.push_back(parts);
      return;
    }
    const int slots_left = k - static_cast<int>(parts.size()) - 1;
    for (int part = 1; part <= remaining - slots_left; ++part) {
      parts.push_back(part);
      rec(remaining - part);
      parts.pop_back();
    }
  };
  if (k >= 1 && k <= n) rec(n);
  return out;
}

BigInt count_fact_k(const NcPoset& nc, int k) {
  const int n = nc.group().rank();
  if (k < 1 || k > n) throw std::invalid_argument("count_fact_k needs 1 <= k <= n");
  BigInt total = 0;
  for (const auto& comp : compositions(n, k)) total += count_fact_by_composition(nc, comp);
  return total;
}

std::vector<Factorization> enumerate_factorizations(const NcPoset& nc,
                                                    const std::vector<int>& composition) {
  check_composition(nc, composition);
  const auto above = above_lists(nc);
  std::vector<Factorization> out;
  Factorization current;
  current.composition = composition;
  std::function<void(std::uint32_t, std::size_t)> rec = [&](std::uint32_t u, std::size_t j) {
    if (j == composition.size()) {
      if (u == nc.top()) out.push_back(current);
      return;
    }
    const int target = nc.rank_of(u) + composition[j];
    for (const auto& up : above[u]) {
      if (nc.rank_of(up.upper) != target) continue;
      current.factors.push_back(nc.element(up.factor));
      rec(up.upper, j + 1);
      current.factors.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Factorization> enumerate_reduced_decompositions(const NcPoset& nc) {
  return enumerate_factorizations(nc, std::vector<int>(nc.group().rank(), 1));
}

int r_lambda(const Group& g, const Element& w) {
  if (g.reflection_length(w) != 2) throw NotLengthTwo(g.name() + ": r_lambda needs l(w) = 2");
  int count = 0;
  for (const auto& r : g.reflections()) {
    if (g.is_reflection(g.multiply(g.invert(r), w))) ++count;
  }
  return count;
}

BigInt derived_degree(const BigInt& count, const InvariantData& data) {
  const int n = data.rank;
  const BigInt num = count * data.order;
  const BigInt den = factorial(n - 1) * power(data.coxeter_number(), n - 1);
  if (num % den != 0) {
    throw NonIntegerResult("derived degree " + num.str() + "/" + den.str() + " is not an integer");
  }
  return num / den;
}

std::vector<std::vector<BigInt>> submaximal_by_position(const NcPoset& nc) {
  const int n = nc.group().rank();
  if (n < 2) throw RankTooSmall("submaximal factorizations need rank >= 2");
  const auto strata = strata_codim2(nc);
  std::map<ClassId, std::size_t> class_index;
  for (std::size_t k = 0; k < strata.size(); ++k) class_index.emplace(strata[k].id, k);

  // maximal chains from the bottom to each element, and from each element to c
  const std::size_t size = nc.size();
  std::vector<BigInt> from_bottom(size, BigInt(0));
  std::vector<BigInt> to_top(size, BigInt(0));
  from_bottom[0] = 1;
  for (std::size_t v = 1; v < size; ++v) {
    for (const auto& iv : nc.below(v)) {
      if (nc.rank_of(iv.lower) + 1 == nc.rank_of(v)) from_bottom[v] += from_bottom[iv.lower];
    }
  }
  to_top[nc.top()] = 1;
  for (std::size_t v = size; v-- > 0;) {
    for (const auto& iv : nc.below(v)) {
      if (nc.rank_of(iv.lower) + 1 == nc.rank_of(v)) to_top[iv.lower] += to_top[v];
    }
  }

  std::vector<std::vector<BigInt>> counts(n - 1, std::vector<BigInt>(strata.size(), BigInt(0)));
  for (std::size_t v = 0; v < size; ++v) {
    for (const auto& iv : nc.below(v)) {
      const int low = nc.rank_of(iv.lower);
      if (low + 2 != nc.rank_of(v)) continue;
      const std::size_t k = class_index.at(nc.class_of(iv.factor));
      counts[low][k] += from_bottom[iv.lower] * to_top[v];
    }
  }
  return counts;
}

std::vector<LLRow> submaximal_by_class(const NcPoset& nc) {
  const Group& g = nc.group();
  const auto strata = strata_codim2(nc);
  const auto by_position = submaximal_by_position(nc);
  std::vector<LLRow> rows;
  for (std::size_t k = 0; k < strata.size(); ++k) {
    LLRow row;
    row.cls = strata[k];
    for (const auto& position : by_position) row.count_submax += position[k];
    const Element& w = row.cls.representative;
    row.r = r_lambda(g, w);
    row.u = derived_degree(row.count_submax, g);
    row.parabolic = g.parabolic_degrees(w);
    row.element_order = g.element_order(w);
    row.parabolic_reducible = g.parabolic_is_reducible(w);
    rows.push_back(std::move(row));
  }
  return rows;
}

Factorization hurwitz_move(const Group& g, const Factorization& f, std::size_t i, int direction) {
  if (i + 1 >= f.size()) {
    throw IndexOutOfRange("Hurwitz move at " + std::to_string(i) + " on " +
                          std::to_string(f.size()) + " factors");
  }
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  Factorization out = f;
  const Element& a = f.factors[i];
  const Element& b = f.factors[i + 1];
  if (direction == 1) {
    out.factors[i] = g.multiply(g.multiply(a, b), g.invert(a));
    out.factors[i + 1] = a;
  } else {
    out.factors[i] = b;
    out.factors[i + 1] = g.multiply(g.multiply(g.invert(b), a), b);
  }
  std::swap(out.composition[i], out.composition[i + 1]);
  return out;
}

std::size_t hurwitz_orbit(const Group& g, const Factorization& f, std::size_t cap) {
  std::unordered_set<std::string> seen{f.key()};
  std::deque<Factorization> queue{f};
  while (!queue.empty()) {
    const Factorization x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      for (const int dir : {1, -1}) {
        Factorization y = hurwitz_move(g, x, i, dir);
        if (!seen.insert(y.key()).second) continue;
        if (seen.size() > cap) {
          throw BudgetExceeded("Hurwitz orbit exceeds cap " + std::to_string(cap));
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::map<Factorization, std::uint64_t> concatenation_fibers(const NcPoset& nc) {
  const Group& g = nc.group();
  const int n = g.rank();
  if (n < 2) throw RankTooSmall("concatenation fibers need rank >= 2");
  std::map<Factorization, std::uint64_t> fibers;
  for (const auto& red : enumerate_reduced_decompositions(nc)) {
    Factorization target;
    target.factors.push_back(g.multiply(red.factors[0], red.factors[1]));
    target.composition.push_back(2);
    for (int i = 2; i < n; ++i) {
      target.factors.push_back(red.factors[i]);
      target.composition.push_back(1);
    }
    ++fibers[target];
  }
  return fibers;
}

}  // namespace ncfact
