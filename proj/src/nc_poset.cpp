#include "ncfact/nc_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncfact/errors.hpp"

namespace ncfact {

NcPoset::NcPoset(std::shared_ptr<const Group> group, std::vector<Element> elements,
                 std::vector<int> ranks, std::vector<std::vector<Interval>> below,
                 std::vector<ClassId> class_of)
    : group_(std::move(group)),
      elements_(std::move(elements)),
      ranks_(std::move(ranks)),
      below_(std::move(below)),
      class_of_(std::move(class_of)) {
  by_rank_.resize(static_cast<std::size_t>(ranks_.back()) + 1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    by_rank_[ranks_[i]].push_back(static_cast<std::uint32_t>(i));
  }
  words_ = (elements_.size() + 63) / 64;
  leq_bits_.assign(words_ * elements_.size(), 0);
  auto set = [&](std::size_t u, std::size_t v) { leq_bits_[u * words_ + v / 64] |= 1ULL << (v % 64); };
  for (std::size_t v = 0; v < elements_.size(); ++v) {
    set(v, v);
    for (const auto& iv : below_[v]) set(iv.lower, v);
  }
}

std::span<const std::uint32_t> NcPoset::at_rank(int k) const {
  if (k < 0 || k >= static_cast<int>(by_rank_.size())) return {};
  return by_rank_[k];
}

std::optional<std::size_t> NcPoset::find(const Element& w) const {
  // elements are sorted by (rank, bytes)
  const auto len = group_->reflection_length(std::string_view(w.bytes()));
  if (!len || *len >= static_cast<int>(by_rank_.size())) return std::nullopt;
  const auto& level = by_rank_[*len];
  const auto it = std::lower_bound(level.begin(), level.end(), w,
                                   [&](std::uint32_t i, const Element& x) { return elements_[i] < x; });
  if (it == level.end() || elements_[*it] != w) return std::nullopt;
  return *it;
}

std::size_t NcPoset::index_of(const Element& w) const {
  const auto i = find(w);
  if (!i) throw NotInNC(group_->name() + ": element is not below the Coxeter element");
  return *i;
}

NcPoset build_nc(std::shared_ptr<const Group> group) {
  const Group& g = *group;
  const LengthTable& table = g.length_table();
  const int n = g.rank();
  const std::size_t degree = g.point_count();
  const std::string& c = g.coxeter().bytes();

  std::string inv(degree, '\0');
  std::string prod(degree, '\0');
  std::vector<std::pair<int, std::uint32_t>> members;  // (rank, W-id)
  for (std::uint32_t id = 0; id < table.index.size(); ++id) {
    const int len = table.length[id];
    if (len > n) continue;
    inverse_into(table.index.at(id), inv.data());
    compose_into(inv, c, prod.data());
    if (len + table.length[*table.index.find(prod)] == n) members.emplace_back(len, id);
  }
  std::sort(members.begin(), members.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return table.index.at(x.second) < table.index.at(y.second);
  });

  const std::size_t size = members.size();
  std::vector<Element> elements;
  std::vector<int> ranks;
  std::map<std::uint32_t, std::uint32_t> nc_of_wid;
  for (std::size_t i = 0; i < size; ++i) {
    elements.emplace_back(std::string(table.index.at(members[i].second)));
    ranks.push_back(members[i].first);
    nc_of_wid.emplace(members[i].second, static_cast<std::uint32_t>(i));
  }

  std::vector<std::vector<Interval>> below(size);
  for (std::size_t u = 0; u < size; ++u) {
    inverse_into(elements[u].bytes(), inv.data());
    for (std::size_t v = u + 1; v < size; ++v) {
      if (ranks[v] <= ranks[u]) continue;
      compose_into(inv, elements[v].bytes(), prod.data());
      const std::uint32_t wid = *table.index.find(prod);
      if (table.length[wid] != ranks[v] - ranks[u]) continue;
      // a factor of a block factorization of c is itself below c
      const auto it = nc_of_wid.find(wid);
      if (it == nc_of_wid.end()) throw std::logic_error("factor of an NC interval is outside NC");
      below[v].push_back({static_cast<std::uint32_t>(u), it->second});
    }
  }

  std::vector<ClassId> class_of;
  class_of.reserve(size);
  for (const auto& e : elements) class_of.push_back(g.conjugacy_class_id(e));

  return NcPoset(std::move(group), std::move(elements), std::move(ranks), std::move(below),
                 std::move(class_of));
}

BigInt count_multichains(const NcPoset& nc, int p) {
  if (p < 1) throw std::invalid_argument("count_multichains needs p >= 1");
  const std::size_t size = nc.size();
  std::vector<BigInt> f(size, BigInt(1));
  for (int step = 1; step < p; ++step) {
    std::vector<BigInt> next(size, BigInt(0));
    for (std::size_t u = 0; u < size; ++u) {
      for (std::size_t v = u; v < size; ++v) {
        if (nc.leq(u, v)) next[v] += f[u];
      }
    }
    f = std::move(next);
  }
  return std::accumulate(f.begin(), f.end(), BigInt(0));
}

BigInt fuss_catalan(const InvariantData& data, int p) {
  if (p < 0) throw std::invalid_argument("fuss_catalan needs p >= 0");
  const int h = data.coxeter_number();
  Rational r = 1;
  for (const int d : data.degrees) r *= Rational(d + p * h, d);
  if (boost::multiprecision::denominator(r) != 1) {
    throw NonIntegerResult("Fuss-Catalan product is not an integer: " + to_fraction_string(r));
  }
  return boost::multiprecision::numerator(r);
}

std::vector<NcClass> strata_codim2(const NcPoset& nc) {
  std::map<ClassId, NcClass> classes;
  for (const std::uint32_t i : nc.at_rank(2)) {
    auto [it, inserted] = classes.try_emplace(nc.class_of(i));
    NcClass& cls = it->second;
    if (inserted) {
      cls.id = nc.class_of(i);
      cls.rank = 2;
      cls.representative = nc.element(i);  // first in NC order is the least
    }
    ++cls.size_in_nc;
  }
  std::vector<NcClass> out;
  for (auto& [id, cls] : classes) out.push_back(std::move(cls));
  std::stable_sort(out.begin(), out.end(), [](const NcClass& a, const NcClass& b) {
    if (a.size_in_nc != b.size_in_nc) return a.size_in_nc < b.size_in_nc;
    return a.id < b.id;
  });
  return out;
}

}  // namespace ncfact
