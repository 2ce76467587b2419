#include "ncfact/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ncfact/errors.hpp"
#include "ncfact/root_data.hpp"

namespace ncfact {

namespace detail {
struct GroupCaches {
  std::once_flag length_once;
  std::unique_ptr<LengthTable> lengths;
  std::unordered_set<Element> reflection_set;

  std::mutex class_mutex;
  std::vector<std::int32_t> class_label;  // per length-table id, -1 = not yet known
  std::vector<ClassId> class_ids;
};
}  // namespace detail

std::string ClassId::short_hex() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : canonical_) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kDigits[h & 15];
  return out;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// w e_i = zeta^{colors[i]} e_{perm[i]}; point i*m + a stands for zeta^a e_i.
Element make_monomial(const std::vector<int>& perm, const std::vector<int>& colors, int m) {
  const int coords = static_cast<int>(perm.size());
  std::string images(static_cast<std::size_t>(coords * m), '\0');
  for (int i = 0; i < coords; ++i) {
    for (int a = 0; a < m; ++a) {
      images[i * m + a] = static_cast<char>(perm[i] * m + mod(a + colors[i], m));
    }
  }
  return Element(std::move(images));
}

std::vector<int> iota_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// e_i -> zeta^a e_j, e_j -> zeta^{-a} e_i.
Element transposition(int coords, int m, int i, int j, int a) {
  auto perm = iota_perm(coords);
  std::vector<int> colors(coords, 0);
  std::swap(perm[i], perm[j]);
  colors[i] = mod(a, m);
  colors[j] = mod(-a, m);
  return make_monomial(perm, colors, m);
}

Element diagonal(int coords, int m, int i, int power) {
  std::vector<int> colors(coords, 0);
  colors[i] = mod(power, m);
  return make_monomial(iota_perm(coords), colors, m);
}

Element product(std::span<const Element> factors) {
  Element acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = compose(acc, factors[i]);
  return acc;
}

std::vector<Element> conjugation_closure(std::span<const Element> generators,
                                         std::vector<Element> seeds) {
  std::set<Element> seen(seeds.begin(), seeds.end());
  std::deque<Element> queue(seeds.begin(), seeds.end());
  std::vector<Element> inverses;
  for (const auto& g : generators) inverses.push_back(inverse(g));
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Element y = compose(compose(generators[k], x), inverses[k]);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};  // sorted by serialization
}

std::vector<Element> subgroup_closure(std::span<const Element> generators, const Element& id) {
  std::set<Element> seen{id};
  std::deque<Element> queue{id};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Element y = compose(g, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Group::Group(GroupSpec spec, EnumerationBudget budget)
    : spec_(spec),
      budget_(budget),
      invariants_(invariant_data(spec)),
      caches_(std::make_unique<detail::GroupCaches>()) {
  const int n = spec_.rank();
  const int m = spec_.parameter();
  switch (spec_.family()) {
    case Family::A: {
      domain_ = ScalarDomain::Permutation;
      const int coords = n + 1;
      realization_ = detail::MonomialRealization{coords, 1};
      identity_ = Element::identity(coords);
      for (int i = 0; i < n; ++i) generators_.push_back(transposition(coords, 1, i, i + 1, 0));
      std::vector<int> cycle(coords);
      for (int i = 0; i < coords; ++i) cycle[i] = (i + 1) % coords;
      coxeter_ = make_monomial(cycle, std::vector<int>(coords, 0), 1);
      break;
    }
    case Family::B:
    case Family::GD1N: {
      domain_ = ScalarDomain::Monomial;
      realization_ = detail::MonomialRealization{n, m};
      identity_ = Element::identity(static_cast<std::size_t>(n * m));
      generators_.push_back(diagonal(n, m, 0, 1));
      for (int i = 0; i + 1 < n; ++i) generators_.push_back(transposition(n, m, i, i + 1, 0));
      // colored n-cycle, single color 1 on the closing edge
      std::vector<int> cycle(n);
      std::vector<int> colors(n, 0);
      for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
      colors[n - 1] = 1;
      coxeter_ = make_monomial(cycle, colors, m);
      break;
    }
    case Family::D:
    case Family::I2:
    case Family::GEEN: {
      domain_ = ScalarDomain::Monomial;
      realization_ = detail::MonomialRealization{n, m};
      identity_ = Element::identity(static_cast<std::size_t>(n * m));
      generators_.push_back(transposition(n, m, 0, 1, 0));
      generators_.push_back(transposition(n, m, 0, 1, 1));
      for (int i = 1; i + 1 < n; ++i) generators_.push_back(transposition(n, m, i, i + 1, 0));
      coxeter_ = product(generators_);
      break;
    }
    case Family::H3:
    case Family::H4:
    case Family::F4:
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const bool golden = spec_.family() == Family::H3 || spec_.family() == Family::H4;
      domain_ = golden ? ScalarDomain::QuadraticFieldMatrix : ScalarDomain::RationalMatrix;
      const QPhiMatrix cartan = cartan_matrix(spec_.family());
      QPhiMatrix roots = generate_roots(cartan);
      std::map<QPhiVector, int> position;
      for (std::size_t k = 0; k < roots.size(); ++k) position.emplace(roots[k], static_cast<int>(k));
      identity_ = Element::identity(roots.size());
      for (int i = 0; i < n; ++i) {
        std::string images(roots.size(), '\0');
        for (std::size_t k = 0; k < roots.size(); ++k) {
          images[k] = static_cast<char>(position.at(simple_reflection(cartan, i, roots[k])));
        }
        generators_.emplace_back(std::move(images));
      }
      coxeter_ = product(generators_);
      realization_ = detail::RootRealization{std::move(roots)};
      break;
    }
  }

  std::vector<Element> seeds;
  for (const auto& g : generators_) {
    for (Element p = g; !p.is_identity(); p = compose(p, g)) seeds.push_back(p);
  }
  reflections_ = conjugation_closure(generators_, std::move(seeds));
  caches_->reflection_set.insert(reflections_.begin(), reflections_.end());
}

Group::~Group() = default;
Group::Group(Group&&) noexcept = default;
Group& Group::operator=(Group&&) noexcept = default;

std::shared_ptr<const Group> build_group(const GroupSpec& spec, EnumerationBudget budget) {
  return std::make_shared<const Group>(spec, budget);
}

bool Group::is_reflection(const Element& w) const {
  return caches_->reflection_set.contains(w);
}

int Group::element_order(const Element& w) const {
  int k = 1;
  for (Element p = w; !p.is_identity(); p = compose(p, w)) ++k;
  return k;
}

std::string Group::serialize(const Element& w) const {
  std::string out;
  out.push_back(static_cast<char>(spec_.family()));
  out.push_back(static_cast<char>(spec_.rank()));
  out.push_back(static_cast<char>((spec_.parameter() >> 8) & 0xff));
  out.push_back(static_cast<char>(spec_.parameter() & 0xff));
  return out + w.bytes();
}

Group::Monomial Group::to_monomial(const Element& w) const {
  const auto* mono = std::get_if<detail::MonomialRealization>(&realization_);
  if (mono == nullptr) throw std::logic_error("to_monomial on a root-system group");
  Monomial out;
  for (int i = 0; i < mono->coords; ++i) {
    const int image = w[static_cast<std::size_t>(i * mono->modulus)];
    out.perm.push_back(image / mono->modulus);
    out.colors.push_back(image % mono->modulus);
  }
  return out;
}

QPhiMatrix Group::to_matrix(const Element& w) const {
  const auto* root = std::get_if<detail::RootRealization>(&realization_);
  if (root == nullptr) throw std::logic_error("to_matrix on a monomial group");
  const int n = rank();
  QPhiMatrix m(n, QPhiVector(n));
  for (int j = 0; j < n; ++j) {
    const QPhiVector& image = root->roots[w[static_cast<std::size_t>(j)]];
    for (int i = 0; i < n; ++i) m[i][j] = image[i];
  }
  return m;
}

namespace {

// Cycles of a monomial element with their color sums; for zero-sum cycles
// also the exponent of each coordinate in the fixed vector.
struct CycleData {
  std::vector<int> cycle_of;
  std::vector<bool> zero_sum;  // per cycle
  std::vector<int> exponent;   // per coordinate, meaningful on zero-sum cycles
};

CycleData analyze_cycles(const Group::Monomial& w, int m) {
  const int coords = static_cast<int>(w.perm.size());
  CycleData d;
  d.cycle_of.assign(coords, -1);
  d.exponent.assign(coords, 0);
  for (int start = 0; start < coords; ++start) {
    if (d.cycle_of[start] >= 0) continue;
    const int id = static_cast<int>(d.zero_sum.size());
    int sum = 0;
    int exp = 0;
    for (int i = start; d.cycle_of[i] < 0; i = w.perm[i]) {
      d.cycle_of[i] = id;
      d.exponent[i] = exp;
      exp = mod(exp + w.colors[i], m);
      sum = mod(sum + w.colors[i], m);
    }
    d.zero_sum.push_back(sum == 0);
  }
  return d;
}

}  // namespace

int Group::fixed_space_codim(const Element& w) const {
  if (const auto* mono = std::get_if<detail::MonomialRealization>(&realization_)) {
    const CycleData d = analyze_cycles(to_monomial(w), mono->modulus);
    const auto fixed = std::count(d.zero_sum.begin(), d.zero_sum.end(), true);
    return mono->coords - static_cast<int>(fixed);
  }
  QPhiMatrix m = to_matrix(w);
  for (int i = 0; i < rank(); ++i) m[i][i] = m[i][i] - QPhi(1);
  return matrix_rank(std::move(m));
}

bool Group::enumerable() const {
  switch (spec_.family()) {
    case Family::E8: return false;
    case Family::E7: return budget_.allow_e7 && order() <= budget_.max_order;
    default: return order() <= budget_.max_order;
  }
}

const LengthTable& Group::length_table() const {
  std::call_once(caches_->length_once, [this] {
    if (!enumerable()) {
      std::string why = name() + " has |W| = " + to_decimal(order());
      if (spec_.family() == Family::E8) {
        why += "; E8 is closed-form only";
      } else if (spec_.family() == Family::E7 && !budget_.allow_e7) {
        why += "; E7 enumeration needs explicit opt-in";
      } else {
        why += ", above the enumeration budget " + std::to_string(budget_.max_order);
      }
      throw BudgetExceeded(why);
    }
    const std::size_t degree = point_count();
    auto table = std::make_unique<LengthTable>(degree);
    table->index.reserve(static_cast<std::size_t>(order()));
    table->index.insert(identity_.bytes());
    table->length.push_back(0);
    table->layer_start = {0, 1};
    std::string scratch(degree, '\0');
    for (std::uint8_t k = 0;; ++k) {
      const std::size_t begin = table->layer_start[k];
      const std::size_t end = table->layer_start[k + 1];
      if (begin == end) break;
      for (std::size_t id = begin; id < end; ++id) {
        for (const auto& r : reflections_) {
          // re-fetch: insert may reallocate the arena
          compose_into(r.bytes(), table->index.at(static_cast<std::uint32_t>(id)), scratch.data());
          if (table->index.insert(scratch).second) table->length.push_back(k + 1);
        }
      }
      table->layer_start.push_back(table->index.size());
    }
    table->layer_start.pop_back();
    caches_->lengths = std::move(table);
    caches_->class_label.assign(caches_->lengths->index.size(), -1);
  });
  return *caches_->lengths;
}

std::optional<int> Group::reflection_length(std::string_view bytes) const {
  const LengthTable& t = length_table();
  const auto id = t.index.find(bytes);
  if (!id) return std::nullopt;
  return t.length[*id];
}

int Group::reflection_length(const Element& w) const {
  const auto len = reflection_length(std::string_view(w.bytes()));
  if (!len) throw std::invalid_argument("element does not belong to " + name());
  return *len;
}

bool Group::absolute_leq(const Element& u, const Element& v) const {
  return reflection_length(u) + reflection_length(compose(inverse(u), v)) ==
         reflection_length(v);
}

int Group::class_label(std::uint32_t id) const {
  auto& c = *caches_;
  if (c.class_label[id] >= 0) return c.class_label[id];
  const LengthTable& t = *c.lengths;
  const auto label = static_cast<std::int32_t>(c.class_ids.size());
  const std::size_t degree = point_count();
  std::vector<std::string> inverses;
  for (const auto& g : generators_) inverses.push_back(inverse(g).bytes());
  std::string tmp(degree, '\0');
  std::string conj(degree, '\0');
  std::deque<std::uint32_t> queue{id};
  c.class_label[id] = label;
  std::string least(t.index.at(id));
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      compose_into(t.index.at(x), inverses[k], tmp.data());
      compose_into(generators_[k].bytes(), tmp, conj.data());
      const std::uint32_t y = *t.index.find(conj);
      if (c.class_label[y] >= 0) continue;
      c.class_label[y] = label;
      if (conj < least) least = conj;
      queue.push_back(y);
    }
  }
  c.class_ids.emplace_back(std::move(least));
  return label;
}

ClassId Group::conjugacy_class_id(const Element& w) const {
  const LengthTable& t = length_table();
  const auto id = t.index.find(w.bytes());
  if (!id) throw std::invalid_argument("element does not belong to " + name());
  std::lock_guard lock(caches_->class_mutex);
  return caches_->class_ids[class_label(*id)];
}

bool Group::hyperplane_contains_fix(const Element& reflection, const Element& w) const {
  if (const auto* mono = std::get_if<detail::MonomialRealization>(&realization_)) {
    const int m = mono->modulus;
    const CycleData d = analyze_cycles(to_monomial(w), m);
    const Monomial r = to_monomial(reflection);
    int moved_i = -1;
    int moved_j = -1;
    for (int i = 0; i < mono->coords; ++i) {
      if (r.perm[i] != i) (moved_i < 0 ? moved_i : moved_j) = i;
    }
    if (moved_i < 0) {
      // diagonal reflection: hyperplane x_i = 0
      const int i = static_cast<int>(
          std::find_if(r.colors.begin(), r.colors.end(), [](int c) { return c != 0; }) -
          r.colors.begin());
      return !d.zero_sum[d.cycle_of[i]];
    }
    // r e_i = zeta^a e_j: hyperplane x_j = zeta^a x_i
    const int i = moved_i;
    const int j = moved_j;
    const int a = r.colors[i];
    const bool zi = d.zero_sum[d.cycle_of[i]];
    const bool zj = d.zero_sum[d.cycle_of[j]];
    if (!zi && !zj) return true;
    if (zi != zj) return false;
    if (d.cycle_of[i] != d.cycle_of[j]) return false;
    return mod(d.exponent[j] - d.exponent[i] - a, m) == 0;
  }
  // Real case: Fix(w) lies in beta-perp iff beta is in the image of w - 1.
  const auto& roots = std::get<detail::RootRealization>(realization_).roots;
  const int n = rank();
  std::size_t beta = roots.size();
  for (std::size_t k = 0; k < roots.size() && beta == roots.size(); ++k) {
    const QPhiVector& image = roots[reflection[k]];
    bool negated = true;
    for (int i = 0; i < n && negated; ++i) negated = image[i] == -roots[k][i];
    if (negated) beta = k;
  }
  QPhiMatrix m = to_matrix(w);
  for (int i = 0; i < n; ++i) m[i][i] = m[i][i] - QPhi(1);
  const int base = matrix_rank(m);
  for (int i = 0; i < n; ++i) m[i].push_back(roots[beta][i]);
  return matrix_rank(std::move(m)) == base;
}

std::vector<Element> Group::reflections_fixing(const Element& w) const {
  std::vector<Element> out;
  for (const auto& r : reflections_) {
    if (hyperplane_contains_fix(r, w)) out.push_back(r);
  }
  return out;
}

std::pair<std::uint64_t, std::size_t> Group::parabolic_subgroup_size(const Element& w) const {
  const auto refl = reflections_fixing(w);
  return {subgroup_closure(refl, identity_).size(), refl.size()};
}

bool Group::parabolic_is_reducible(const Element& w) const {
  const auto refl = reflections_fixing(w);
  if (refl.empty()) return false;
  // connected components of the non-commutation graph
  std::vector<int> comp(refl.size(), -1);
  int components = 0;
  for (std::size_t s = 0; s < refl.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = components;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < refl.size(); ++y) {
        if (comp[y] >= 0) continue;
        if (compose(refl[x], refl[y]) != compose(refl[y], refl[x])) {
          comp[y] = components;
          queue.push_back(y);
        }
      }
    }
    ++components;
  }
  return components > 1;
}

ParabolicDegrees Group::parabolic_degrees(const Element& w) const {
  if (reflection_length(w) != 2) throw NotLengthTwo(name() + ": element is not of length 2");
  if (!absolute_leq(w, coxeter_)) throw NotInNC(name() + ": element is not below c");
  const auto [order, nrefl] = parabolic_subgroup_size(w);
  // d1 + d2 = N_r + 2, d1 * d2 = N'
  const auto sum = static_cast<std::int64_t>(nrefl) + 2;
  const auto prod = static_cast<std::int64_t>(order);
  const std::int64_t disc = sum * sum - 4 * prod;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (disc < 0 || root * root != disc || (sum - root) % 2 != 0) {
    throw NonIntegerResult(name() + ": parabolic subgroup order/reflection count inconsistent");
  }
  return {static_cast<int>((sum - root) / 2), static_cast<int>((sum + root) / 2)};
}

}  // namespace ncfact
