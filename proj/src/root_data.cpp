#include "ncfact/root_data.hpp"

#include <deque>
#include <map>

#include "ncfact/errors.hpp"

namespace ncfact {

namespace {

QPhiMatrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  QPhiMatrix m;
  for (const auto& row : rows) {
    QPhiVector r;
    for (const int x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

// Simply laced E_n, Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
QPhiMatrix cartan_e(int n) {
  QPhiMatrix m(n, QPhiVector(n, QPhi(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto bond = [&](int a, int b) {
    m[a - 1][b - 1] = -1;
    m[b - 1][a - 1] = -1;
  };
  bond(1, 3);
  bond(3, 4);
  bond(2, 4);
  for (int k = 4; k < n; ++k) bond(k, k + 1);
  return m;
}

}  // namespace

QPhiMatrix cartan_matrix(Family family) {
  const QPhi mphi = -QPhi::phi();
  switch (family) {
    case Family::H3:
      return {{2, mphi, 0}, {mphi, 2, -1}, {0, -1, 2}};
    case Family::H4:
      return {{2, mphi, 0, 0}, {mphi, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    case Family::F4:
      return from_ints({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    case Family::E6: return cartan_e(6);
    case Family::E7: return cartan_e(7);
    case Family::E8: return cartan_e(8);
    default: throw UnsupportedGroup("no root data for a monomial family");
  }
}

QPhiVector simple_reflection(const QPhiMatrix& cartan, int i, const QPhiVector& v) {
  QPhi pairing;
  for (std::size_t j = 0; j < v.size(); ++j) pairing = pairing + cartan[i][j] * v[j];
  QPhiVector out = v;
  out[i] = out[i] - pairing;
  return out;
}

QPhiMatrix generate_roots(const QPhiMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  QPhiMatrix roots;
  std::map<QPhiVector, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    QPhiVector e(n, QPhi(0));
    e[i] = 1;
    seen.emplace(e, i);
    roots.push_back(std::move(e));
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      QPhiVector image = simple_reflection(cartan, i, roots[k]);
      if (seen.contains(image)) continue;
      const int id = static_cast<int>(roots.size());
      seen.emplace(image, id);
      roots.push_back(std::move(image));
      queue.push_back(id);
    }
  }
  return roots;
}

}  // namespace ncfact
