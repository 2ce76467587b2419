#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ncfact/numeric.hpp"

namespace ncfact {

/// Exact element a + b*phi of Q(phi), phi^2 = phi + 1. Rational matrices are
/// the b = 0 subset, so the same type carries the crystallographic root data.
class QPhi {
 public:
  QPhi() = default;
  QPhi(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  QPhi(int a) : a_(a) {}

  static QPhi phi() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& phi_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Galois conjugate: phi -> 1 - phi.
  QPhi conjugate() const { return {a_ + b_, -b_}; }
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  QPhi inverse() const;

  friend QPhi operator+(const QPhi& x, const QPhi& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QPhi operator-(const QPhi& x, const QPhi& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QPhi operator-(const QPhi& x) { return {-x.a_, -x.b_}; }
  friend QPhi operator*(const QPhi& x, const QPhi& y) {
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  friend QPhi operator/(const QPhi& x, const QPhi& y) { return x * y.inverse(); }

  friend bool operator==(const QPhi& x, const QPhi& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  // Lexicographic on (a, b); a container key, not the real ordering.
  friend bool operator<(const QPhi& x, const QPhi& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  std::string str() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

using QPhiVector = std::vector<QPhi>;
using QPhiMatrix = std::vector<QPhiVector>;

/// Rank over Q(phi) by plain Gaussian elimination (exact).
int matrix_rank(QPhiMatrix m);

}  // namespace ncfact
