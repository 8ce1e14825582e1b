#pragma once

// Polynomials in a collision variable eps, truncated above a fixed degree.
// Used to measure the order of vanishing of an expression along
// alpha_{i2} = alpha_{i1} + eps without any multivariate algebra.

#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <vector>

#include "lerchpade/rat.hpp"

namespace lerchpade {

class EpsPoly {
 public:
  static constexpr int kUnbounded = INT_MAX;

  EpsPoly() = default;
  EpsPoly(const Rat& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }
  EpsPoly(std::vector<Rat> coeffs, int max_degree) : c_(std::move(coeffs)), max_degree_(max_degree) {
    normalize();
  }

  /// a + eps truncated at max_degree.
  static EpsPoly shifted_by_eps(const Rat& a, int max_degree) {
    return EpsPoly({a, Rat(1)}, max_degree);
  }

  int max_degree() const { return max_degree_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rat(0);
  }
  bool is_zero() const { return c_.empty(); }

  /// Smallest power of eps with a nonzero coefficient, or nothing when all
  /// stored coefficients up to the truncation bound vanish.
  std::optional<int> valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return static_cast<int>(k);
    return std::nullopt;
  }

  EpsPoly operator-() const {
    EpsPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  EpsPoly& operator+=(const EpsPoly& o) {
    max_degree_ = std::min(max_degree_, o.max_degree_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  EpsPoly& operator-=(const EpsPoly& o) { return *this += -o; }

  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }

  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    const int bound = std::min(a.max_degree_, b.max_degree_);
    if (a.is_zero() || b.is_zero()) return EpsPoly({}, bound);
    std::size_t len = a.c_.size() + b.c_.size() - 1;
    if (bound != kUnbounded) len = std::min(len, static_cast<std::size_t>(bound) + 1);
    std::vector<Rat> r(len);
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return EpsPoly(std::move(r), bound);
  }
  EpsPoly& operator*=(const EpsPoly& o) { return *this = *this * o; }

  /// Division by a nonzero rational constant.
  friend EpsPoly operator/(EpsPoly a, const Rat& d) {
    for (auto& x : a.c_) x /= d;
    return a;
  }

  /// Value at eps = e (ignores the truncation, so only meaningful for exact inputs).
  Rat eval(const Rat& e) const {
    Rat acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * e + c_[k];
    return acc;
  }

  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const EpsPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.c_.size(); ++k) {
      if (p.c_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << p.c_[k] << ")";
      if (k >= 1) os << "*eps^" << k;
    }
    if (p.max_degree_ != kUnbounded) os << " + O(eps^" << p.max_degree_ + 1 << ")";
    return os;
  }

 private:
  void normalize() {
    if (max_degree_ != kUnbounded && c_.size() > static_cast<std::size_t>(max_degree_) + 1)
      c_.resize(static_cast<std::size_t>(max_degree_) + 1);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
  int max_degree_ = kUnbounded;
};

inline bool is_zero(const EpsPoly& p) { return p.is_zero(); }

}  // namespace lerchpade
