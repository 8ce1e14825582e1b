#pragma once

// Laurent tails sum_{k >= k0} c_k z^{-k} with exact coefficients, stored up
// to a truncation order.

#include <optional>
#include <vector>

#include "lerchpade/errors.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int start_order, std::vector<Rat> coeffs) : k0_(start_order), c_(std::move(coeffs)) {
    if (start_order < 0) throw InvalidInput("series start order must be nonnegative");
  }

  int start_order() const { return k0_; }
  /// Largest k whose coefficient of z^{-k} is stored.
  int truncation_order() const { return k0_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Coefficient of z^{-k}; throws beyond the truncation order.
  const Rat& coeff(int k) const {
    if (k < k0_ || k > truncation_order())
      throw InvalidInput("series coefficient outside the stored range");
    return c_[static_cast<std::size_t>(k - k0_)];
  }

  /// Smallest k with nonzero coefficient of z^{-k}; nothing if every stored
  /// coefficient vanishes (the order lies beyond the truncation).
  std::optional<int> ord_inf() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return k0_ + static_cast<int>(i);
    return std::nullopt;
  }

 private:
  int k0_ = 0;
  std::vector<Rat> c_;
};

}  // namespace lerchpade
