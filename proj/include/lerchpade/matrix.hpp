#pragma once

// Exact determinants over integral domains: fraction-free Bareiss
// elimination for the general case and the Leibniz permutation expansion
// for small matrices over rings without exact division (EpsPoly).

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "lerchpade/errors.hpp"
#include "lerchpade/poly.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
void check_square(const Matrix<T>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidInput("determinant of a non-square matrix");
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  if (m.empty()) return m;
  Matrix<T> t(m[0].size(), std::vector<T>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

/// Fraction-free elimination. T needs +, -, * and exact_div(T, T).
template <class T>
T bareiss_det(Matrix<T> a) {
  check_square(a);
  const std::size_t n = a.size();
  if (n == 0) return T(Rat(1));
  bool negate = false;
  T prev(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::coeff_is_zero(a[k][k])) {
      std::size_t p = k + 1;
      while (p < n && detail::coeff_is_zero(a[p][k])) ++p;
      if (p == n) return T(Rat(0));
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return negate ? -d : d;
}

/// Parity of a permutation given as an index vector.
inline bool odd_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  bool odd = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) odd = !odd;
  }
  return odd;
}

/// Sum over permutations; only ring operations on T are used.
template <class T>
T leibniz_det(const Matrix<T>& a) {
  check_square(a);
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(Rat(0));
  do {
    T term(Rat(1));
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      const T& e = a[i][perm[i]];
      if (detail::coeff_is_zero(e)) zero = true;
      else term = term * e;
    }
    if (zero) continue;
    if (odd_permutation(perm)) total = total - term;
    else total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Cofactor expansion along the first row; exponential, meant as an oracle.
template <class T>
T laplace_det(const Matrix<T>& a) {
  check_square(a);
  const std::size_t n = a.size();
  if (n == 0) return T(Rat(1));
  if (n == 1) return a[0][0];
  T total(Rat(0));
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<T> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(std::move(row));
    }
    T term = a[0][c] * laplace_det(minor);
    if (c % 2 == 0) total = total + term;
    else total = total - term;
  }
  return total;
}

}  // namespace lerchpade
