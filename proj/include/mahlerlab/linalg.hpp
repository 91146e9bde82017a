#pragma once

#include <optional>
#include <vector>

#include "mahlerlab/cyclo.hpp"

namespace mahlerlab {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const CycNum& x) { return x.is_zero(); }

template <class T>
using Matrix = std::vector<std::vector<T>>;

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<size_t> rref(Matrix<T>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    T inv = T(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) {
      if (!is_zero(m[r][j])) m[r][j] = m[r][j] * inv;
    }
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      T f = m[i][c];
      for (size_t j = c; j < cols; ++j) {
        if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
  return rref(m).size();
}

// basis of {v : m v = 0}, m with `cols` columns
template <class T>
Matrix<T> nullspace(Matrix<T> m, size_t cols) {
  Matrix<T> out;
  if (m.empty()) {
    for (size_t j = 0; j < cols; ++j) {
      std::vector<T> v(cols, T(0));
      v[j] = T(1);
      out.push_back(v);
    }
    return out;
  }
  auto piv = rref(m);
  std::vector<char> is_piv(cols, 0);
  for (size_t p : piv) is_piv[p] = 1;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    out.push_back(v);
  }
  return out;
}

// coefficients c with sum_k c_k vecs[k] = target, if target is in the span
template <class T>
std::optional<std::vector<T>> solve_in_span(const Matrix<T>& vecs, const std::vector<T>& target) {
  size_t k = vecs.size(), n = target.size();
  Matrix<T> aug(n, std::vector<T>(k + 1, T(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = vecs[j][i];
    aug[i][k] = target[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  std::vector<T> c(k, T(0));
  for (size_t i = 0; i < piv.size(); ++i) c[piv[i]] = aug[i][k];
  return c;
}

}  // namespace mahlerlab
