#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "adlv/rational.hpp"

namespace adlv {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rat dot(const Vec& a, const Vec& b) {
  Rat r(0);
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

inline bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  Mat r(n, zero_vec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (!a[i][l].is_zero())
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline Mat identity_mat(size_t n) {
  Mat m(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

// Solve a*x = b by Gauss-Jordan. Returns false if the system is inconsistent
// or underdetermined; a square nonsingular system always succeeds.
inline bool solve_linear(Mat a, Vec b, Vec& x) {
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return false;  // inconsistent
  x = zero_vec(cols);
  std::vector<bool> pivoted(cols, false);
  for (size_t i = 0; i < r; ++i) {
    x[pivot_col[i]] = b[i];
    pivoted[pivot_col[i]] = true;
  }
  // reject underdetermined systems whose free columns interact with pivots
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (!pivoted[j] && !a[i][j].is_zero()) return false;
  return true;
}

// True iff v lies in the span of the given vectors.
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero_vec(v)) return true;
  if (basis.empty()) return false;
  size_t dim = v.size();
  Mat a(dim, zero_vec(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
  Vec x;
  return solve_linear(a, v, x);
}

inline Mat mat_inverse(const Mat& m) {
  size_t n = m.size();
  Mat a = m, inv = identity_mat(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat f = Rat(1) / a[c][c];
    for (size_t j = 0; j < n; ++j) { a[c][j] *= f; inv[c][j] *= f; }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rat g = a[i][c];
      for (size_t j = 0; j < n; ++j) { a[i][j] -= g * a[c][j]; inv[i][j] -= g * inv[c][j]; }
    }
  }
  return inv;
}

struct VecHash {
  size_t operator()(const Vec& v) const {
    size_t h = 1469598103u;
    RatHash rh;
    for (const auto& x : v) h = (h ^ rh(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace adlv
