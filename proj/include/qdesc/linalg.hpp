#pragma once

#include <utility>
#include <vector>

#include "qdesc/bigint.hpp"
#include "qdesc/error.hpp"
#include "qdesc/upoly.hpp"

namespace qdesc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination over an integral domain (exact_div must be exact).
template <class T>
T det_bareiss(Matrix<T> a, const T& zero) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return one_of(zero);
  T prev = one_of(zero);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(a[k][k])) {
      int s = k + 1;
      while (s < n && is_zero(a[s][k])) ++s;
      if (s == n) return zero;
      std::swap(a[k], a[s]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = zero;
    }
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return negate ? zero - d : d;
}

// Division-free characteristic polynomial det(tI - A) (Berkowitz), coefficients high to low.
template <class T>
std::vector<T> charpoly_berkowitz(const Matrix<T>& a, const T& zero) {
  const int n = static_cast<int>(a.size());
  std::vector<T> c{one_of(zero)};
  for (int k = 0; k < n; ++k) {
    // leading principal block of size k, border row R = a[k][0..k), column S = a[0..k)[k]
    std::vector<T> w;  // w_t = R M^t S
    std::vector<T> v(k);
    for (int i = 0; i < k; ++i) v[i] = a[i][k];
    for (int t = 0; t < k; ++t) {
      T s = zero;
      for (int i = 0; i < k; ++i) s += a[k][i] * v[i];
      w.push_back(s);
      if (t + 1 < k) {
        std::vector<T> nv(k, zero);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) nv[i] += a[i][j] * v[j];
        v = std::move(nv);
      }
    }
    std::vector<T> d(k + 2, zero);
    for (int m = 0; m <= k + 1; ++m) {
      T val = m <= k ? c[m] : zero;
      if (m >= 1) val -= a[k][k] * c[m - 1];
      for (int j = 0; j + 2 <= m; ++j) val -= c[j] * w[m - 2 - j];
      d[m] = val;
    }
    c = std::move(d);
  }
  return c;
}

// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int s = r;
    while (s < rows && is_zero(a[s][c])) ++s;
    if (s == rows) continue;
    std::swap(a[r], a[s]);
    T inv = exact_div(one_of(a[r][c]), a[r][c]);
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      T f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

template <class T>
int rank(Matrix<T> a) {
  return static_cast<int>(rref(a).size());
}

// Basis of {x : A x = 0}; `cols` is needed when A has no rows.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> a, int cols, const T& zero) {
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(cols, zero);
    v[f] = one_of(zero);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = zero - a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Sylvester-matrix resultant of univariate polynomials over an integral domain.
template <class T>
T resultant(const UPoly<T>& f, const UPoly<T>& g) {
  if (f.is_zero() && g.is_zero()) throw Error("domain", "undefined resultant");
  const T zero = f.is_zero() ? g.zero() : f.zero();
  if (f.is_zero() || g.is_zero()) {
    const UPoly<T>& h = f.is_zero() ? g : f;
    return h.degree() == 0 ? one_of(zero) : zero;
  }
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return one_of(zero);
  const int N = m + n;
  Matrix<T> s(N, std::vector<T>(N, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return det_bareiss(std::move(s), zero);
}

}  // namespace qdesc
