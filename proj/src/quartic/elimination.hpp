#pragma once

#include <array>

#include "qdesc/linalg.hpp"
#include "qdesc/mpoly.hpp"
#include "qdesc/upoly.hpp"

namespace qdesc::detail {

// Polynomials in (u, v) are stored as MPoly with u in slot 0 and v in slot 1.
template <class T>
struct LineElimination {
  std::array<MPoly<T>, 5> c;  // g(x, y, -ux - vy) = sum c_i x^{4-i} y^i
  MPoly<T> p, q;              // g restricted to the line is a square iff p = q = 0 (when c_0 != 0)
  UPoly<T> c0;                // c_0 as a polynomial in u
  UPoly<T> res;               // Res_v(p, q)
};

inline std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

template <class T>
UPoly<UPoly<T>> as_poly_in_v(const MPoly<T>& f) {
  const T zero = f.zero();
  const UPoly<T> pz(zero);
  std::vector<UPoly<T>> coeffs;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<int>(coeffs.size()) <= m[1]) coeffs.resize(m[1] + 1, pz);
    coeffs[m[1]] += UPoly<T>::monomial(c, m[0]);
  }
  return UPoly<UPoly<T>>(std::move(coeffs), pz);
}

// Coefficients of f(u0, v) in v.
template <class T>
UPoly<T> specialize_u(const MPoly<T>& f, const T& u0) {
  const T zero = zero_of(u0);
  std::vector<T> c;
  for (const auto& [m, a] : f.terms()) {
    if (static_cast<int>(c.size()) <= m[1]) c.resize(m[1] + 1, zero);
    T t = a;
    for (int i = 0; i < m[0]; ++i) t = t * u0;
    c[m[1]] += t;
  }
  return UPoly<T>(std::move(c), zero);
}

template <class T>
LineElimination<T> eliminate(const MPoly<T>& g) {
  const T zero = g.zero();
  LineElimination<T> e;
  for (auto& ci : e.c) ci = MPoly<T>(zero);
  for (const auto& [m, coef] : g.terms()) {
    const int cz = m[2];
    for (int j = 0; j <= cz; ++j) {
      std::int64_t s = binom(cz, j) * (cz % 2 ? -1 : 1);
      e.c[m[1] + j].add_term({cz - j, j, 0}, coef * from_int(zero, s));
    }
  }
  auto k = [&](std::int64_t v) { return MPoly<T>::constant(from_int(zero, v)); };
  const auto& c = e.c;
  e.p = k(8) * c[0] * c[0] * c[3] - k(4) * c[0] * c[1] * c[2] + c[1] * c[1] * c[1];
  MPoly<T> d = k(4) * c[0] * c[2] - c[1] * c[1];
  e.q = k(64) * c[0] * c[0] * c[0] * c[4] - d * d;
  std::vector<T> c0(5, zero);
  for (const auto& [m, a] : c[0].terms()) c0[m[0]] = a;
  e.c0 = UPoly<T>(std::move(c0), zero);
  e.res = resultant(as_poly_in_v(e.p), as_poly_in_v(e.q));
  return e;
}

}  // namespace qdesc::detail
