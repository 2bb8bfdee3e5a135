#pragma once

#include <array>
#include <map>
#include <vector>

#include "qdesc/error.hpp"
#include "qdesc/linalg.hpp"
#include "qdesc/mpoly.hpp"

namespace qdesc {

// Multivariate resultant of three ternary cubics via the degree-7 Macaulay matrix divided by
// its extraneous minor. Both determinants are taken of the perturbed system
// f_i - t*x_i^3 and the ratio evaluated at t = 0, so a singular minor needs no special case.
// Normalized so that Res(x^3, y^3, z^3) = 1.
template <class T>
T macaulay_resultant_cubics(const MPoly<T>& f1, const MPoly<T>& f2, const MPoly<T>& f3) {
  const std::array<const MPoly<T>*, 3> fs{&f1, &f2, &f3};
  for (const auto* f : fs)
    if (!f->is_homogeneous(3)) throw Error("domain", "macaulay_resultant_cubics: inputs must be homogeneous cubics");
  const T zero = f1.zero();
  const std::vector<Mono> mons = monomials_of_degree(7);
  std::map<Mono, int> index;
  for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
  const int n = static_cast<int>(mons.size());
  Matrix<T> a(n, std::vector<T>(n, zero));
  std::vector<int> extraneous;
  for (int row = 0; row < n; ++row) {
    const Mono& m = mons[row];
    int which = m[0] >= 3 ? 0 : (m[1] >= 3 ? 1 : 2);
    int big = (m[0] >= 3) + (m[1] >= 3) + (m[2] >= 3);
    if (big >= 2) extraneous.push_back(row);
    Mono shift = m;
    shift[which] -= 3;
    for (const auto& [e, c] : fs[which]->terms()) a[row][index.at({e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]})] = c;
  }
  Matrix<T> b;
  for (int i : extraneous) {
    std::vector<T> r;
    for (int j : extraneous) r.push_back(a[i][j]);
    b.push_back(std::move(r));
  }
  // charpoly(A) = det(tI - A); det(A - tI) = (-1)^n charpoly, and n_A - n_B = 27 is odd.
  std::vector<T> pa = charpoly_berkowitz(a, zero);
  std::vector<T> pb = charpoly_berkowitz(b, zero);
  int k = static_cast<int>(pb.size()) - 1;
  while (k >= 0 && is_zero(pb[k])) --k;
  if (k < 0) throw Error("internal", "extraneous characteristic polynomial vanished");
  int shift = static_cast<int>(pb.size()) - 1 - k;  // order of vanishing at t = 0
  const T& num = pa[pa.size() - 1 - shift];
  const T& den = pb[k];
  return zero - exact_div(num, den);
}

}  // namespace qdesc
