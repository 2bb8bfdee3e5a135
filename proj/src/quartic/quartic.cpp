#include "qdesc/quartic.hpp"

#include "elimination.hpp"
#include "qdesc/error.hpp"
#include "qdesc/resultant.hpp"

namespace qdesc {

const std::vector<Mono>& quartic_monomials() {
  static const std::vector<Mono> mons = monomials_of_degree(4);
  return mons;
}

MPoly<BigInt> quartic_from_coeffs(const QuarticCoeffs& c) {
  MPoly<BigInt> g(BigInt(0));
  const auto& mons = quartic_monomials();
  for (int i = 0; i < 15; ++i) g.add_term(mons[i], c[i]);
  return g;
}

QuarticCoeffs coeffs_of(const MPoly<BigInt>& g) {
  if (!g.is_homogeneous(4)) throw Error("domain", "not a homogeneous quartic");
  QuarticCoeffs c;
  const auto& mons = quartic_monomials();
  for (int i = 0; i < 15; ++i) c[i] = g.coeff(mons[i]);
  return c;
}

MPoly<FqElem> reduce_mod(const MPoly<BigInt>& g, const FqField& F) {
  return g.map_coeffs([&](const BigInt& a) { return F.from_bigint(a); }, F.zero());
}

FqPoly reduce_poly(const UPoly<BigInt>& h, const FqField& F) {
  std::vector<FqElem> c;
  for (const auto& a : h.coeffs()) c.push_back(F.from_bigint(a));
  return FqPoly(std::move(c), F.zero());
}

int valuation(const BigInt& n, std::uint32_t p) {
  if (n == 0) throw Error("domain", "valuation of zero");
  BigInt m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= p;
    ++v;
  }
  return v;
}

BigInt discriminant_i27(const MPoly<BigInt>& g) {
  if (!g.is_homogeneous(4) || g.is_zero()) throw Error("domain", "not a homogeneous quartic");
  const BigInt r = macaulay_resultant_cubics(g.derivative(0), g.derivative(1), g.derivative(2));
  const BigInt scale = BigInt(1) << 14;
  if (!mpz_divisible_p(r.get_mpz_t(), scale.get_mpz_t())) throw Error("internal", "normalization failed", to_string(r));
  return r / scale;
}

namespace {

// L (lower unitriangular) and U (upper unitriangular) entries: l10 l20 l21 u01 u02 u12.
constexpr std::array<std::array<int, 6>, kProjectionCount> kSchedule{{
    {0, 0, 0, 0, 0, 0},   {1, 2, 1, 0, 1, 0},   {2, 1, 3, 1, 0, 1},  {1, 3, 2, 2, 1, 1},
    {3, 1, 1, 1, 2, 3},   {-1, 2, 1, 1, -1, 2}, {2, -1, 3, -1, 1, 1}, {1, 1, -2, 3, 1, -1},
    {4, 1, 2, 1, 3, 1},   {-2, 3, 1, 2, 1, -3}, {1, -3, 4, 1, 2, 2},  {3, 2, -1, -2, 1, 4},
    {5, 1, 3, 1, -2, 1},  {2, 4, 1, -3, 1, 2},  {-1, -2, 3, 4, 1, 1}, {3, -1, -2, 1, 5, 2},
    {1, 5, 2, -1, 3, -2}, {6, 1, -1, 2, 1, 3},  {-3, 2, 5, 1, 1, -1}, {2, 3, 4, 5, -1, 1},
}};

UPoly<BigRat> to_rat(const UPoly<BigInt>& f) {
  std::vector<BigRat> c;
  for (const auto& a : f.coeffs()) c.emplace_back(a);
  return UPoly<BigRat>(std::move(c), BigRat(0));
}

UPoly<BigInt> primitive_part(const UPoly<BigRat>& f) {
  BigInt den = 1;
  for (const auto& a : f.coeffs()) den = lcm(den, a.get_den());
  std::vector<BigInt> c;
  BigInt cont = 0;
  for (const auto& a : f.coeffs()) {
    BigRat s = a * den;
    c.push_back(s.get_num());
    cont = gcd(cont, s.get_num());
  }
  if (cont == 0) return UPoly<BigInt>(BigInt(0));
  if (sgn(c.back()) < 0) cont = -cont;
  for (auto& a : c) a = exact_div(a, cont);
  return UPoly<BigInt>(std::move(c), BigInt(0));
}

}  // namespace

IntMat3 projection_matrix(int k) {
  if (k < 0 || k >= kProjectionCount) throw Error("domain", "projection index out of range", std::to_string(k));
  const auto& s = kSchedule[k];
  IntMat3 l{{{1, 0, 0}, {s[0], 1, 0}, {s[1], s[2], 1}}};
  IntMat3 u{{{1, s[3], s[4]}, {0, 1, s[5]}, {0, 0, 1}}};
  IntMat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int t = 0; t < 3; ++t) m[i][j] += l[i][t] * u[t][j];
  return m;
}

IntMat3 inverse_unimodular(const IntMat3& m) {
  IntMat3 adj{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  std::int64_t det = 0;
  for (int j = 0; j < 3; ++j) det += m[0][j] * adj[j][0];
  if (det != 1 && det != -1) throw Error("domain", "matrix is not unimodular");
  for (auto& row : adj)
    for (auto& a : row) a *= det;
  return adj;
}

BitangentPoly bitangent_poly(const MPoly<BigInt>& g, const std::vector<std::uint32_t>& check_primes) {
  if (discriminant_i27(g) == 0) throw Error("domain", "singular quartic");
  for (int k = 0; k < kProjectionCount; ++k) {
    const auto e = detail::eliminate(apply_substitution(g, projection_matrix(k)));
    if (e.res.is_zero()) continue;
    UPoly<BigRat> r = to_rat(e.res);
    const UPoly<BigRat> c0 = to_rat(e.c0);
    // common roots of p and q with c_0 = 0 are artefacts of the elimination
    for (auto d = gcd(r, c0); d.degree() > 0; d = gcd(r, c0)) r = exact_div(r, d);
    r = exact_div(r, gcd(r, derivative(r)));
    if (r.degree() != 28) continue;
    BitangentPoly out{primitive_part(r), k};
    bool ok = true;
    for (auto p : check_primes) {
      const FqPoly hp = reduce_poly(out.h, FqField::get(p));
      ok = ok && hp.degree() == 28 && is_squarefree(hp);
    }
    if (ok) return out;
  }
  throw Error("projection", "no projection in the schedule gives a squarefree degree-28 polynomial");
}

}  // namespace qdesc
