#include <numeric>

#include "qdesc/error.hpp"
#include "qdesc/quartic.hpp"

namespace qdesc {

namespace {

using Series = FqPoly;  // truncated power series in z
using BiPoly = UPoly<FqPoly>;  // polynomial in X with coefficients in F[z]

constexpr int kPrecision = 3;  // factors of degree <= 2 need z^0..z^2

Series truncate(const Series& s, int n) {
  std::vector<FqElem> c;
  for (int i = 0; i < n && i <= s.degree(); ++i) c.push_back(s[i]);
  return Series(std::move(c), s.zero());
}

Series series_inverse(const Series& s) {
  const FqElem zero = s.zero();
  const FqElem i0 = s[0].inv();
  // (s0 + s1 z + s2 z^2)^-1 mod z^3
  return Series({i0, zero - s[1] * i0 * i0, s[1] * s[1] * i0 * i0 * i0 - s[2] * i0 * i0}, zero);
}

Series eval_series(const BiPoly& g, const Series& x) {
  Series r(x.zero());
  for (int j = g.degree(); j >= 0; --j) r = truncate(r * x + g[j], kPrecision);
  return r;
}

BiPoly derivative_x(const BiPoly& g) {
  std::vector<FqPoly> c;
  for (int j = 1; j <= g.degree(); ++j) c.push_back(g[j] * from_int(g.zero().zero(), j));
  return BiPoly(std::move(c), g.zero());
}

}  // namespace

bool geometrically_irreducible(const MPoly<BigInt>& g, std::uint32_t p) {
  if (!is_probable_prime(BigInt(p))) throw Error("domain", "modulus is not prime", std::to_string(p));
  int k = 1;
  for (std::uint64_t q = p; q < 50; q *= p) ++k;
  const FqField& K = FqField::get(p, k);
  const MPoly<FqElem> gk = reduce_mod(g, K);
  if (gk.is_zero()) return false;

  // a line z = a x + b y meeting the curve in four distinct points with y != 0
  std::mt19937_64 rng(p);
  for (int attempt = 0; attempt < 400; ++attempt) {
    const FqElem a = attempt == 0 ? K.zero() : K.random(rng), b = attempt == 0 ? K.zero() : K.random(rng);
    std::array<MPoly<FqElem>, 3> subs{MPoly<FqElem>::var(0, K.zero()), MPoly<FqElem>::var(1, K.zero()),
                                      MPoly<FqElem>::var(2, K.zero()) + MPoly<FqElem>::var(0, K.zero()) * a +
                                          MPoly<FqElem>::var(1, K.zero()) * b};
    const MPoly<FqElem> gs = gk.substitute(subs);
    std::vector<FqElem> f0(5, K.zero());
    for (const auto& [m, c] : gs.terms())
      if (m[2] == 0) f0[m[0]] = c;
    const FqPoly f(f0, K.zero());
    if (f.degree() != 4 || !is_squarefree(f)) continue;

    int e = 1;
    for (auto [d, n] : ddf_factor_degrees(monic(f))) e = std::lcm(e, d);
    const FqField& L = FqField::get(p, k * e);
    const FqEmbedding emb(K, L);
    const FqPoly zero_series(L.zero());
    std::vector<FqPoly> gc(5, zero_series);  // G(X, z) = gs(X, 1, z)
    for (const auto& [m, c] : gs.terms()) gc[m[0]] += FqPoly::monomial(emb(c), m[2]);
    const BiPoly G(gc, zero_series);
    const BiPoly dG = derivative_x(G);
    std::vector<FqElem> fl;
    for (const auto& c : f.coeffs()) fl.push_back(emb(c));
    const auto roots = fq_roots(FqPoly(fl, L.zero()));
    if (roots.size() != 4) throw Error("internal", "separable quartic did not split");

    std::vector<Series> branch;
    for (const auto& x0 : roots) {
      Series x = FqPoly::constant(x0);
      for (int it = 0; it < 3; ++it)
        x = truncate(x - eval_series(G, x) * series_inverse(eval_series(dG, x)), kPrecision);
      branch.push_back(x);
    }
    auto divides_g = [&](const BiPoly& factor) { return (G % factor).is_zero(); };
    const FqPoly one = FqPoly::constant(L.one());
    for (int i = 0; i < 4; ++i)
      if (divides_g(BiPoly({-truncate(branch[i], 2), one}, zero_series))) return false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const Series s = truncate(branch[i] + branch[j], 2);
        const Series t = truncate(branch[i] * branch[j], 3);
        if (divides_g(BiPoly({t, -s, one}, zero_series))) return false;
      }
    return true;
  }
  // every line tried meets the curve non-reducedly: a multiple component
  return false;
}

ReductionFlags reduction_flags(const MPoly<BigInt>& g, std::uint32_t p) {
  if (!is_probable_prime(BigInt(p))) throw Error("domain", "modulus is not prime", std::to_string(p));
  const BigInt i27 = discriminant_i27(g);
  ReductionFlags f;
  f.good = !mpz_divisible_ui_p(i27.get_mpz_t(), p);
  f.mult1_node = i27 != 0 && p % 2 == 1 && valuation(i27, p) == 1;
  f.geom_irreducible = geometrically_irreducible(g, p);
  f.weil_hensel_point = p >= 37 && f.geom_irreducible;
  return f;
}

}  // namespace qdesc
