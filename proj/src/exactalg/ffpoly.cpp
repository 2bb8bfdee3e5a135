#include "qdesc/ffpoly.hpp"

#include <algorithm>
#include <random>

#include "qdesc/error.hpp"

namespace qdesc {

namespace {

FqPoly x_poly(const FqField& F) { return FqPoly::var(F.one()); }

bool poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Splits a product of distinct monic irreducibles of common degree d (Cantor-Zassenhaus).
void edf(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(monic(g));
    return;
  }
  const FqField& F = g.lc().field();
  const BigInt q = F.order();
  for (;;) {
    FqPoly a(F.zero());
    for (int i = 0; i < g.degree(); ++i) a.set(i, F.random(rng));
    if (a.degree() < 1) continue;
    FqPoly h(F.zero());
    if (F.p() == 2) {
      // trace from F_{q^d} to F_2: sum of a^{2^i}, i < d·log2(q)
      const int k = d * F.degree();
      FqPoly t = a % g;
      h = t;
      for (int i = 1; i < k; ++i) {
        t = mulmod(t, t, g);
        h = h + t;
      }
    } else {
      BigInt e = (pow(q, static_cast<unsigned long>(d)) - 1) / 2;
      h = powmod(a, e, g) - FqPoly::constant(F.one());
    }
    FqPoly c = gcd(h, g);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      edf(c, d, rng, out);
      edf(exact_div(g, c), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<int, FqPoly>> ddf(const FqPoly& f_in) {
  if (f_in.is_zero()) throw Error("domain", "ddf of zero polynomial");
  if (!is_squarefree(f_in)) throw Error("domain", "squarefree required");
  const FqField& F = f_in.lc().field();
  const BigInt q = F.order();
  std::vector<std::pair<int, FqPoly>> out;
  FqPoly f = monic(f_in);
  const FqPoly x = x_poly(F);
  FqPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    FqPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), f);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<int, int>> ddf_factor_degrees(const FqPoly& f) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [d, g] : ddf(f)) out.emplace_back(d, g.degree() / d);
  return out;
}

std::vector<FqPoly> factor_squarefree(const FqPoly& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FqPoly> out;
  for (const auto& [d, g] : ddf(f)) edf(g, d, rng, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<FqElem> fq_roots(const FqPoly& f_in, std::uint64_t seed) {
  if (f_in.is_zero()) throw Error("domain", "fq_roots of zero polynomial");
  if (f_in.degree() == 0) return {};
  const FqField& F = f_in.lc().field();
  FqPoly f = monic(f_in);
  const FqPoly x = x_poly(F);
  FqPoly g = gcd(powmod(x, F.order(), f) - x, f);
  std::vector<FqPoly> lin;
  std::mt19937_64 rng(seed);
  if (g.degree() > 0) edf(g, 1, rng, lin);
  std::vector<FqElem> roots;
  for (const auto& l : lin) {
    FqElem a = -l[0];
    FqPoly rest = f;
    for (;;) {
      auto [qt, r] = divrem(rest, l);
      if (!r.is_zero()) break;
      roots.push_back(a);
      rest = qt;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

FqPoly fq_poly_from_ints(const FqField& F, const std::vector<std::int64_t>& c) {
  std::vector<FqElem> v;
  for (auto a : c) v.push_back(F.from_int(a));
  return FqPoly(std::move(v), F.zero());
}

FqEmbedding::FqEmbedding(const FqField& from, const FqField& to) : from_(&from), to_(&to) {
  if (from.p() != to.p() || to.degree() % from.degree() != 0)
    throw Error("domain", "no embedding between these fields");
  std::vector<FqElem> m;
  for (auto c : from.modulus()) m.push_back(to.from_int(c));
  FqPoly mod(std::move(m), to.zero());
  std::vector<FqElem> roots = fq_roots(mod, 0);
  if (roots.empty()) throw Error("internal", "modulus has no root in extension");
  FqElem rho = roots.front();
  FqElem pw = to.one();
  for (int i = 0; i < from.degree(); ++i) {
    powers_.push_back(pw);
    pw *= rho;
  }
}

FqElem FqEmbedding::operator()(const FqElem& a) const {
  if (&a.field() != from_) throw Error("domain", "element not in embedding source");
  FqElem r = to_->zero();
  for (int i = 0; i < from_->degree(); ++i)
    if (a.coeff(i)) r += powers_[i] * to_->from_int(a.coeff(i));
  return r;
}

}  // namespace qdesc
