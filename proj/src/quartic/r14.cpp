#include "qdesc/error.hpp"
#include "qdesc/linalg.hpp"
#include "qdesc/quartic.hpp"

namespace qdesc {

namespace {

// Remainder conditions for "q divides f(s a + t b)" as two linear functionals of f's
// coefficients; monomials are evaluated in F[s]/(q(s,1)), F[t]/(q(1,t)), or directly when q = st.
struct Divisibility {
  enum Kind { kS, kT, kST } kind;
  FqPoly modulus;
};

Divisibility divisibility_for(const Bitangent& bt) {
  const auto& q = bt.q;
  const FqElem zero = zero_of(q[0]);
  if (!q[0].is_zero()) return {Divisibility::kS, FqPoly(std::vector<FqElem>{q[2], q[1], q[0]}, zero)};
  if (!q[2].is_zero()) return {Divisibility::kT, FqPoly(std::vector<FqElem>{q[0], q[1], q[2]}, zero)};
  return {Divisibility::kST, FqPoly(zero)};
}

std::array<FqElem, 2> conditions(const Bitangent& bt, const Divisibility& d, const Mono& m) {
  const FqElem zero = zero_of(bt.q[0]), one = one_of(bt.q[0]);
  if (d.kind == Divisibility::kST) {
    // coefficients of s^14 and t^14: the monomial at a and at b
    FqElem va = one, vb = one;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < m[i]; ++e) {
        va *= bt.a[i];
        vb *= bt.b[i];
      }
    return {va, vb};
  }
  // with t = 1 the point is s a + b; with s = 1 it is a + t b
  FqPoly f = FqPoly::constant(one);
  for (int i = 0; i < 3; ++i) {
    const FqPoly lin = d.kind == Divisibility::kS ? FqPoly(std::vector<FqElem>{bt.b[i], bt.a[i]}, zero)
                                                  : FqPoly(std::vector<FqElem>{bt.a[i], bt.b[i]}, zero);
    for (int e = 0; e < m[i]; ++e) f = (f * lin) % d.modulus;
  }
  return {f[0], f[1]};
}

}  // namespace

R14Result r14_and_c(const BitangentSet& b) {
  if (b.lines.size() != 28) throw Error("domain", "need 28 bitangents");
  const FqField& F = *b.field;
  const MPoly<FqElem>& g = b.g;
  const Mono lm = g.leading_mono();
  std::vector<Mono> basis;
  for (const auto& m : monomials_of_degree(14))
    if (!divides(lm, m)) basis.push_back(m);

  Matrix<FqElem> rows;
  for (const auto& bt : b.lines) {
    const Divisibility d = divisibility_for(bt);
    std::array<std::vector<FqElem>, 2> r;
    for (const auto& m : basis) {
      const auto c = conditions(bt, d, m);
      r[0].push_back(c[0]);
      r[1].push_back(c[1]);
    }
    rows.push_back(std::move(r[0]));
    rows.push_back(std::move(r[1]));
  }
  const auto ker = kernel(std::move(rows), static_cast<int>(basis.size()), F.zero());
  if (ker.size() != 1)
    throw Error("degenerate", "interpolation space for r14 is not one-dimensional", std::to_string(ker.size()));

  R14Result out;
  out.r14 = MPoly<FqElem>(F.zero());
  FqElem scale;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!ker[0][i].is_zero()) {
      if (scale.field_ptr() == nullptr) scale = ker[0][i].inv();
      out.r14.add_term(basis[i], ker[0][i] * scale);
    }

  MPoly<FqElem> n = MPoly<FqElem>::constant(F.one());
  for (const auto& bt : b.lines) {
    MPoly<FqElem> lin(F.zero());
    for (int i = 0; i < 3; ++i) lin += MPoly<FqElem>::var(i, F.zero()) * bt.line[i];
    n = normal_form(n * lin, g);
  }
  const MPoly<FqElem> sq = normal_form(out.r14 * out.r14, g);
  if (sq.is_zero() || n.is_zero()) throw Error("internal", "vanishing norm or square");
  const Mono top = sq.leading_mono();
  out.c = n.coeff(top) / sq.leading_coeff();
  out.identity_holds = !out.c.is_zero() && n == sq * out.c;
  out.c_in_prime_field = out.c.in_prime_field();
  out.minus_c_square = (-out.c).is_square();
  if (out.c_in_prime_field) {
    const FqField& Fp = FqField::get(F.p());
    out.minus_c_square_prime_field = Fp.from_int(out.c.to_prime_field()).is_square() == Fp.from_int(-1).is_square();
  }
  return out;
}

}  // namespace qdesc
