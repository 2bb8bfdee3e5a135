#include <algorithm>
#include <numeric>

#include "elimination.hpp"
#include "qdesc/error.hpp"
#include "qdesc/quartic.hpp"

namespace qdesc {

namespace {

Point3 normalize(Point3 p) {
  for (int i = 0; i < 3; ++i)
    if (!p[i].is_zero()) {
      const FqElem inv = p[i].inv();
      for (auto& c : p) c *= inv;
      return p;
    }
  throw Error("internal", "zero projective point");
}

// Two points spanning the line l . X = 0, with l normalized.
std::pair<Point3, Point3> spanning_points(const Point3& l) {
  const FqField& F = l[0].field();
  const FqElem o = F.one(), z = F.zero();
  if (!l[0].is_zero()) return {Point3{-l[1], o, z}, Point3{-l[2], z, o}};
  if (!l[1].is_zero()) return {Point3{o, z, z}, Point3{z, -l[2], o}};
  return {Point3{o, z, z}, Point3{z, o, z}};
}

// Coefficients of s^{4-i} t^i in g(s a + t b).
std::array<FqElem, 5> binary_restriction(const MPoly<FqElem>& g, const Point3& a, const Point3& b) {
  std::array<MPoly<FqElem>, 3> subs;
  for (int i = 0; i < 3; ++i)
    subs[i] = MPoly<FqElem>::term({1, 0, 0}, a[i]) + MPoly<FqElem>::term({0, 1, 0}, b[i]);
  const MPoly<FqElem> r = g.substitute(subs);
  std::array<FqElem, 5> e;
  for (int i = 0; i < 5; ++i) e[i] = r.coeff({4 - i, i, 0});
  return e;
}

// q with e = lambda q^2, if it exists.
std::optional<std::array<FqElem, 3>> square_root_quartic(const std::array<FqElem, 5>& e) {
  const FqElem zero = zero_of(e[0]), one = one_of(e[0]);
  const FqElem two = from_int(zero, 2), four = from_int(zero, 4), eight = from_int(zero, 8);
  std::array<FqElem, 3> q;
  FqElem lambda;
  if (!e[0].is_zero()) {
    q = {one, e[1] / (two * e[0]), (four * e[0] * e[2] - e[1] * e[1]) / (eight * e[0] * e[0])};
    lambda = e[0];
  } else if (!e[4].is_zero()) {
    q = {(four * e[4] * e[2] - e[3] * e[3]) / (eight * e[4] * e[4]), e[3] / (two * e[4]), one};
    lambda = e[4];
  } else {
    q = {zero, one, zero};
    lambda = e[2];
  }
  if (lambda.is_zero()) return std::nullopt;
  const std::array<FqElem, 5> sq{q[0] * q[0], two * q[0] * q[1], q[1] * q[1] + two * q[0] * q[2], two * q[1] * q[2],
                                 q[2] * q[2]};
  for (int i = 0; i < 5; ++i)
    if (lambda * sq[i] != e[i]) return std::nullopt;
  return q;
}

void fill_contact_points(Bitangent& bt, const FqField& E) {
  const FqEmbedding emb(bt.line[0].field(), E);
  Point3 a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = emb(bt.a[i]);
    b[i] = emb(bt.b[i]);
  }
  const FqElem q0 = emb(bt.q[0]), q1 = emb(bt.q[1]), q2 = emb(bt.q[2]);
  auto point = [&](const FqElem& s, const FqElem& t) {
    return normalize(Point3{s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]});
  };
  std::vector<Point3> pts;
  if (!q0.is_zero()) {
    const FqPoly f(std::vector<FqElem>{q2, q1, q0}, E.zero());
    for (const auto& s : fq_roots(f)) pts.push_back(point(s, E.one()));
  } else {
    pts.push_back(point(E.one(), E.zero()));
    pts.push_back(q1.is_zero() ? pts.back() : point(-q2, q1));
  }
  if (pts.size() != 2) throw Error("internal", "contact quadratic does not split in the contact field");
  bt.double_contact = pts[0] == pts[1];
  if (bt.double_contact) pts.pop_back();
  std::sort(pts.begin(), pts.end());
  bt.contact_points = std::move(pts);
}

std::optional<BitangentSet> try_projection(const MPoly<BigInt>& g, std::uint32_t p, int k, bool contact) {
  const FqField& Fp = FqField::get(p);
  const IntMat3 m = projection_matrix(k);
  const IntMat3 minv = inverse_unimodular(m);
  const auto e = detail::eliminate(apply_substitution(reduce_mod(g, Fp), m));
  if (e.res.is_zero()) return std::nullopt;
  FqPoly h = e.res;
  for (auto d = gcd(h, e.c0); d.degree() > 0; d = gcd(h, e.c0)) h = exact_div(h, d);
  h = monic(exact_div(h, gcd(h, derivative(h))));
  if (h.degree() != 28) return std::nullopt;

  BitangentSet out;
  out.p = p;
  out.projection = k;
  out.h = h;
  out.ddf_pattern = ddf_factor_degrees(h);
  out.r = 1;
  for (auto [d, n] : out.ddf_pattern) out.r = std::lcm(out.r, d);
  if (out.r > kMaxExtDegree) return std::nullopt;
  const FqField& F = FqField::get(p, out.r);
  out.field = &F;
  auto lift = [&](const FqElem& a) { return F.from_int(a.to_prime_field()); };
  std::vector<FqElem> hc;
  for (const auto& a : h.coeffs()) hc.push_back(lift(a));
  const auto roots = fq_roots(FqPoly(std::move(hc), F.zero()));
  if (roots.size() != 28) return std::nullopt;
  const MPoly<FqElem> pf = e.p.map_coeffs(lift, F.zero());
  const MPoly<FqElem> qf = e.q.map_coeffs(lift, F.zero());
  out.g = reduce_mod(g, F);

  for (const auto& u0 : roots) {
    const FqPoly d = gcd(detail::specialize_u(pf, u0), detail::specialize_u(qf, u0));
    if (d.degree() != 1) return std::nullopt;
    const Point3 lp{u0, -d[0], F.one()};
    Point3 l{F.zero(), F.zero(), F.zero()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) l[j] += lp[i] * F.from_int(minv[i][j]);
    Bitangent bt;
    bt.line = normalize(l);
    std::tie(bt.a, bt.b) = spanning_points(bt.line);
    const auto q = square_root_quartic(binary_restriction(out.g, bt.a, bt.b));
    if (!q) return std::nullopt;
    bt.q = *q;
    out.lines.push_back(std::move(bt));
  }
  std::sort(out.lines.begin(), out.lines.end(), [](const Bitangent& x, const Bitangent& y) { return x.line < y.line; });
  for (size_t i = 1; i < out.lines.size(); ++i)
    if (out.lines[i].line == out.lines[i - 1].line) return std::nullopt;
  if (contact && 2 * out.r <= kMaxExtDegree) {
    out.contact_field = &FqField::get(p, 2 * out.r);
    for (auto& bt : out.lines) fill_contact_points(bt, *out.contact_field);
  }
  return out;
}

}  // namespace

BitangentSet bitangents_fq(const MPoly<BigInt>& g, std::uint32_t p, bool contact_points) {
  if (p % 2 == 0) throw Error("domain", "bitangents need odd characteristic", std::to_string(p));
  if (!is_probable_prime(BigInt(p))) throw Error("domain", "modulus is not prime", std::to_string(p));
  const BigInt i27 = discriminant_i27(g);
  if (mpz_divisible_ui_p(i27.get_mpz_t(), p)) throw Error("domain", "bad reduction", std::to_string(p));
  for (int k = 0; k < kProjectionCount; ++k)
    if (auto b = try_projection(g, p, k, contact_points)) return std::move(*b);
  throw Error("projection", "no projection in the schedule separates the bitangents", std::to_string(p));
}

Perm frobenius_on_bitangents(const BitangentSet& b) {
  std::vector<std::uint32_t> img;
  for (const auto& bt : b.lines) {
    const Point3 f{bt.line[0].frobenius(), bt.line[1].frobenius(), bt.line[2].frobenius()};
    auto it = std::lower_bound(b.lines.begin(), b.lines.end(), f,
                               [](const Bitangent& x, const Point3& y) { return x.line < y; });
    if (it == b.lines.end() || it->line != f) throw Error("domain", "bitangent list is not Frobenius-closed");
    img.push_back(static_cast<std::uint32_t>(it - b.lines.begin()));
  }
  return Perm(std::move(img));
}

std::vector<int> ddf_cycle_type(const BitangentSet& b) {
  std::vector<int> out;
  for (auto [d, n] : b.ddf_pattern) out.insert(out.end(), n, d);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace qdesc
