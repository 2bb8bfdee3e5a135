#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "curves.hpp"
#include "doctest.h"
#include "qdesc/error.hpp"
#include "qdesc/ffpoly.hpp"
#include "qdesc/quartic.hpp"

using namespace qdesc;
using qdesc::testing::curve;
using qdesc::testing::fermat;

namespace {

std::vector<FqElem> elements(const FqField& K) {
  std::vector<FqElem> el;
  const std::uint32_t p = K.p();
  for (std::uint64_t i = 0; i < K.order().get_ui(); ++i) {
    std::vector<std::uint32_t> c(K.degree());
    std::uint64_t v = i;
    for (int j = 0; j < K.degree(); ++j, v /= p) c[j] = static_cast<std::uint32_t>(v % p);
    el.push_back(K.from_coeffs(c));
  }
  return el;
}

// Exhaustive search for a common zero of the three partials over F_{p^k}.
bool has_singular_point(const MPoly<BigInt>& g, std::uint32_t p, int k) {
  const FqField& K = FqField::get(p, k);
  const MPoly<FqElem> gk = reduce_mod(g, K);
  const std::array<MPoly<FqElem>, 3> d{gk.derivative(0), gk.derivative(1), gk.derivative(2)};
  auto sing = [&](const FqElem& x, const FqElem& y, const FqElem& z) {
    return gk.eval(x, y, z).is_zero() && d[0].eval(x, y, z).is_zero() && d[1].eval(x, y, z).is_zero() &&
           d[2].eval(x, y, z).is_zero();
  };
  const auto el = elements(K);
  for (const auto& x : el)
    for (const auto& y : el)
      if (sing(x, y, K.one())) return true;
  for (const auto& x : el)
    if (sing(x, K.one(), K.zero())) return true;
  return sing(K.one(), K.zero(), K.zero());
}

QuarticCoeffs random_coeffs(std::mt19937_64& rng, int bound) {
  QuarticCoeffs c;
  for (auto& v : c) v = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return c;
}

// Brute-force #X(F_p) over the projective plane.
std::uint64_t brute_count(const MPoly<BigInt>& g, std::uint32_t p) {
  const FqField& F = FqField::get(p);
  const MPoly<FqElem> gp = reduce_mod(g, F);
  std::uint64_t n = 0;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) n += gp.eval(F.from_int(x), F.from_int(y), F.one()).is_zero();
  for (std::uint32_t x = 0; x < p; ++x) n += gp.eval(F.from_int(x), F.one(), F.zero()).is_zero();
  n += gp.eval(F.one(), F.zero(), F.zero()).is_zero();
  return n;
}

}  // namespace

TEST_SUITE("quartic") {
  TEST_CASE("I27 values") {
    CHECK(discriminant_i27(fermat()) > 0);
    CHECK(discriminant_i27(curve(1)) == 4727);
    CHECK(discriminant_i27(curve(2)) == 14227);
    CHECK(discriminant_i27(curve(3)) == 4826809);
    CHECK(discriminant_i27(curve(4)) == BigInt("-845805971200"));
  }

  TEST_CASE("I27 vanishes mod p exactly on singular reductions") {
    std::mt19937_64 rng(27);
    int singular = 0;
    for (int t = 0; t < 20; ++t) {
      QuarticCoeffs c = random_coeffs(rng, 4);
      if (t % 2 == 0) {
        // singular at (0:0:1): drop z^4, xz^3, yz^3
        c[14] = 0;
        c[9] = 0;
        c[13] = 0;
      }
      const MPoly<BigInt> g = quartic_from_coeffs(c);
      const BigInt d = discriminant_i27(g);
      for (std::uint32_t p : {3u, 5u, 7u}) {
        CAPTURE(t);
        CAPTURE(p);
        const bool zero = d % p == 0;
        const bool found = has_singular_point(g, p, 1) || has_singular_point(g, p, 2);
        if (found) CHECK(zero);
        if (!zero) CHECK_FALSE(found);
        if (t % 2 == 0) CHECK(zero);
        singular += found;
      }
    }
    CHECK(singular >= 30);
  }

  TEST_CASE("I27 is invariant under unimodular substitutions up to sign") {
    const BigInt d = discriminant_i27(curve(1));
    for (int k = 0; k < kProjectionCount; ++k) {
      const IntMat3 m = projection_matrix(k);
      const BigInt e = discriminant_i27(apply_substitution(curve(1), m));
      CHECK(abs(e) == abs(d));
      const IntMat3 mi = inverse_unimodular(m);
      CHECK(apply_substitution(apply_substitution(curve(1), m), mi).terms() == curve(1).terms());
    }
  }

  TEST_CASE("singular input is rejected") {
    // (x^2 + y^2 - z^2)^2
    const MPoly<BigInt> g = quartic_from_coeffs(qdesc::testing::coeffs({1, 0, 0, 2, 0, -2, 0, 0, 0, 0, 1, 0, -2, 0, 1}));
    CHECK(discriminant_i27(g) == 0);
    CHECK_THROWS_AS(bitangent_poly(g), Error);
  }

  TEST_CASE("bitangent polynomial has degree 28") {
    CHECK(bitangent_poly(fermat()).h.degree() == 28);
    const BitangentPoly b = bitangent_poly(curve(1), {5});
    CHECK(b.h.degree() == 28);
    CHECK(b.h.lc() > 0);
  }

  TEST_CASE("28 bitangents over the splitting field") {
    const BitangentSet b1 = bitangents_fq(curve(1), 5);
    CHECK(b1.lines.size() == 28);
    CHECK(b1.r == 8);
    REQUIRE(b1.contact_field != nullptr);
    const FqField& K = *b1.contact_field;
    const FqEmbedding emb(*b1.field, K);
    const MPoly<FqElem> gk = b1.g.map_coeffs([&](const FqElem& a) { return emb(a); }, K.zero());
    for (const auto& l : b1.lines) {
      // no hyperflexes: two distinct contact points, each on the curve and on the line
      CHECK_FALSE(l.double_contact);
      REQUIRE(l.contact_points.size() == 2);
      for (const auto& pt : l.contact_points) {
        CHECK(gk.eval(pt[0], pt[1], pt[2]).is_zero());
        CHECK((emb(l.line[0]) * pt[0] + emb(l.line[1]) * pt[1] + emb(l.line[2]) * pt[2]).is_zero());
      }
    }
    const BitangentSet b2 = bitangents_fq(curve(2), 3, false);
    CHECK(b2.lines.size() == 28);
    CHECK_THROWS_AS(bitangents_fq(curve(1), 29), Error);
  }

  TEST_CASE("incidence mod p") {
    const BitangentSet b = bitangents_fq(curve(1), 3, false);
    const IncidenceStructure s = syzygetic_structure(b);
    CHECK(s.quads.size() == 315);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> pairs;
    for (const auto& q : s.quads)
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) ++pairs[{q[i], q[j]}];
    CHECK(pairs.size() == 378);
    for (const auto& [k, n] : pairs) CHECK(n == 5);
    CHECK(match_structures(s, build_canonical(3)).has_value());

    const Perm f = frobenius_on_bitangents(b);
    CHECK(f.order() == static_cast<std::uint64_t>(b.r));
    CHECK(f.cycle_type() == ddf_cycle_type(b));
    CHECK(preserves(f, s));
  }

  TEST_CASE("point counts") {
    for (int k = 1; k <= 3; ++k)
      for (std::uint32_t p : {3u, 5u, 7u}) {
        if (discriminant_i27(curve(k)) % p == 0) continue;
        CHECK(count_points(curve(k), p, 1) == brute_count(curve(k), p));
      }
    CHECK(count_points(curve(2), 3, 1) == 7);
    CHECK(l_polynomial(curve(1), 3).jacobian_order() == 51);
    CHECK(l_polynomial(curve(2), 2).jacobian_order() == 71);
    CHECK(l_polynomial(curve(2), 3).jacobian_order() == 85);
    CHECK(l_polynomial(curve(3), 3).jacobian_order() == 91);
    CHECK(l_polynomial(curve(3), 7).jacobian_order() == 659);
  }

  TEST_CASE("L-polynomials satisfy the functional equation and the Weil bounds") {
    for (int k = 1; k <= 3; ++k)
      for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        if (discriminant_i27(curve(k)) % p == 0) continue;
        const LPolynomial l = l_polynomial(curve(k), p);
        CHECK(l.functional_equation_holds());
        CHECK(l.a[0] == 1);
        CHECK(l.a[6] == BigInt(p) * p * p);
        // |#X(F_p^r) - p^r - 1| <= 6 p^{r/2}
        for (int r = 1; r <= 3; ++r) {
          const double q = std::pow(static_cast<double>(p), r);
          CHECK(std::abs(static_cast<double>(l.counts[r - 1]) - q - 1) <= 6 * std::sqrt(q) + 1e-9);
        }
        // (sqrt p - 1)^6 <= #J(F_p) <= (sqrt p + 1)^6
        const double j = l.jacobian_order().get_d(), s = std::sqrt(static_cast<double>(p));
        CHECK(j >= std::pow(s - 1, 6) - 1e-6);
        CHECK(j <= std::pow(s + 1, 6) + 1e-6);
      }
  }

  TEST_CASE("torsion bounds") {
    CHECK(torsion_bound(curve(1), {3}) == 51);
    CHECK(torsion_bound(curve(2), {2, 3}) == 1);
    CHECK(torsion_bound(curve(3), {3, 7}) == 1);
  }

  TEST_CASE("r14 and the constant c") {
    const R14Result r1 = r14_and_c(bitangents_fq(curve(1), 5));
    CHECK(r1.identity_holds);
    CHECK(r1.c_in_prime_field);
    CHECK(r1.minus_c_square);
    const BitangentSet b4 = bitangents_fq(curve(4), 7);
    CHECK(b4.r == 7);
    const R14Result r4 = r14_and_c(b4);
    CHECK(r4.identity_holds);
    CHECK(r4.c_in_prime_field);
    CHECK(r4.minus_c_square_prime_field);
    CHECK(r4.minus_c_square);
  }

  TEST_CASE("reduction flags") {
    const ReductionFlags a = reduction_flags(curve(1), 29);
    CHECK_FALSE(a.good);
    CHECK(a.mult1_node);
    CHECK(a.geom_irreducible);
    CHECK_FALSE(a.weil_hensel_point);
    const ReductionFlags b = reduction_flags(curve(1), 5);
    CHECK(b.good);
    const ReductionFlags c = reduction_flags(curve(4), 97103);
    CHECK_FALSE(c.good);
    CHECK(c.mult1_node);
    CHECK(c.geom_irreducible);
    CHECK(c.weil_hensel_point);
    // (x^2 + y^2)(x^2 - z^2)
    const MPoly<BigInt> u = quartic_from_coeffs(qdesc::testing::coeffs({1, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0}));
    CHECK_FALSE(geometrically_irreducible(u, 7));
    CHECK(geometrically_irreducible(curve(1), 7));
    CHECK(valuation(BigInt(4727), 29) == 1);
  }
}
