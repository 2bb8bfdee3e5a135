#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "qdesc/error.hpp"
#include "qdesc/ffpoly.hpp"
#include "qdesc/linalg.hpp"
#include "qdesc/resultant.hpp"

using namespace qdesc;

namespace {

UPoly<BigInt> zpoly(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return UPoly<BigInt>(v, BigInt(0));
}

UPoly<BigInt> random_zpoly(std::mt19937_64& rng, int deg) {
  std::vector<long> c;
  for (int i = 0; i <= deg; ++i) c.push_back(static_cast<long>(rng() % 21) - 10);
  if (c.back() == 0) c.back() = 1;
  return zpoly(c);
}

MPoly<BigInt> random_form(std::mt19937_64& rng, int deg, int bound) {
  MPoly<BigInt> f(BigInt(0));
  for (const auto& m : monomials_of_degree(deg))
    f += MPoly<BigInt>::term(m, BigInt(static_cast<long>(rng() % (2 * bound + 1)) - bound));
  return f;
}

}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("univariate resultant") {
    CHECK(resultant(zpoly({-1, 1}), zpoly({1, 1})) == 2);
    CHECK(resultant(zpoly({1, 0, 1}), zpoly({1, 0, 1})) == 0);
    CHECK_THROWS_AS(resultant(UPoly<BigInt>(BigInt(0)), UPoly<BigInt>(BigInt(0))), Error);
  }

  TEST_CASE("resultant antisymmetry on random pairs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      const int m = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 6);
      const auto f = random_zpoly(rng, m), g = random_zpoly(rng, n);
      const BigInt sign = (m * n) % 2 ? -1 : 1;
      CHECK(resultant(f, g) == sign * resultant(g, f));
    }
  }

  TEST_CASE("resultant of h and h' for curve 1 is nonzero") {
    // nonzero mod 5 (leading coefficient prime to 5) forces nonzero over Z
    const auto bp = bitangent_poly(testing::curve(1), {5});
    const FqPoly h = reduce_poly(bp.h, FqField::get(5));
    REQUIRE(h.degree() == 28);
    CHECK_FALSE(resultant(h, derivative(h)).is_zero());
  }

  TEST_CASE("Macaulay resultant of cubics") {
    using P = MPoly<BigInt>;
    const P x3 = P::term({3, 0, 0}, 1), y3 = P::term({0, 3, 0}, 1), z3 = P::term({0, 0, 3}, 1);
    const BigInt u = macaulay_resultant_cubics(x3, y3, z3);
    CHECK((u == 1 || u == -1));
    const P f = testing::fermat();
    CHECK(macaulay_resultant_cubics(f.derivative(0), f.derivative(1), f.derivative(2)) > 0);
    // x^4 + 5 (y^4 + z^4) is x^4 mod 5
    const P g = P::term({4, 0, 0}, 1) + P::term({0, 4, 0}, 5) + P::term({0, 0, 4}, 5);
    const BigInt r = macaulay_resultant_cubics(g.derivative(0), g.derivative(1), g.derivative(2));
    CHECK(r % 5 == 0);
    CHECK(r != 0);
  }

  TEST_CASE("Macaulay resultant rejects wrong degrees") {
    using P = MPoly<BigInt>;
    const P x2 = P::term({2, 0, 0}, 1), y3 = P::term({0, 3, 0}, 1);
    CHECK_THROWS_AS(macaulay_resultant_cubics(x2, y3, y3), Error);
  }

  TEST_CASE("Macaulay resultant vanishes exactly at common zeros of random cubics mod p") {
    std::mt19937_64 rng(5);
    int vanished = 0;
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const FqField& F = FqField::get(p);
      for (int t = 0; t < 30; ++t) {
        std::array<MPoly<FqElem>, 3> f;
        for (auto& c : f) c = reduce_mod(random_form(rng, 3, 3), F);
        if (t % 3 == 0) {
          // force a common zero at (1:0:0) for a third of the cases
          for (auto& c : f) c = c - MPoly<FqElem>::term({3, 0, 0}, c.coeff({3, 0, 0}));
        }
        const FqElem r = macaulay_resultant_cubics(f[0], f[1], f[2]);
        // common zeros by exhaustive search over F_{p^k}; a generic triple of cubics with a
        // common zero has exactly one, which is then rational, so larger k is only searched
        // when the resultant vanishes
        bool common = false;
        for (int k = 1; k <= (r.is_zero() ? 4 : 2) && !common; ++k) {
          const FqField& K = FqField::get(p, k);
          std::vector<FqElem> el;
          for (std::uint64_t i = 0; i < K.order().get_ui(); ++i) {
            std::vector<std::uint32_t> c(k);
            std::uint64_t v = i;
            for (int j = 0; j < k; ++j, v /= p) c[j] = static_cast<std::uint32_t>(v % p);
            el.push_back(K.from_coeffs(c));
          }
          std::array<MPoly<FqElem>, 3> fk;
          const FqEmbedding emb(F, K);
          for (int i = 0; i < 3; ++i) fk[i] = f[i].map_coeffs([&](const FqElem& a) { return emb(a); }, K.zero());
          auto zero_at = [&](const FqElem& x, const FqElem& y, const FqElem& z) {
            return fk[0].eval(x, y, z).is_zero() && fk[1].eval(x, y, z).is_zero() && fk[2].eval(x, y, z).is_zero();
          };
          for (const auto& x : el)
            for (const auto& y : el)
              if (zero_at(x, y, K.one())) common = true;
          for (const auto& x : el)
            if (zero_at(x, K.one(), K.zero())) common = true;
          if (zero_at(K.one(), K.zero(), K.zero())) common = true;
        }
        if (common) CHECK(r.is_zero());
        if (r.is_zero()) ++vanished;
        if (r.is_zero()) CHECK(common);
      }
    }
    CHECK(vanished >= 30);
  }

  TEST_CASE("ddf examples") {
    const FqField& F3 = FqField::get(3);
    CHECK(ddf_factor_degrees(fq_poly_from_ints(F3, {1, 0, 1})) == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(ddf_factor_degrees(fq_poly_from_ints(F3, {-1, 0, 1})) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK_THROWS_AS(ddf_factor_degrees(fq_poly_from_ints(F3, {1, 2, 1})), Error);
  }

  TEST_CASE("ddf of curve 1 bitangent polynomial sums to 28 at good primes") {
    const auto bp = bitangent_poly(testing::curve(1), {3, 5, 7});
    for (std::uint32_t p : {3u, 5u, 7u}) {
      int total = 0;
      for (auto [d, n] : ddf_factor_degrees(monic(reduce_poly(bp.h, FqField::get(p))))) total += d * n;
      CHECK(total == 28);
    }
  }

  TEST_CASE("fq_roots examples") {
    const FqField& F5 = FqField::get(5);
    auto r = fq_roots(fq_poly_from_ints(F5, {-1, 0, 1}));
    std::sort(r.begin(), r.end());
    REQUIRE(r.size() == 2);
    CHECK(r[0].to_prime_field() == 1);
    CHECK(r[1].to_prime_field() == 4);
    const FqField& F3 = FqField::get(3);
    CHECK(fq_roots(fq_poly_from_ints(F3, {0, -1, 0, 1})).size() == 3);
  }

  TEST_CASE("curve 1 projected polynomial mod 3 has 28 roots in its splitting field") {
    const auto bp = bitangent_poly(testing::curve(1), {3});
    const FqPoly h = monic(reduce_poly(bp.h, FqField::get(3)));
    int r = 1;
    for (auto [d, n] : ddf_factor_degrees(h)) r = std::lcm(r, d);
    CHECK(fq_roots(reduce_poly(bp.h, FqField::get(3, r))).size() == 28);
  }

  TEST_CASE("ddf agrees with root counts over extensions") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const FqField& F = FqField::get(p);
      for (int t = 0; t < 15; ++t) {
        const int deg = 2 + static_cast<int>(rng() % 7);
        std::vector<std::int64_t> c;
        for (int i = 0; i < deg; ++i) c.push_back(static_cast<std::int64_t>(rng() % p));
        c.push_back(1);
        FqPoly f = fq_poly_from_ints(F, c);
        f = exact_div(f, gcd(f, derivative(f)));
        if (f.degree() < 1 || gcd(f, derivative(f)).degree() > 0) continue;
        std::map<int, int> expect;
        for (auto [d, n] : ddf_factor_degrees(f)) expect[d] = n;
        // #roots in F_{p^d} = sum over e | d of e n_e
        std::map<int, int> got;
        for (int d = 1; d <= f.degree(); ++d) {
          const FqField& K = FqField::get(p, d);
          const FqEmbedding emb(F, K);
          std::vector<FqElem> ck;
          for (const auto& a : f.coeffs()) ck.push_back(emb(a));
          int count = static_cast<int>(fq_roots(FqPoly(ck, K.zero())).size());
          for (int e = 1; e < d; ++e)
            if (d % e == 0 && got.count(e)) count -= e * got.at(e);
          if (count) got[d] = count / d;
        }
        CHECK(got == expect);
      }
    }
  }

  TEST_CASE("factor_int") {
    using V = std::vector<std::pair<BigInt, int>>;
    CHECK(factor_int(4727) == V{{29, 1}, {163, 1}});
    CHECK(factor_int(14227) == V{{41, 1}, {347, 1}});
    CHECK(factor_int(4826809) == V{{13, 6}});
    CHECK(factor_int(BigInt("-845805971200")) == V{{2, 8}, {5, 2}, {1361, 1}, {97103, 1}});
    CHECK_THROWS_AS(factor_int(0), Error);
    const BigInt big = BigInt("1000000007") * BigInt("998244353") * 12;
    BigInt prod = 1;
    for (const auto& [p, e] : factor_int(big)) {
      CHECK(is_probable_prime(p));
      prod *= pow(p, e);
    }
    CHECK(prod == big);
  }

  TEST_CASE("ring axioms on random values") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      const BigInt a(static_cast<long>(rng() % 100000) - 50000), b(static_cast<long>(rng() % 1000) + 1),
          c(static_cast<long>(rng() % 77) - 30);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      BigRat x(a, b), y(c, b + 3), z(b, 7);
      x.canonicalize();
      y.canonicalize();
      z.canonicalize();
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
    for (auto [p, r] : {std::pair{2u, 5}, {3u, 4}, {7u, 3}, {5u, 1}}) {
      const FqField& F = FqField::get(p, r);
      for (int t = 0; t < 30; ++t) {
        const FqElem a = F.random(rng), b = F.random(rng), c = F.random(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == F.one());
      }
    }
    for (int t = 0; t < 10; ++t) {
      const auto f = random_form(rng, 2, 5), g = random_form(rng, 3, 5), h = random_form(rng, 1, 5);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + g * h) == f * g + f * g * h);
    }
  }

  TEST_CASE("Frobenius has order r on a generator of F_{p^r}, r prime") {
    for (auto [p, r] : {std::pair{2u, 7}, {3u, 5}, {5u, 3}, {7u, 2}, {13u, 3}}) {
      const FqElem g = FqField::get(p, r).gen();
      FqElem x = g;
      int order = 0;
      do {
        x = x.frobenius();
        ++order;
      } while (x != g);
      CHECK(order == r);
    }
  }

  TEST_CASE("field moduli are the least irreducibles") {
    // x^2 + 1 over F_3 is the least monic irreducible quadratic; over F_5 it is x^2 + 2
    CHECK(FqField::get(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(FqField::get(5, 2).modulus() == std::vector<std::uint32_t>{2, 0, 1});
  }
}
