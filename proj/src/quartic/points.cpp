#include "qdesc/error.hpp"
#include "qdesc/quartic.hpp"

namespace qdesc {

namespace {

void require_good(const MPoly<BigInt>& g, std::uint32_t p) {
  if (!is_probable_prime(BigInt(p))) throw Error("domain", "modulus is not prime", std::to_string(p));
  if (mpz_divisible_ui_p(discriminant_i27(g).get_mpz_t(), p)) throw Error("domain", "bad reduction", std::to_string(p));
}

std::vector<FqElem> field_elements(const FqField& F) {
  const std::uint64_t q = F.order().get_ui();
  std::vector<FqElem> out;
  out.reserve(q);
  std::vector<std::uint32_t> digits(F.degree(), 0);
  for (std::uint64_t n = 0; n < q; ++n) {
    std::uint64_t m = n;
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(m % F.p());
      m /= F.p();
    }
    out.push_back(F.from_coeffs(digits));
  }
  return out;
}

std::uint64_t count_unchecked(const MPoly<BigInt>& g, std::uint32_t p, int r) {
  if (r < 1 || r > 6) throw Error("domain", "extension degree out of range", std::to_string(r));
  const FqField& F = FqField::get(p, r);
  const auto elems = field_elements(F);
  // c[a][b] is the coefficient of x^a y^b z^{4-a-b}
  std::array<std::array<FqElem, 5>, 5> c;
  for (auto& row : c) row.fill(F.zero());
  for (const auto& [m, a] : g.terms()) c[m[0]][m[1]] = F.from_bigint(a);

  std::uint64_t count = 0;
  for (const auto& x : elems) {
    std::array<FqElem, 5> xp{F.one(), x, x * x, x * x * x, x * x * x * x};
    std::array<FqElem, 5> py;  // g(x, y, 1) = sum py[b] y^b
    for (int b = 0; b <= 4; ++b) {
      py[b] = F.zero();
      for (int a = 0; a + b <= 4; ++a) py[b] += c[a][b] * xp[a];
    }
    for (const auto& y : elems) {
      const FqElem v = (((py[4] * y + py[3]) * y + py[2]) * y + py[1]) * y + py[0];
      count += v.is_zero();
    }
    // (x : 1 : 0)
    FqElem v = F.zero();
    for (int a = 0; a <= 4; ++a) v += c[a][4 - a] * xp[a];
    count += v.is_zero();
  }
  count += c[4][0].is_zero();
  return count;
}

}  // namespace

std::uint64_t count_points(const MPoly<BigInt>& g, std::uint32_t p, int r) {
  require_good(g, p);
  return count_unchecked(g, p, r);
}

BigInt LPolynomial::eval(const BigInt& t) const {
  BigInt v = 0;
  for (int i = 6; i >= 0; --i) v = v * t + a[i];
  return v;
}

bool LPolynomial::functional_equation_holds() const {
  // P(T) = p^3 T^6 P(1/(pT)), i.e. a_{6-i} = p^{3-i} a_i
  for (int i = 0; i <= 3; ++i)
    if (a[6 - i] != pow(BigInt(p), 3 - i) * a[i]) return false;
  return true;
}

LPolynomial l_polynomial(const MPoly<BigInt>& g, std::uint32_t p) {
  require_good(g, p);
  LPolynomial L;
  L.p = p;
  std::array<BigInt, 4> s;  // power sums of Frobenius eigenvalues
  for (int k = 1; k <= 3; ++k) {
    L.counts[k - 1] = count_unchecked(g, p, k);
    s[k] = pow(BigInt(p), k) + 1 - BigInt(static_cast<unsigned long>(L.counts[k - 1]));
  }
  const BigInt e1 = s[1];
  const BigInt e2 = exact_div(e1 * s[1] - s[2], BigInt(2));
  const BigInt e3 = exact_div(e2 * s[1] - e1 * s[2] + s[3], BigInt(3));
  const BigInt P(p);
  L.a = {1, -e1, e2, -e3, P * e2, -P * P * e1, P * P * P};
  return L;
}

BigInt torsion_bound(const MPoly<BigInt>& g, const std::vector<std::uint32_t>& primes) {
  if (primes.empty()) throw Error("domain", "no primes given");
  BigInt odd_bound = 0;  // gcd over odd primes
  std::optional<BigInt> at_two;
  for (auto p : primes) {
    const BigInt n = l_polynomial(g, p).jacobian_order();
    if (p == 2)
      at_two = n;
    else
      odd_bound = gcd(odd_bound, n);
  }
  if (odd_bound == 0) throw Error("domain", "the 2-part of the torsion needs an odd prime");
  if (!at_two) return odd_bound;
  BigInt two_part = 1, odd = odd_bound;
  while (mpz_even_p(odd.get_mpz_t())) {
    odd /= 2;
    two_part *= 2;
  }
  BigInt n2 = *at_two;
  while (mpz_even_p(n2.get_mpz_t())) n2 /= 2;
  return two_part * gcd(odd, n2);
}

}  // namespace qdesc
