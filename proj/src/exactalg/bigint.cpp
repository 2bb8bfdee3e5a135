#include "qdesc/bigint.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "qdesc/error.hpp"

namespace qdesc {

BigInt parse_bigint(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error("parse", "not a decimal integer", std::string(s));
  }
  BigInt r(std::string(digits), 10);
  if (s[0] == '-') r = -r;
  return r;
}

std::string to_string(const BigInt& a) { return a.get_str(10); }
std::string to_string(const BigRat& a) { return a.get_str(10); }

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite odd n.
BigInt rho_factor(const BigInt& n, std::mt19937_64& rng) {
  for (;;) {
    BigInt c = BigInt(static_cast<unsigned long>(rng() % 1000000007ULL)) % (n - 1) + 1;
    BigInt y = BigInt(static_cast<unsigned long>(rng() % 1000000007ULL)) % n;
    BigInt g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt d = x - y;
          q = (q * abs(d)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  BigInt d = rho_factor(n, rng);
  split(d, out, rng);
  split(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor_int(const BigInt& n, std::uint64_t seed) {
  if (n == 0) throw Error("domain", "factor_int: n must be nonzero");
  BigInt m = abs(n);
  std::map<BigInt, int> out;
  for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out[BigInt(p)] += 1;
      m /= p;
    }
  }
  std::mt19937_64 rng(seed);
  split(m, out, rng);
  return {out.begin(), out.end()};
}

}  // namespace qdesc
