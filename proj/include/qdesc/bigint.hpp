#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdesc {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Parses an optionally signed decimal string. Throws Error("parse", ...) on bad input.
BigInt parse_bigint(std::string_view s);
std::string to_string(const BigInt& a);
std::string to_string(const BigRat& a);

inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(const BigRat& a) { return sgn(a) == 0; }
inline BigInt zero_of(const BigInt&) { return 0; }
inline BigInt one_of(const BigInt&) { return 1; }
inline BigRat zero_of(const BigRat&) { return 0; }
inline BigRat one_of(const BigRat&) { return 1; }

inline BigInt from_int(const BigInt&, std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigRat from_int(const BigRat&, std::int64_t v) { return BigRat(static_cast<long>(v)); }

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline BigRat exact_div(const BigRat& a, const BigRat& b) { return a / b; }

BigInt pow(const BigInt& base, unsigned long e);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
bool is_probable_prime(const BigInt& n);

// Full factorization of |n| into ascending (prime, exponent) pairs.
// Trial division to 10^4, then Pollard rho (Brent) seeded by `seed`.
std::vector<std::pair<BigInt, int>> factor_int(const BigInt& n, std::uint64_t seed = 0);

}  // namespace qdesc
