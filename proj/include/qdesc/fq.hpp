#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qdesc/bigint.hpp"

namespace qdesc {

inline constexpr int kMaxExtDegree = 32;

class FqElem;

// F_{p^r} = F_p[x]/(m(x)); m is the lexicographically least monic irreducible of degree r
// (coefficients compared from x^{r-1} down to x^0). Instances are interned and live forever.
class FqField {
 public:
  static const FqField& get(std::uint32_t p, int r = 1);

  std::uint32_t p() const { return p_; }
  int degree() const { return r_; }
  BigInt order() const;
  // Monic modulus, coefficients low to high, length r+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(std::int64_t v) const;
  FqElem from_bigint(const BigInt& v) const;
  FqElem from_coeffs(std::span<const std::uint32_t> c) const;
  // The class of x, a generator of the field over F_p.
  FqElem gen() const;
  FqElem random(std::mt19937_64& rng) const;

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

 private:
  FqField(std::uint32_t p, int r, std::vector<std::uint32_t> modulus);
  friend class FqElem;
  friend struct FqRegistry;

  std::uint32_t p_;
  int r_;
  std::vector<std::uint32_t> modulus_;
  bool small_;  // p < 2^28: products may be accumulated without intermediate reduction
};

class FqElem {
 public:
  FqElem() = default;

  const FqField& field() const { return *f_; }
  const FqField* field_ptr() const { return f_; }
  std::span<const std::uint32_t> coeffs() const { return {c_.data(), static_cast<size_t>(f_->r_)}; }
  std::uint32_t coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  // Value as an integer when the element lies in the prime field (throws otherwise).
  std::uint32_t to_prime_field() const;
  bool in_prime_field() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const { return *this * o.inv(); }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem& operator/=(const FqElem& o) { return *this = *this / o; }
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  // Total order on encodings (coefficient vectors compared from the top), for canonical sorting.
  bool operator<(const FqElem& o) const;

  FqElem inv() const;
  FqElem pow(const BigInt& e) const;
  FqElem pow(std::uint64_t e) const;
  FqElem frobenius() const { return pow(static_cast<std::uint64_t>(f_->p_)); }
  bool is_square() const;
  // Tonelli-Shanks with the least non-square as base; false if no root exists.
  bool sqrt(FqElem& out) const;

  std::string to_string() const;

 private:
  friend class FqField;
  const FqField* f_ = nullptr;
  std::array<std::uint32_t, kMaxExtDegree> c_{};
};

inline bool is_zero(const FqElem& a) { return a.is_zero(); }
inline FqElem zero_of(const FqElem& a) { return a.field().zero(); }
inline FqElem one_of(const FqElem& a) { return a.field().one(); }
inline FqElem from_int(const FqElem& a, std::int64_t v) { return a.field().from_int(v); }
inline FqElem exact_div(const FqElem& a, const FqElem& b) { return a / b; }

// Field embedding F_{p^r} -> F_{p^s} (r | s) sending the generator of the source to a fixed
// root of its modulus in the target (the least root under FqElem ordering).
class FqEmbedding {
 public:
  FqEmbedding(const FqField& from, const FqField& to);
  FqElem operator()(const FqElem& a) const;
  const FqField& source() const { return *from_; }
  const FqField& target() const { return *to_; }

 private:
  const FqField* from_;
  const FqField* to_;
  std::vector<FqElem> powers_;  // images of x^0..x^{r-1}
};

}  // namespace qdesc
