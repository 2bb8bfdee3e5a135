#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "qdesc/bigint.hpp"
#include "qdesc/error.hpp"
#include "qdesc/fq.hpp"

namespace qdesc {

template <class T>
class UPoly;
template <class T>
bool is_zero(const UPoly<T>& a);
template <class T>
UPoly<T> zero_of(const UPoly<T>& a);
template <class T>
UPoly<T> one_of(const UPoly<T>& a);
template <class T>
UPoly<T> from_int(const UPoly<T>& a, std::int64_t v);

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
// `zero_` carries the coefficient ring (needed for FqElem, whose zero knows its field).
template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(T zero) : zero_(std::move(zero)) {}
  UPoly(std::vector<T> c, T zero) : c_(std::move(c)), zero_(std::move(zero)) { trim(); }

  static UPoly constant(const T& c) { return UPoly(std::vector<T>{c}, zero_of(c)); }
  static UPoly monomial(const T& c, int d) {
    std::vector<T> v(d + 1, zero_of(c));
    v[d] = c;
    return UPoly(std::move(v), zero_of(c));
  }
  // The variable t itself over the ring of `proto`.
  static UPoly var(const T& proto) { return monomial(one_of(proto), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
  const T& lc() const { return c_.empty() ? zero_ : c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  T one() const { return one_of(zero_); }

  void set(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, zero_);
    c_[i] = v;
    trim();
  }

  T eval(const T& x) const {
    T r = zero_;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = zero_ - a;
    return r;
  }
  UPoly operator+(const UPoly& o) const {
    UPoly r(zero_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (*this)[i] + o[i];
    r.trim();
    return r;
  }
  UPoly operator-(const UPoly& o) const {
    UPoly r(zero_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (*this)[i] - o[i];
    r.trim();
    return r;
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(zero_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (qdesc::is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(r), zero_);
  }
  UPoly operator*(const T& s) const {
    UPoly r = *this;
    for (auto& a : r.c_) a = a * s;
    r.trim();
    return r;
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(c_ == o.c_); }

 private:
  void trim() {
    while (!c_.empty() && qdesc::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
  T zero_{};
};

template <class T>
bool is_zero(const UPoly<T>& a) { return a.is_zero(); }
template <class T>
UPoly<T> zero_of(const UPoly<T>& a) { return UPoly<T>(a.zero()); }
template <class T>
UPoly<T> one_of(const UPoly<T>& a) { return UPoly<T>::constant(a.one()); }
template <class T>
UPoly<T> from_int(const UPoly<T>& a, std::int64_t v) { return UPoly<T>::constant(from_int(a.zero(), v)); }

// Division with remainder; the leading coefficient of b must be invertible via exact_div.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divrem(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw Error("domain", "polynomial division by zero");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly<T>(a.zero()), a};
  std::vector<T> q(a.degree() - db + 1, a.zero());
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    T t = exact_div(r[k], b.lc());
    q[k - db] = t;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= t * b[i];
  }
  r.resize(db, a.zero());
  return {UPoly<T>(std::move(q), a.zero()), UPoly<T>(std::move(r), a.zero())};
}

// Exact quotient a/b; throws if the division leaves a remainder.
template <class T>
UPoly<T> exact_div(const UPoly<T>& a, const UPoly<T>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error("internal", "inexact polynomial division");
  return q;
}

template <class T>
UPoly<T> operator%(const UPoly<T>& a, const UPoly<T>& b) {
  return divrem(a, b).second;
}

template <class T>
UPoly<T> monic(const UPoly<T>& a) {
  if (a.is_zero()) return a;
  return a * exact_div(a.one(), a.lc());
}

// Monic gcd over a field.
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    UPoly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class T>
UPoly<T> derivative(const UPoly<T>& a) {
  std::vector<T> d;
  for (int i = 1; i <= a.degree(); ++i) d.push_back(a[i] * from_int(a.zero(), i));
  return UPoly<T>(std::move(d), a.zero());
}

template <class T>
UPoly<T> mulmod(const UPoly<T>& a, const UPoly<T>& b, const UPoly<T>& m) {
  return (a * b) % m;
}

template <class T>
UPoly<T> powmod(UPoly<T> base, BigInt e, const UPoly<T>& m) {
  UPoly<T> r = UPoly<T>::constant(m.one()) % m;
  base = base % m;
  const size_t bits = e > 0 ? mpz_sizeinbase(e.get_mpz_t(), 2) : 0;
  for (size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
  }
  return r;
}

// f(g(t)).
template <class T>
UPoly<T> compose(const UPoly<T>& f, const UPoly<T>& g) {
  UPoly<T> r(f.zero());
  for (int i = f.degree(); i >= 0; --i) r = r * g + UPoly<T>::constant(f[i]);
  return r;
}

template <class T>
bool is_squarefree(const UPoly<T>& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, derivative(f)).degree() == 0;
}

}  // namespace qdesc
