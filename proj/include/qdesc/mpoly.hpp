#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdesc/bigint.hpp"
#include "qdesc/error.hpp"
#include "qdesc/fq.hpp"

namespace qdesc {

// Exponent vector in x, y, z.
using Mono = std::array<int, 3>;

inline int mono_degree(const Mono& m) { return m[0] + m[1] + m[2]; }

// Degree-lexicographic order with x > y > z; `true` when a is greater than b.
struct DegLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Monomials of degree d in descending deg-lex order.
inline std::vector<Mono> monomials_of_degree(int d) {
  std::vector<Mono> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

inline bool divides(const Mono& a, const Mono& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

// Sparse polynomial in x, y, z. Terms are kept in descending deg-lex order; zero
// coefficients are never stored.
template <class T>
class MPoly {
 public:
  using Terms = std::map<Mono, T, DegLexGreater>;

  MPoly() = default;
  explicit MPoly(T zero) : zero_(std::move(zero)) {}

  static MPoly constant(const T& c) {
    MPoly r(zero_of(c));
    r.add_term({0, 0, 0}, c);
    return r;
  }
  static MPoly term(const Mono& m, const T& c) {
    MPoly r(zero_of(c));
    r.add_term(m, c);
    return r;
  }
  // Variable i (0=x, 1=y, 2=z).
  static MPoly var(int i, const T& proto) {
    Mono m{0, 0, 0};
    m[i] = 1;
    return term(m, one_of(proto));
  }

  const Terms& terms() const { return t_; }
  const T& zero() const { return zero_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : mono_degree(t_.begin()->first); }
  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : t_)
      if (mono_degree(m) != d) return false;
    return true;
  }
  const Mono& leading_mono() const { return t_.begin()->first; }
  const T& leading_coeff() const { return t_.begin()->second; }

  T coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? zero_ : it->second;
  }

  void add_term(const Mono& m, const T& c) {
    if (is_zero_value(c)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
      return;
    }
    it->second += c;
    if (is_zero_value(it->second)) t_.erase(it);
  }

  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, zero_ - c);
    return r;
  }
  MPoly operator-() const { return MPoly(zero_) - *this; }
  MPoly operator*(const MPoly& o) const {
    MPoly r(zero_);
    for (const auto& [a, ca] : t_)
      for (const auto& [b, cb] : o.t_) r.add_term({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, ca * cb);
    return r;
  }
  MPoly operator*(const T& s) const {
    MPoly r(zero_);
    for (const auto& [m, c] : t_) r.add_term(m, c * s);
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(t_ == o.t_); }

  T eval(const T& x, const T& y, const T& z) const {
    T r = zero_;
    for (const auto& [m, c] : t_) {
      T v = c;
      for (int i = 0; i < m[0]; ++i) v = v * x;
      for (int i = 0; i < m[1]; ++i) v = v * y;
      for (int i = 0; i < m[2]; ++i) v = v * z;
      r += v;
    }
    return r;
  }

  MPoly derivative(int var) const {
    MPoly r(zero_);
    for (const auto& [m, c] : t_) {
      if (m[var] == 0) continue;
      Mono n = m;
      n[var] -= 1;
      r.add_term(n, c * from_int(zero_, m[var]));
    }
    return r;
  }

  // Substitutes x_i -> subs[i] (arbitrary polynomials).
  MPoly substitute(const std::array<MPoly, 3>& subs) const {
    MPoly r(zero_);
    std::array<std::vector<MPoly>, 3> powers;
    for (const auto& [m, c] : t_) {
      MPoly v = constant(c);
      for (int i = 0; i < 3; ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(one_of(zero_)));
        while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * subs[i]);
        v = v * pw[m[i]];
      }
      r += v;
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F f, const decltype(f(std::declval<T>()))& zero) const {
    MPoly<decltype(f(std::declval<T>()))> r(zero);
    for (const auto& [m, c] : t_) r.add_term(m, f(c));
    return r;
  }

 private:
  static bool is_zero_value(const T& c) { return qdesc::is_zero(c); }
  Terms t_;
  T zero_{};
};

// Normal form of f modulo g: no remaining term is divisible by LM(g). For homogeneous g.
template <class T>
MPoly<T> normal_form(MPoly<T> f, const MPoly<T>& g) {
  if (g.is_zero()) throw Error("domain", "reduction by zero polynomial");
  const Mono lm = g.leading_mono();
  const T lc = g.leading_coeff();
  MPoly<T> r(f.zero());
  while (!f.is_zero()) {
    auto it = f.terms().begin();
    Mono m = it->first;
    T c = it->second;
    if (divides(lm, m)) {
      Mono s{m[0] - lm[0], m[1] - lm[1], m[2] - lm[2]};
      f -= MPoly<T>::term(s, exact_div(c, lc)) * g;
    } else {
      r.add_term(m, c);
      f.add_term(m, f.zero() - c);
    }
  }
  return r;
}

inline std::string to_string_coeff(const BigInt& c) { return to_string(c); }
inline std::string to_string_coeff(const BigRat& c) { return to_string(c); }
inline std::string to_string_coeff(const FqElem& c) { return c.to_string(); }

inline const char* kVarNames[3] = {"x", "y", "z"};

template <class T>
std::string to_string(const MPoly<T>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string_coeff(c) + ")";
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      s += std::string("*") + kVarNames[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace qdesc
