#include "qdesc/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qdesc/error.hpp"

namespace qdesc {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// a mod m over F_p (m monic not required).
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
  trim(a);
  std::uint64_t li = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t t = a.back() * li % p;
    size_t sh = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[sh + i] = (a[sh + i] + (p - t) * m[i]) % p;
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

Coeffs poly_powmod(Coeffs base, BigInt e, const Coeffs& m, std::uint64_t p) {
  Coeffs r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, m, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, m, p);
  }
  return r;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's irreducibility test for monic f of degree r over F_p.
bool rabin_irreducible(const Coeffs& f, std::uint64_t p, int r) {
  Coeffs x{0, 1};
  auto x_pow_p_k = [&](int k) {
    return poly_powmod(x, pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)), f, p);
  };
  auto minus_x = [&](Coeffs a) {
    a.resize(std::max<size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(x_pow_p_k(r)).empty()) return false;
  int n = r;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    Coeffs g = poly_gcd(f, minus_x(x_pow_p_k(r / q)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, int r) {
  if (r == 1) return {0, 1};
  std::vector<std::uint64_t> digits(r, 0);
  for (;;) {
    Coeffs f(digits.begin(), digits.end());
    f.push_back(1);
    if (f[0] != 0 && rabin_irreducible(f, p, r)) return {f.begin(), f.end()};
    int i = 0;
    while (i < r && ++digits[i] == p) digits[i++] = 0;
    if (i == r) throw Error("internal", "no irreducible polynomial found");
  }
}

}  // namespace

struct FqRegistry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FqField>> fields;

  const FqField& get(std::uint32_t p, int r) {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[{p, r}];
    if (!slot) slot.reset(new FqField(p, r, least_irreducible(p, r)));
    return *slot;
  }
};

FqField::FqField(std::uint32_t p, int r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)), small_(p < (1u << 28)) {}

const FqField& FqField::get(std::uint32_t p, int r) {
  if (r < 1 || r > kMaxExtDegree) throw Error("domain", "extension degree out of range", std::to_string(r));
  if (p < 2 || p >= (1u << 31) || !is_probable_prime(BigInt(static_cast<unsigned long>(p))))
    throw Error("domain", "characteristic must be a prime below 2^31", std::to_string(p));
  static FqRegistry registry;
  return registry.get(p, r);
}

BigInt FqField::order() const { return pow(BigInt(static_cast<unsigned long>(p_)), static_cast<unsigned long>(r_)); }

FqElem FqField::zero() const {
  FqElem e;
  e.f_ = this;
  return e;
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_int(std::int64_t v) const {
  FqElem e = zero();
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  e.c_[0] = static_cast<std::uint32_t>(m);
  return e;
}

FqElem FqField::from_bigint(const BigInt& v) const {
  BigInt m;
  mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), p_);
  return from_int(static_cast<std::int64_t>(m.get_ui()));
}

FqElem FqField::from_coeffs(std::span<const std::uint32_t> c) const {
  if (static_cast<int>(c.size()) > r_) throw Error("domain", "too many coefficients for field element");
  FqElem e = zero();
  for (size_t i = 0; i < c.size(); ++i) e.c_[i] = c[i] % p_;
  return e;
}

FqElem FqField::gen() const {
  if (r_ == 1) return zero();  // modulus is x, so x = 0
  FqElem e = zero();
  e.c_[1] = 1;
  return e;
}

FqElem FqField::random(std::mt19937_64& rng) const {
  FqElem e = zero();
  for (int i = 0; i < r_; ++i) e.c_[i] = static_cast<std::uint32_t>(rng() % p_);
  return e;
}

bool FqElem::is_zero() const {
  for (int i = 0; i < f_->r_; ++i)
    if (c_[i]) return false;
  return true;
}

bool FqElem::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < f_->r_; ++i)
    if (c_[i]) return false;
  return true;
}

bool FqElem::in_prime_field() const {
  for (int i = 1; i < f_->r_; ++i)
    if (c_[i]) return false;
  return true;
}

std::uint32_t FqElem::to_prime_field() const {
  if (!in_prime_field()) throw Error("domain", "element not in prime field", to_string());
  return c_[0];
}

FqElem FqElem::operator+(const FqElem& o) const {
  FqElem e = *this;
  const std::uint32_t p = f_->p_;
  for (int i = 0; i < f_->r_; ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    e.c_[i] = s >= p ? s - p : s;
  }
  return e;
}

FqElem FqElem::operator-(const FqElem& o) const {
  FqElem e = *this;
  const std::uint32_t p = f_->p_;
  for (int i = 0; i < f_->r_; ++i) e.c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return e;
}

FqElem FqElem::operator-() const { return f_->zero() - *this; }

FqElem FqElem::operator*(const FqElem& o) const {
  const FqField& F = *f_;
  const int r = F.r_;
  const std::uint64_t p = F.p_;
  FqElem e;
  e.f_ = f_;
  if (r == 1) {
    e.c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % p);
    return e;
  }
  std::array<std::uint64_t, 2 * kMaxExtDegree> acc{};
  if (F.small_) {
    for (int i = 0; i < r; ++i) {
      if (!c_[i]) continue;
      for (int j = 0; j < r; ++j) acc[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
    }
  } else {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j] % p) % p;
  }
  const auto& m = F.modulus_;
  for (int k = 2 * r - 2; k >= r; --k) {
    std::uint64_t t = acc[k] % p;
    if (!t) continue;
    for (int i = 0; i < r; ++i) {
      if (!m[i]) continue;
      std::uint64_t add = t * (p - m[i]);
      if (F.small_) {
        acc[k - r + i] += add;
      } else {
        acc[k - r + i] = (acc[k - r + i] + add % p) % p;
      }
    }
  }
  for (int i = 0; i < r; ++i) e.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
  return e;
}

bool FqElem::operator==(const FqElem& o) const {
  if (f_ != o.f_) return false;
  for (int i = 0; i < f_->r_; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool FqElem::operator<(const FqElem& o) const {
  for (int i = f_->r_ - 1; i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

FqElem FqElem::pow(std::uint64_t e) const {
  FqElem r = f_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FqElem FqElem::pow(const BigInt& e) const {
  if (e < 0) return inv().pow(BigInt(-e));
  FqElem r = f_->one(), b = *this;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r *= r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
  }
  return r;
}

FqElem FqElem::inv() const {
  if (is_zero()) throw Error("domain", "division by zero in finite field");
  if (f_->r_ == 1) {
    FqElem e = *this;
    e.c_[0] = static_cast<std::uint32_t>(inv_mod(c_[0], f_->p_));
    return e;
  }
  return pow(BigInt(f_->order() - 2));
}

bool FqElem::is_square() const {
  if (is_zero() || f_->p_ == 2) return true;
  return pow(BigInt((f_->order() - 1) / 2)).is_one();
}

bool FqElem::sqrt(FqElem& out) const {
  const FqField& F = *f_;
  if (is_zero()) {
    out = F.zero();
    return true;
  }
  const BigInt q = F.order();
  if (F.p_ == 2) {
    out = pow(BigInt(q / 2));
    return true;
  }
  if (!is_square()) return false;
  BigInt t = q - 1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t >>= 1;
    ++s;
  }
  // least non-square in encoding order
  FqElem z = F.zero();
  for (std::uint64_t n = 2;; ++n) {
    std::array<std::uint32_t, kMaxExtDegree> digits{};
    std::uint64_t m = n;
    for (int i = 0; i < F.r_ && m; ++i) {
      digits[i] = static_cast<std::uint32_t>(m % F.p_);
      m /= F.p_;
    }
    z = F.from_coeffs(std::span<const std::uint32_t>(digits.data(), F.r_));
    if (!z.is_zero() && !z.is_square()) break;
  }
  FqElem c = z.pow(t);
  FqElem x = pow(BigInt((t + 1) / 2));
  FqElem b = pow(t);
  unsigned long m = s;
  while (!b.is_one()) {
    unsigned long i = 0;
    FqElem bb = b;
    while (!bb.is_one()) {
      bb *= bb;
      ++i;
    }
    FqElem w = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) w *= w;
    x *= w;
    c = w * w;
    b *= c;
    m = i;
  }
  out = x;
  return true;
}

std::string FqElem::to_string() const {
  if (f_->r_ == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (int i = 0; i < f_->r_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

}  // namespace qdesc
