#include "qdesc/f2.hpp"

#include <algorithm>
#include <bit>

#include "qdesc/error.hpp"

namespace qdesc {

F2Vec F2Vec::ones(std::size_t n) {
  F2Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, true);
  return v;
}

bool F2Vec::is_zero() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

int F2Vec::popcount() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

std::size_t F2Vec::first_set() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
  return n_;
}

bool F2Vec::dot(const F2Vec& o) const {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

F2Vec& F2Vec::operator^=(const F2Vec& o) {
  if (o.n_ != n_) throw Error("domain", "F2 vector length mismatch");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

bool F2Vec::operator<(const F2Vec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t k = w_.size(); k-- > 0;)
    if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
  return false;
}

std::string F2Vec::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::size_t nib = std::max<std::size_t>(1, (n_ + 3) / 4);
  std::string s(nib, '0');
  for (std::size_t i = 0; i < nib; ++i) {
    int d = 0;
    for (int b = 0; b < 4; ++b) {
      std::size_t bit = 4 * i + b;
      if (bit < n_ && get(bit)) d |= 1 << b;
    }
    s[nib - 1 - i] = digits[d];
  }
  return s;
}

F2Vec F2Vec::from_hex(std::size_t n, const std::string& hex) {
  F2Vec v(n);
  const std::size_t nib = hex.size();
  for (std::size_t i = 0; i < nib; ++i) {
    char c = hex[nib - 1 - i];
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      d = c - 'A' + 10;
    else
      throw Error("parse", "bad hex digit", hex);
    for (int b = 0; b < 4; ++b) {
      if (!((d >> b) & 1)) continue;
      std::size_t bit = 4 * i + b;
      if (bit >= n) throw Error("parse", "hex value exceeds vector length", hex);
      v.set(bit, true);
    }
  }
  return v;
}

std::string F2Vec::to_bits() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

F2Mat F2Mat::identity(std::size_t n) {
  F2Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Mat F2Mat::from_rows(std::size_t cols, std::vector<F2Vec> rows) {
  F2Mat m;
  m.cols_ = cols;
  for (auto& r : rows)
    if (r.size() != cols) throw Error("domain", "row length mismatch");
  m.r_ = std::move(rows);
  return m;
}

F2Mat F2Mat::from_columns(std::size_t rows, const std::vector<F2Vec>& cols) {
  F2Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("domain", "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      if (cols[j].get(i)) m.set(i, j, true);
  }
  return m;
}

F2Vec F2Mat::column(std::size_t j) const {
  F2Vec v(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i)
    if (r_[i].get(j)) v.set(i, true);
  return v;
}

F2Vec F2Mat::apply(const F2Vec& v) const {
  if (v.size() != cols_) throw Error("domain", "matrix-vector size mismatch");
  F2Vec out(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i)
    if (r_[i].dot(v)) out.set(i, true);
  return out;
}

F2Mat F2Mat::operator*(const F2Mat& o) const {
  if (cols_ != o.rows()) throw Error("domain", "matrix product size mismatch");
  F2Mat out(r_.size(), o.cols_);
  for (std::size_t i = 0; i < r_.size(); ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (r_[i].get(k)) out.r_[i] ^= o.r_[k];
  return out;
}

F2Mat F2Mat::operator+(const F2Mat& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw Error("domain", "matrix sum size mismatch");
  F2Mat out = *this;
  for (std::size_t i = 0; i < r_.size(); ++i) out.r_[i] ^= o.r_[i];
  return out;
}

F2Mat F2Mat::transpose() const {
  F2Mat t(cols_, r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (r_[i].get(j)) t.set(j, i, true);
  return t;
}

namespace {

// Reduced row echelon form with leftmost pivots; returns pivot columns.
std::vector<std::size_t> rref_rows(std::vector<F2Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && !rows[s].get(c)) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

}  // namespace

int F2Mat::rank() const {
  std::vector<F2Vec> rows = r_;
  return static_cast<int>(rref_rows(rows, cols_).size());
}

bool F2Mat::is_identity() const { return rows() == cols_ && *this == identity(cols_); }

F2Mat F2Mat::inverse() const {
  const std::size_t n = r_.size();
  if (n != cols_) throw Error("domain", "inverse of non-square matrix");
  std::vector<F2Vec> aug;
  for (std::size_t i = 0; i < n; ++i) {
    F2Vec v(2 * n);
    for (std::size_t j = 0; j < n; ++j)
      if (r_[i].get(j)) v.set(j, true);
    v.set(n + i, true);
    aug.push_back(std::move(v));
  }
  auto piv = rref_rows(aug, n);
  if (piv.size() != n) throw Error("domain", "matrix is singular");
  F2Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug[i].get(n + j)) inv.set(i, j, true);
  return inv;
}

std::vector<F2Vec> F2Mat::kernel() const {
  std::vector<F2Vec> rows = r_;
  auto piv = rref_rows(rows, cols_);
  std::vector<bool> is_piv(cols_, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<F2Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    F2Vec v(cols_);
    v.set(f, true);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (rows[i].get(f)) v.set(piv[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<F2Vec> F2Mat::image() const {
  std::vector<F2Vec> cols;
  for (std::size_t j = 0; j < cols_; ++j) cols.push_back(column(j));
  return F2Subspace::span(r_.size(), cols).basis();
}

F2Subspace F2Subspace::span(std::size_t n, const std::vector<F2Vec>& vectors) {
  F2Subspace s(n);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

F2Subspace F2Subspace::whole(std::size_t n) {
  F2Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.rows_.push_back(F2Vec::unit(n, i));
    s.piv_.push_back(i);
  }
  return s;
}

F2Vec F2Subspace::reduce(F2Vec v) const {
  if (v.size() != n_) throw Error("domain", "vector length does not match subspace ambient");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(piv_[i])) v ^= rows_[i];
  return v;
}

bool F2Subspace::contains(const F2Subspace& o) const {
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

bool F2Subspace::insert(const F2Vec& v) {
  F2Vec r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = r.first_set();
  for (auto& row : rows_)
    if (row.get(p)) row ^= r;
  auto it = std::lower_bound(piv_.begin(), piv_.end(), p);
  const auto k = it - piv_.begin();
  piv_.insert(it, p);
  rows_.insert(rows_.begin() + k, std::move(r));
  return true;
}

F2Subspace F2Subspace::operator+(const F2Subspace& o) const {
  F2Subspace s = *this;
  for (const auto& v : o.rows_) s.insert(v);
  return s;
}

F2Subspace F2Subspace::perp() const {
  F2Mat m = F2Mat::from_rows(n_, rows_);
  return span(n_, m.kernel());
}

F2Subspace F2Subspace::intersect(const F2Subspace& o) const { return (perp() + o.perp()).perp(); }

}  // namespace qdesc
