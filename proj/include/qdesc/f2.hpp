#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdesc {

// Bit-packed vector over F2.
class F2Vec {
 public:
  F2Vec() = default;
  explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static F2Vec unit(std::size_t n, std::size_t i) {
    F2Vec v(n);
    v.set(i, true);
    return v;
  }
  static F2Vec ones(std::size_t n);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool b) {
    if (b)
      w_[i >> 6] |= (1ULL << (i & 63));
    else
      w_[i >> 6] &= ~(1ULL << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= (1ULL << (i & 63)); }
  bool is_zero() const;
  int popcount() const;
  // Index of the lowest set bit, or size() if zero.
  std::size_t first_set() const;
  bool dot(const F2Vec& o) const;

  F2Vec& operator^=(const F2Vec& o);
  F2Vec operator^(const F2Vec& o) const {
    F2Vec r = *this;
    r ^= o;
    return r;
  }
  bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const F2Vec& o) const { return !(*this == o); }
  bool operator<(const F2Vec& o) const;

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

  // Hex string, most significant nibble first (bit i is bit i of the integer).
  std::string to_hex() const;
  static F2Vec from_hex(std::size_t n, const std::string& hex);
  std::string to_bits() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense F2 matrix stored by rows; acts on column vectors.
class F2Mat {
 public:
  F2Mat() = default;
  F2Mat(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, F2Vec(cols)) {}
  static F2Mat identity(std::size_t n);
  static F2Mat from_rows(std::size_t cols, std::vector<F2Vec> rows);
  static F2Mat from_columns(std::size_t rows, const std::vector<F2Vec>& cols);

  std::size_t rows() const { return r_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool b) { r_[i].set(j, b); }
  const F2Vec& row(std::size_t i) const { return r_[i]; }
  F2Vec& row(std::size_t i) { return r_[i]; }
  F2Vec column(std::size_t j) const;

  F2Vec apply(const F2Vec& v) const;
  F2Mat operator*(const F2Mat& o) const;
  F2Mat operator+(const F2Mat& o) const;
  bool operator==(const F2Mat& o) const { return cols_ == o.cols_ && r_ == o.r_; }
  bool operator!=(const F2Mat& o) const { return !(*this == o); }
  F2Mat transpose() const;
  int rank() const;
  bool is_identity() const;
  // Throws if singular.
  F2Mat inverse() const;
  // Basis of {v : A v = 0}.
  std::vector<F2Vec> kernel() const;
  // Basis of the column space (image).
  std::vector<F2Vec> image() const;

 private:
  std::size_t cols_ = 0;
  std::vector<F2Vec> r_;
};

// Subspace of F2^n held as a fully reduced echelon basis (pivot = lowest set bit),
// rows sorted by pivot. Equal subspaces have identical bases.
class F2Subspace {
 public:
  F2Subspace() = default;
  explicit F2Subspace(std::size_t n) : n_(n) {}
  static F2Subspace span(std::size_t n, const std::vector<F2Vec>& vectors);
  static F2Subspace whole(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<F2Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // v minus its projection onto the span (zero iff v is in the subspace).
  F2Vec reduce(F2Vec v) const;
  bool contains(const F2Vec& v) const { return reduce(v).is_zero(); }
  bool contains(const F2Subspace& o) const;
  // Adds v; returns false if it was already in the span.
  bool insert(const F2Vec& v);

  F2Subspace operator+(const F2Subspace& o) const;
  F2Subspace intersect(const F2Subspace& o) const;
  // Orthogonal complement under the standard dot product.
  F2Subspace perp() const;
  bool operator==(const F2Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const F2Subspace& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  std::vector<F2Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace qdesc
