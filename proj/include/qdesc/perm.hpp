#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qdesc {

// Permutation of {0..n-1}. Product is composition of maps: (a*b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);  // validates bijectivity
  static Perm identity(std::size_t n);
  // From disjoint cycles on n points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm pow(std::int64_t k) const;
  bool is_identity() const;
  std::uint64_t order() const;
  // Cycle lengths in descending order, fixed points included.
  std::vector<int> cycle_type() const;
  std::vector<std::uint32_t> fixed_points() const;
  // Least moved point, or degree() for the identity.
  std::uint32_t least_moved_point() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

std::string cycle_type_string(const std::vector<int>& ct);

}  // namespace qdesc
