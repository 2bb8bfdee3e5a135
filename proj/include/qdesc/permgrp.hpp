#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "qdesc/bigint.hpp"
#include "qdesc/perm.hpp"

namespace qdesc {

// Upper limit on element enumeration (census, cyclic subgroups, cohomology BFS).
inline constexpr std::uint64_t kEnumerationCap = 2000000;

// Permutation group with a stabilizer chain from deterministic Schreier-Sims.
// Base points are taken in increasing order after an optional forced prefix.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<std::uint32_t> base_prefix = {});
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  BigInt order() const;
  // Order as a machine integer; throws if it does not fit.
  std::uint64_t order_u64() const;
  bool contains(const Perm& p) const;
  std::vector<std::vector<std::uint32_t>> orbits() const;
  bool is_transitive() const;

  const std::vector<std::uint32_t>& base() const { return base_; }
  std::size_t levels() const { return base_.size(); }
  // Strong generators fixing base[0..i).
  const std::vector<Perm>& level_generators(std::size_t i) const { return strong_[i]; }
  const std::vector<std::uint32_t>& level_orbit(std::size_t i) const { return orbit_[i]; }
  // Transversal element at level i sending base[i] to level_orbit(i)[k].
  const Perm& transversal(std::size_t i, std::size_t k) const { return trans_[i][k]; }

  // Elements are u_0 u_1 ... u_{m-1} with u_i a transversal element at level i;
  // the rank is the mixed-radix number of the transversal positions, level 0 most significant.
  Perm element(std::uint64_t rank) const;
  std::uint64_t rank(const Perm& p) const;
  // Calls f(rank, element) for every element in rank order. Throws above kEnumerationCap.
  void for_each_element(const std::function<void(std::uint64_t, const Perm&)>& f) const;
  Perm random_element(std::mt19937_64& rng) const;

 private:
  void build(std::vector<std::uint32_t> base_prefix);
  void recompute_level(std::size_t i);
  // Sifts h from level `from`; returns residue and the level where sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm h, std::size_t from) const;
  void check_enumerable() const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<std::uint32_t> base_;
  std::vector<std::vector<Perm>> strong_;
  std::vector<std::vector<std::uint32_t>> orbit_;
  std::vector<std::vector<std::int32_t>> pos_;  // point -> orbit position or -1
  std::vector<std::vector<Perm>> trans_;        // u_beta mapping base point to orbit_[i][k]
  std::vector<std::vector<Perm>> trans_inv_;
};

// Pointwise stabilizer of one point.
PermGroup stabilizer(const PermGroup& g, std::uint32_t point);
// Setwise stabilizer of a block (backtrack over base images). Throws beyond `node_cap` nodes.
PermGroup set_stabilizer(const PermGroup& g, const std::vector<std::uint32_t>& block,
                         std::uint64_t node_cap = 5000000);

// One generator per cyclic subgroup (the lexicographically least generator), including the
// trivial subgroup, ordered by rank of that generator. Subgroups of order above `max_order`
// are skipped.
std::vector<Perm> cyclic_subgroups(const PermGroup& g, std::optional<std::uint64_t> max_order = std::nullopt);

// Cycle type (descending lengths) -> number of elements.
std::map<std::vector<int>, std::uint64_t> cycle_type_census(const PermGroup& g);

// Elements of <gens> by closure, or nullopt as soon as more than `cap` elements appear.
std::optional<std::vector<Perm>> closure_bounded(std::size_t degree, const std::vector<Perm>& gens, std::uint64_t cap);

// Seeded search for a subgroup of the given order generated by at most 3 sampled elements.
std::optional<PermGroup> search_subgroup(const PermGroup& g, std::uint64_t target_order, bool require_transitive,
                                         std::uint64_t seed, std::uint64_t cap);

}  // namespace qdesc
