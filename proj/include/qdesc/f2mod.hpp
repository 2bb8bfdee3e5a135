#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qdesc/f2.hpp"
#include "qdesc/perm.hpp"
#include "qdesc/permgrp.hpp"

namespace qdesc {

// A finite F2[G]-module realized as a subquotient sub/quot of a reference space. The reference
// space is either the permutation module F2^n (g e_i = e_{g(i)}) or F2^d with explicit
// generator matrices. Action matrices act on column vectors of subquotient coordinates.
class GModule {
 public:
  GModule() = default;

  static GModule permutation(std::vector<Perm> generators, std::size_t n);
  static GModule from_matrices(std::vector<Perm> generators, std::vector<F2Mat> matrices, std::size_t dim);

  std::size_t dim() const { return lifts_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool permutation_based() const { return perm_based_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<F2Mat>& matrices() const { return mats_; }
  const F2Subspace& sub() const { return sub_; }
  const F2Subspace& quot() const { return quot_; }
  // Ambient representatives of the subquotient basis.
  const std::vector<F2Vec>& lifts() const { return lifts_; }

  // Subquotient coordinates of an ambient vector lying in sub (throws otherwise).
  F2Vec coords(const F2Vec& ambient) const;
  F2Vec lift(const F2Vec& coords) const;
  // Linear extension of coords() to the whole reference space (the residual is dropped).
  F2Vec project(const F2Vec& ambient) const;

  // Matrix of an arbitrary group element. Permutation-based modules accept any permutation
  // of the right degree; matrix-based ones only the identity and their generators.
  F2Mat element_matrix(const Perm& g) const;

  // New subquotient; bases are given in this module's coordinates. G-stability is checked
  // exactly for every generator.
  GModule sub_quotient(const std::vector<F2Vec>& sub_basis, const std::vector<F2Vec>& quot_basis) const;
  GModule dual() const;
  // Same module with the group replaced by another list of permutations (permutation-based only).
  GModule with_generators(std::vector<Perm> generators) const;

  // Checks every relation sampled from `words` random words of length <= max_len.
  bool relations_hold(std::uint64_t seed, int words = 100, int max_len = 12) const;

  // Equal subquotient bases and generator-wise equal matrices.
  bool operator==(const GModule& o) const;

 private:
  void finalize();
  F2Vec ambient_apply(const Perm& g, const F2Vec& v) const;

  std::vector<Perm> gens_;
  bool perm_based_ = true;
  std::size_t ambient_ = 0;
  std::vector<F2Mat> ambient_mats_;  // matrix-based only
  F2Subspace sub_, quot_;
  std::vector<F2Vec> lifts_;
  // quot rows and lifts together in echelon form, with the lift index (-1 for quot rows)
  std::vector<F2Vec> ech_rows_;
  std::vector<std::size_t> ech_piv_;
  std::vector<int> ech_tag_;
  std::vector<F2Mat> mats_;
  mutable std::shared_ptr<PermGroup> group_;
  friend std::vector<F2Vec> fixed_points(const GModule&, const std::vector<Perm>&);
};

// Simultaneous fixed space of the given elements, in M's coordinates.
std::vector<F2Vec> fixed_points(const GModule& m, const std::vector<Perm>& h);
inline std::vector<F2Vec> fixed_points(const GModule& m, const PermGroup& h) { return fixed_points(m, h.generators()); }

// Matrix of the natural map S1/Q1 -> S2/Q2 (needs S1 in S2 and Q1 in Q2, same reference space).
F2Mat natural_map(const GModule& from, const GModule& to);
// f * A_g == B_g * f for every generator.
bool is_equivariant(const F2Mat& f, const GModule& from, const GModule& to);

// For each subgroup H (given by generators): does f map M1^H onto M2^H?
std::vector<bool> check_fixed_surjectivity(const F2Mat& f, const GModule& from, const GModule& to,
                                           const std::vector<std::vector<Perm>>& subgroups);

// Integer matrix tau: Z^Delta -> Z^Delta', stored with rows indexed by Delta' and columns by Delta.
struct Correspondence {
  std::size_t source = 0;  // #Delta
  std::size_t target = 0;  // #Delta'
  std::vector<std::int64_t> entries;  // row-major target x source

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * source + j]; }
  // tau mod 2 as a map F2^Delta -> F2^Delta'.
  F2Mat lower_star() const;
  // transpose of tau mod 2, F2^Delta' -> F2^Delta.
  F2Mat upper_star() const;
};

// Largest module dimension accepted by correspondence_from_surjection.
inline constexpr std::size_t kMaxSurjectionDim = 20;

// The surjection Z^{M} -> M sending the basis vector of an element to that element, as an
// integer matrix with one row per module coordinate and one column per element (elements
// enumerated by their coordinate bits as an integer). Also returns the induced G-action on the
// element set when requested via `element_action`.
Correspondence correspondence_from_surjection(const GModule& m, std::vector<Perm>* element_action = nullptr);

}  // namespace qdesc
