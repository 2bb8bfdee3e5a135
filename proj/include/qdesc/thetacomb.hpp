#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdesc/f2.hpp"
#include "qdesc/perm.hpp"

namespace qdesc {

// F2^{2g} with the standard pairing e(x,y) = sum_i x_{2i} y_{2i+1} + x_{2i+1} y_{2i}.
// Vectors are integers, bit i = coordinate i.
struct SymplecticSpace {
  int g = 0;
  int dim() const { return 2 * g; }
  std::uint32_t size() const { return 1u << (2 * g); }
  int pair(std::uint32_t x, std::uint32_t y) const;
  F2Mat gram() const;
};

// A function V -> F2 given by its value table.
struct QuadForm {
  SymplecticSpace space;
  std::vector<std::uint8_t> values;

  int operator()(std::uint32_t x) const { return values[x]; }
  bool associated() const;
  // q0 + e(v, .), with q0 the base odd form.
  static QuadForm translate(const SymplecticSpace& s, std::uint32_t v);
};

// q0(x) = x0 x1 + x0 + x1 + sum_{i>0} x_{2i} x_{2i+1}; Arf invariant 1.
int base_form(const SymplecticSpace& s, std::uint32_t x);

// Throws if q is not associated to the pairing.
int arf(const QuadForm& q);

using Quad = std::array<std::uint32_t, 4>;

struct IncidenceStructure {
  std::size_t n = 0;
  std::vector<Quad> quads;  // each sorted ascending; list sorted
  void normalize();
};

struct CanonicalTheta {
  SymplecticSpace space;
  std::vector<std::uint32_t> offsets;       // label -> v with q0 + e(v,.) odd, increasing
  std::vector<std::int32_t> label_of;       // v -> label or -1
  std::vector<Quad> sigma;                  // sorted
  std::vector<std::uint32_t> transvections; // the vectors a of the generating transvections
  std::vector<Perm> generators;             // on labels
  std::vector<Perm> generators_all;         // same transvections on all 2^{2g} forms, indexed by v

  std::size_t size() const { return offsets.size(); }
  IncidenceStructure structure() const;
  bool in_sigma(const Quad& q) const;
};

// The transvection x -> x + e(x,a) a acting on offsets of translated forms.
std::uint32_t transvect_offset(const SymplecticSpace& s, std::uint32_t a, std::uint32_t v);

CanonicalTheta build_canonical(int g);

// Closed formula for |Sigma|.
std::uint64_t sigma_count_formula(int g);
// Brute force over all 4-subsets of labels.
std::uint64_t sigma_count_exhaustive(const CanonicalTheta& c);

// A function F2^n -> F2 of degree <= 2, as a value table.
struct F2Function {
  int n = 0;
  std::vector<std::uint8_t> values;
};
// Least x (as an integer) with f(x) = f(x + v) = 0 for each shift v.
std::uint32_t quad_solve(const F2Function& f, const std::vector<std::uint32_t>& shifts);

// Labels t12, t34, t56 with t1+t2+t34+t56 = t3+t4+t12+t56 = t5+t6+t12+t34 = 0.
std::array<std::uint32_t, 3> six_theta_resolution(const CanonicalTheta& c, const std::array<std::uint32_t, 6>& t);

struct SymplecticRecovery {
  std::size_t dim_p = 0;
  std::size_t dim_p0 = 0;
  std::vector<F2Vec> marking;   // label -> coordinates in P
  std::vector<F2Vec> p0_basis;  // in P coordinates
  F2Mat pairing;                // Gram matrix on p0_basis
  std::vector<std::uint8_t> q;  // quadratic form on P0, indexed by p0_basis coordinates
  int arf = 0;
};
SymplecticRecovery recover_symplectic(const IncidenceStructure& s);

// Bijection labels(A) -> labels(B) carrying A's quadruples onto B's, lexicographically least.
std::optional<std::vector<std::uint32_t>> match_structures(const IncidenceStructure& a, const IncidenceStructure& b,
                                                           std::uint64_t node_cap = 50000000);
inline std::optional<std::vector<std::uint32_t>> match_structures(const IncidenceStructure& a,
                                                                  const CanonicalTheta& b) {
  return match_structures(a, b.structure());
}

// True if `map` (labels of a -> labels of b) carries a's quadruples exactly onto b's.
bool transports(const std::vector<std::uint32_t>& map, const IncidenceStructure& a, const IncidenceStructure& b);

// True if the permutation maps the quadruple set onto itself.
bool preserves(const Perm& p, const IncidenceStructure& s);

}  // namespace qdesc
