#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdesc/fq.hpp"
#include "qdesc/upoly.hpp"

namespace qdesc {

using FqPoly = UPoly<FqElem>;

// Distinct-degree factorization over F_q (q = field order). Pairs (d, product of all
// irreducible factors of degree d), ascending d. Requires squarefree input.
std::vector<std::pair<int, FqPoly>> ddf(const FqPoly& f);

// Multiset of irreducible-factor degrees as ascending (degree, count).
std::vector<std::pair<int, int>> ddf_factor_degrees(const FqPoly& f);

// Roots in the coefficient field, listed with multiplicity, sorted by encoding.
std::vector<FqElem> fq_roots(const FqPoly& f, std::uint64_t seed = 0);

// Full factorization into monic irreducibles (squarefree input), sorted by degree then
// coefficients. Used as an independent cross-check of ddf.
std::vector<FqPoly> factor_squarefree(const FqPoly& f, std::uint64_t seed = 0);

// Maps an F_p-polynomial (given by integer coefficients) into F_q[t].
FqPoly fq_poly_from_ints(const FqField& F, const std::vector<std::int64_t>& c);

}  // namespace qdesc
