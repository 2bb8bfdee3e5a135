#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdesc/bigint.hpp"
#include "qdesc/ffpoly.hpp"
#include "qdesc/fq.hpp"
#include "qdesc/mpoly.hpp"
#include "qdesc/perm.hpp"
#include "qdesc/thetacomb.hpp"
#include "qdesc/upoly.hpp"

namespace qdesc {

// Coefficients in the order x^4, x^3y, x^3z, x^2y^2, x^2yz, x^2z^2, xy^3, xy^2z, xyz^2, xz^3,
// y^4, y^3z, y^2z^2, yz^3, z^4.
using QuarticCoeffs = std::array<BigInt, 15>;

const std::vector<Mono>& quartic_monomials();
MPoly<BigInt> quartic_from_coeffs(const QuarticCoeffs& c);
QuarticCoeffs coeffs_of(const MPoly<BigInt>& g);
MPoly<FqElem> reduce_mod(const MPoly<BigInt>& g, const FqField& F);

// I27 = 2^-14 Res(g_x, g_y, g_z), positive on x^4 + y^4 + z^4.
BigInt discriminant_i27(const MPoly<BigInt>& g);

// The fixed schedule of unimodular changes of variables tried by the bitangent elimination.
inline constexpr int kProjectionCount = 20;
using IntMat3 = std::array<std::array<std::int64_t, 3>, 3>;
IntMat3 projection_matrix(int k);
IntMat3 inverse_unimodular(const IntMat3& m);
// g(M (x,y,z)^T).
template <class T>
MPoly<T> apply_substitution(const MPoly<T>& g, const IntMat3& m) {
  std::array<MPoly<T>, 3> subs;
  for (int i = 0; i < 3; ++i) {
    subs[i] = MPoly<T>(g.zero());
    for (int j = 0; j < 3; ++j)
      if (m[i][j]) subs[i] += MPoly<T>::var(j, g.zero()) * from_int(g.zero(), m[i][j]);
  }
  return g.substitute(subs);
}

struct BitangentPoly {
  UPoly<BigInt> h;   // primitive, positive leading coefficient, degree 28, squarefree
  int projection = 0;
};
// Eliminates to the degree-28 polynomial in the first line coordinate after the first
// projection in the schedule that works. With `check_primes`, h mod p must also stay
// squarefree of degree 28 for each listed prime.
BitangentPoly bitangent_poly(const MPoly<BigInt>& g, const std::vector<std::uint32_t>& check_primes = {});
FqPoly reduce_poly(const UPoly<BigInt>& h, const FqField& F);

using Point3 = std::array<FqElem, 3>;

struct Bitangent {
  Point3 line;            // over F_{p^r}, first nonzero coordinate 1
  Point3 a, b;            // points spanning the line
  std::array<FqElem, 3> q;  // g(sa + tb) = lambda (q0 s^2 + q1 st + q2 t^2)^2
  bool double_contact = false;
  std::vector<Point3> contact_points;  // over the contact field, normalized
};

struct BitangentSet {
  std::uint32_t p = 0;
  int r = 0;                 // lcm of the DDF degrees of the projected polynomial mod p
  const FqField* field = nullptr;          // F_{p^r}
  const FqField* contact_field = nullptr;  // F_{p^{2r}}, or null when 2r exceeds the supported degree
  int projection = 0;
  FqPoly h;                                // projected polynomial over F_p
  std::vector<std::pair<int, int>> ddf_pattern;
  MPoly<FqElem> g;                         // the curve over F_{p^r}
  std::vector<Bitangent> lines;            // sorted by line coordinates
};

// Requires p odd and p not dividing I27. Contact points are skipped when `contact_points` is false.
BitangentSet bitangents_fq(const MPoly<BigInt>& g, std::uint32_t p, bool contact_points = true);

// Syzygetic quadruples via conics through three contact divisors.
IncidenceStructure syzygetic_structure(const BitangentSet& b);

Perm frobenius_on_bitangents(const BitangentSet& b);
// Degrees of the irreducible factors of h mod p, one entry per factor, descending.
std::vector<int> ddf_cycle_type(const BitangentSet& b);

// #X(F_{p^r}).
std::uint64_t count_points(const MPoly<BigInt>& g, std::uint32_t p, int r);

struct LPolynomial {
  std::uint32_t p = 0;
  std::array<BigInt, 7> a;  // P(T) = sum a_i T^i
  std::array<std::uint64_t, 3> counts{};  // #X(F_{p^r}), r = 1..3
  BigInt eval(const BigInt& t) const;
  BigInt jacobian_order() const { return eval(1); }
  bool functional_equation_holds() const;
};
LPolynomial l_polynomial(const MPoly<BigInt>& g, std::uint32_t p);

// Bound on #J(Q)_tors: full #J(F_p) at odd good p, odd part only at p = 2.
BigInt torsion_bound(const MPoly<BigInt>& g, const std::vector<std::uint32_t>& primes);

struct R14Result {
  MPoly<FqElem> r14;   // normal form mod g, leading coefficient 1
  FqElem c;
  bool identity_holds = false;
  bool c_in_prime_field = false;
  bool minus_c_square = false;              // in F_{p^r}
  bool minus_c_square_prime_field = false;  // in F_p, when c lies there
};
R14Result r14_and_c(const BitangentSet& b);

struct ReductionFlags {
  bool good = false;
  bool mult1_node = false;
  bool geom_irreducible = false;
  bool weil_hensel_point = false;
};
ReductionFlags reduction_flags(const MPoly<BigInt>& g, std::uint32_t p);
// Absolute irreducibility of g mod p. Non-reduced forms count as reducible.
bool geometrically_irreducible(const MPoly<BigInt>& g, std::uint32_t p);

// p-adic valuation of a nonzero integer.
int valuation(const BigInt& n, std::uint32_t p);

}  // namespace qdesc
