#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdesc/f2.hpp"
#include "qdesc/f2mod.hpp"
#include "qdesc/permgrp.hpp"
#include "qdesc/thetacomb.hpp"

namespace qdesc {

// Sp6(F2) on the 28 odd labels of the genus-3 canonical structure.
PermGroup sp6_group();
// Stabilizer of the least even form, restricted to the odd labels (order 40320).
PermGroup even_form_stabilizer();

struct ModuleFamily {
  CanonicalTheta canon;
  PermGroup group;
  // subspaces of F2^28
  F2Subspace one, jt, r, e, r_perp;
  GModule E, R, Edual, Rdual, J2;
  F2Mat alpha;  // J2 -> Edual
  F2Mat q;      // Edual -> Rdual
  bool exact() const;
};

// Throws if the group does not preserve the canonical quadruples.
ModuleFamily module_family(const PermGroup& g);

// Fixed points of J2, Edual, Rdual under a subgroup H (given by generators), all as
// F2-dimensions, and coset representatives of R^vee(H) / q E^vee(H).
struct FixedRow {
  std::string place;
  BigInt group_order;
  int j2 = 0, edual = 0, rdual = 0, coker = 0;
  F2Subspace rdual_fixed;  // in Rdual coordinates
  F2Subspace q_image;      // q(E^vee(H)), in Rdual coordinates
  std::vector<F2Vec> coker_reps;
};
FixedRow fixed_row(const ModuleFamily& f, const PermGroup& h, const std::string& place);

struct LocalDatum {
  std::string place;
  std::uint32_t p = 0;     // residue characteristic
  PermGroup decomposition;
  std::optional<int> im_c_dim;  // log2 #im C_v, supplied from outside
  bool im_c_exact = true;       // false: only an upper bound is known
  std::string im_c_source;
  bool good_unramified = false;
};

// log2 #J(k_v)/2J(k_v) = dim J2(k_v), plus 3 when p = 2.
int local_size_dim(const FixedRow& row, std::uint32_t p);
// log2 #W_v = coker + im C_v - im gamma_v; zero at good unramified places.
int w_v_dim(const FixedRow& row, std::uint32_t p, std::optional<int> im_c_dim, bool good_unramified);

struct PlaceRow {
  LocalDatum datum;
  FixedRow fixed;
  int local_size = 0;
  std::optional<int> w;   // log2 #W_v (an upper bound unless w_exact)
  bool w_exact = false;
};

struct KappaResult {
  int kernel_dim = 0;
  int cokernel_dim = 0;
};
// kappa: K -> prod W_v. Places with W_v = 0 contribute nothing; places with W_v = coker q are
// used exactly; any other place (or an inexact W_v) leaves kappa undetermined and raises an error.
KappaResult kappa(const FixedRow& global, const std::vector<PlaceRow>& places);

struct RankBound {
  int selmer_dim = 0;
  int rank = 0;
  bool used_kappa = false;  // false: ker kappa bounded by K itself
};
// dim Sel_2 <= fake + dim ker kappa; rank <= dim Sel_2 - dim J2(k), rounded down to a multiple
// of `rank_multiple`.
RankBound rank_bound(int fake_selmer_dim, int kappa_kernel_dim, int j2_global_dim, int rank_multiple = 1);

struct DescentTable {
  FixedRow global;
  std::vector<PlaceRow> places;
  std::optional<KappaResult> kappa;
  std::optional<RankBound> bound;
  bool circ_asserted = false;
};
// Checks D_v <= G. kappa is filled in when every W_v is determined; the bound uses ker kappa
// when available and dim K otherwise.
DescentTable descent_table(const ModuleFamily& f, const std::vector<LocalDatum>& locals,
                           std::optional<int> fake_selmer_dim = std::nullopt, int rank_multiple = 1,
                           bool circ_asserted = false);

}  // namespace qdesc
