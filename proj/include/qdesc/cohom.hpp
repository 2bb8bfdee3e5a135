#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qdesc/f2.hpp"
#include "qdesc/f2mod.hpp"
#include "qdesc/permgrp.hpp"

namespace qdesc {

// Cocycles f: G -> M are determined by their values on a generating list (s_1..s_k); a cocycle
// is stored as the concatenation f(s_1) | ... | f(s_k) of length k*dim M.
struct CocycleSpace {
  std::vector<Perm> generators;
  std::size_t module_dim = 0;
  std::vector<F2Vec> z1;  // basis of Z^1
  std::vector<F2Vec> b1;  // basis of B^1
  std::vector<F2Vec> h1;  // cocycles completing b1 to a basis of z1
  std::size_t unknowns() const { return generators.size() * module_dim; }
  std::size_t h1_dim() const { return h1.size(); }
};

// Memory ceiling for the per-element symbolic table.
inline constexpr std::uint64_t kCocycleTableBytes = 1536ull << 20;

// Breadth-first propagation of symbolic cocycle values over the Cayley graph of G.
// f(w s) = f(w) + w f(s); revisiting an element yields linear constraints on the unknowns.
class CocycleEngine {
 public:
  // `gens` must generate G; empty means "use a small generating set found from `seed`"
  // (permutation modules only, otherwise the module's own generators are used).
  CocycleEngine(const PermGroup& g, const GModule& m, std::vector<Perm> gens = {}, std::uint64_t seed = 0);

  const CocycleSpace& space() const { return space_; }
  const PermGroup& group() const { return group_; }
  // Value f(g) of the cocycle with generator values `cocycle`.
  F2Vec evaluate(const F2Vec& cocycle, const Perm& g) const;
  // Matrix of the module action of g.
  F2Mat action(const Perm& g) const;

 private:
  void run();
  void rho_rows(const Perm& w, std::vector<std::uint64_t>& rows) const;

  PermGroup group_;
  GModule module_;
  std::size_t d_ = 0, words_ = 0;
  std::vector<std::uint64_t> pi_;    // permutation modules: coordinate image of each basis vector
  std::vector<std::uint64_t> table_;  // symbolic values, |G| * d rows of words_ words
  std::vector<std::vector<std::uint64_t>> rho_table_;  // matrix modules: rows of rho(g) per element
  CocycleSpace space_;
};

CocycleSpace h1_group(const PermGroup& g, const GModule& m);

struct CyclicH1 {
  std::size_t dimension = 0;
  std::vector<F2Vec> basis;  // representatives in ker(N) of a basis of ker(N)/im(sigma - 1)
};
CyclicH1 h1_cyclic(const F2Mat& sigma, std::uint64_t n);

struct Sha1Bound {
  std::size_t dimension = 0;
  std::size_t h1_dimension = 0;
  std::size_t cyclic_subgroups = 0;
  std::vector<F2Vec> representatives;  // cocycles (generator values) spanning the bound mod B^1
  std::vector<Perm> generators;        // generating list the cocycles refer to
};
// Dimension of the intersection over all cyclic H <= G of ker(H^1(G,M) -> H^1(H,M)).
Sha1Bound sha1_bound(const PermGroup& g, const GModule& m);

// A short generating list for G found by seeded random search (falls back to pruning the
// given generators). Deterministic for a fixed seed.
std::vector<Perm> small_generating_set(const PermGroup& g, std::uint64_t seed = 0);

}  // namespace qdesc
