#include "qdesc/permgrp.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "qdesc/error.hpp"

namespace qdesc {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<std::uint32_t> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error("domain", "generator degree mismatch", g.to_string());
    gens_.push_back(std::move(g));
  }
  build(std::move(base_prefix));
}

void PermGroup::recompute_level(std::size_t i) {
  const Perm id = Perm::identity(degree_);
  orbit_[i].assign(1, base_[i]);
  pos_[i].assign(degree_, -1);
  pos_[i][base_[i]] = 0;
  trans_[i].assign(1, id);
  trans_inv_[i].assign(1, id);
  for (std::size_t k = 0; k < orbit_[i].size(); ++k) {
    const std::uint32_t gamma = orbit_[i][k];
    for (const Perm& s : strong_[i]) {
      const std::uint32_t delta = s(gamma);
      if (pos_[i][delta] >= 0) continue;
      pos_[i][delta] = static_cast<std::int32_t>(orbit_[i].size());
      orbit_[i].push_back(delta);
      Perm u = s * trans_[i][k];
      trans_inv_[i].push_back(u.inverse());
      trans_[i].push_back(std::move(u));
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm h, std::size_t from) const {
  for (std::size_t l = from; l < base_.size(); ++l) {
    const std::int32_t k = pos_[l][h(base_[l])];
    if (k < 0) return {std::move(h), l};
    h = trans_inv_[l][k] * h;
  }
  return {std::move(h), base_.size()};
}

void PermGroup::build(std::vector<std::uint32_t> base_prefix) {
  std::vector<Perm> s;
  for (const auto& g : gens_)
    if (!g.is_identity()) s.push_back(g);
  for (auto b : base_prefix) {
    if (b >= degree_) throw Error("domain", "base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
  }
  auto fixes_base = [&](const Perm& p, std::size_t upto) {
    for (std::size_t j = 0; j < upto; ++j)
      if (p(base_[j]) != base_[j]) return false;
    return true;
  };
  for (const auto& g : s) {
    if (fixes_base(g, base_.size())) base_.push_back(g.least_moved_point());
  }
  const std::size_t k = base_.size();
  strong_.assign(k, {});
  orbit_.assign(k, {});
  pos_.assign(k, {});
  trans_.assign(k, {});
  trans_inv_.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& g : s)
      if (fixes_base(g, i)) strong_[i].push_back(g);
    recompute_level(i);
  }
  std::size_t i = base_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t a = 0; a < orbit_[i].size() && !restarted; ++a) {
      for (std::size_t b = 0; b < strong_[i].size() && !restarted; ++b) {
        const Perm& sg = strong_[i][b];
        const std::uint32_t img = sg(orbit_[i][a]);
        Perm h = trans_inv_[i][pos_[i][img]] * sg * trans_[i][a];
        auto [res, j] = sift(std::move(h), i + 1);
        if (res.is_identity()) continue;
        if (j == base_.size()) {
          base_.push_back(res.least_moved_point());
          strong_.emplace_back();
          orbit_.emplace_back();
          pos_.emplace_back();
          trans_.emplace_back();
          trans_inv_.emplace_back();
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          strong_[l].push_back(res);
          recompute_level(l);
        }
        i = j + 1;  // the loop decrement resumes at level j
        restarted = true;
      }
    }
  }
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const auto& orb : orbit_) o *= static_cast<unsigned long>(orb.size());
  return o;
}

std::uint64_t PermGroup::order_u64() const {
  BigInt o = order();
  if (!o.fits_ulong_p()) throw Error("capacity", "group order exceeds 64 bits", to_string(o));
  return o.get_ui();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw Error("domain", "degree mismatch in membership test");
  auto [res, j] = sift(p, 0);
  return j == base_.size() && res.is_identity();
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  std::vector<std::uint32_t> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens_)
    for (std::uint32_t x = 0; x < degree_; ++x) {
      std::uint32_t a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t x = 0; x < degree_; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

void PermGroup::check_enumerable() const {
  if (order() > kEnumerationCap) throw Error("capacity", "group too large to enumerate", to_string(order()));
}

Perm PermGroup::element(std::uint64_t rank) const {
  Perm g = Perm::identity(degree_);
  for (std::size_t l = base_.size(); l-- > 0;) {
    const std::uint64_t sz = orbit_[l].size();
    g = trans_[l][rank % sz] * g;
    rank /= sz;
  }
  if (rank != 0) throw Error("domain", "element rank out of range");
  return g;
}

std::uint64_t PermGroup::rank(const Perm& p) const {
  Perm h = p;
  std::uint64_t r = 0;
  for (std::size_t l = 0; l < base_.size(); ++l) {
    const std::int32_t k = pos_[l][h(base_[l])];
    if (k < 0) throw Error("domain", "element not in group", p.to_string());
    r = r * orbit_[l].size() + static_cast<std::uint64_t>(k);
    h = trans_inv_[l][k] * h;
  }
  if (!h.is_identity()) throw Error("domain", "element not in group", p.to_string());
  return r;
}

void PermGroup::for_each_element(const std::function<void(std::uint64_t, const Perm&)>& f) const {
  check_enumerable();
  const std::size_t m = base_.size();
  if (m == 0) {
    f(0, Perm::identity(degree_));
    return;
  }
  std::vector<Perm> partial(m + 1, Perm::identity(degree_));
  std::vector<std::size_t> idx(m, 0);
  std::uint64_t rank = 0;
  // partial[l+1] = partial[l] * trans_[l][idx[l]]
  for (std::size_t l = 0; l < m; ++l) partial[l + 1] = partial[l] * trans_[l][0];
  for (;;) {
    f(rank++, partial[m]);
    std::size_t l = m;
    while (l > 0) {
      --l;
      if (++idx[l] < orbit_[l].size()) break;
      idx[l] = 0;
      if (l == 0) return;
    }
    for (std::size_t t = l; t < m; ++t) partial[t + 1] = partial[t] * trans_[t][idx[t]];
  }
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(degree_);
  for (std::size_t l = base_.size(); l-- > 0;) g = trans_[l][rng() % orbit_[l].size()] * g;
  return g;
}

PermGroup stabilizer(const PermGroup& g, std::uint32_t point) {
  if (point >= g.degree()) throw Error("domain", "point out of range");
  PermGroup c(g.degree(), g.generators(), {point});
  if (c.levels() == 0) return PermGroup::trivial(g.degree());
  std::vector<Perm> gens = c.levels() > 1 ? c.level_generators(1) : std::vector<Perm>{};
  return PermGroup(g.degree(), gens);
}

PermGroup set_stabilizer(const PermGroup& g, const std::vector<std::uint32_t>& block, std::uint64_t node_cap) {
  std::vector<std::uint32_t> blk = block;
  std::sort(blk.begin(), blk.end());
  blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
  for (auto b : blk)
    if (b >= g.degree()) throw Error("domain", "block point out of range");
  std::vector<bool> in_block(g.degree(), false);
  for (auto b : blk) in_block[b] = true;
  PermGroup c(g.degree(), g.generators(), blk);
  // Levels [0, depth) have base points in the block; deeper levels fix the block pointwise.
  std::size_t depth = 0;
  while (depth < c.levels() && in_block[c.base()[depth]]) ++depth;
  std::vector<Perm> gens = depth < c.levels() ? c.level_generators(depth) : std::vector<Perm>{};
  PermGroup h(g.degree(), gens);
  std::uint64_t nodes = 0;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& partial) {
    if (++nodes > node_cap) throw Error("capacity", "set stabilizer search exceeded node budget");
    if (l == depth) {
      if (!h.contains(partial)) {
        gens.push_back(partial);
        h = PermGroup(g.degree(), gens);
      }
      return;
    }
    for (std::size_t k = 0; k < c.level_orbit(l).size(); ++k) {
      Perm next = partial * c.transversal(l, k);
      if (in_block[next(c.base()[l])]) rec(l + 1, next);
    }
  };
  rec(0, Perm::identity(g.degree()));
  return h;
}

std::vector<Perm> cyclic_subgroups(const PermGroup& g, std::optional<std::uint64_t> max_order) {
  std::vector<Perm> out;
  g.for_each_element([&](std::uint64_t, const Perm& x) {
    const std::uint64_t n = x.order();
    if (max_order && n > *max_order) return;
    // x is recorded only if it is the least generator of <x>
    Perm pk = x;
    for (std::uint64_t k = 2; k < n; ++k) {
      pk = pk * x;
      if (std::gcd(k, n) == 1 && pk < x) return;
    }
    out.push_back(x);
  });
  return out;
}

std::map<std::vector<int>, std::uint64_t> cycle_type_census(const PermGroup& g) {
  std::map<std::vector<int>, std::uint64_t> census;
  g.for_each_element([&](std::uint64_t, const Perm& x) { census[x.cycle_type()] += 1; });
  return census;
}

std::optional<std::vector<Perm>> closure_bounded(std::size_t degree, const std::vector<Perm>& gens, std::uint64_t cap) {
  std::vector<Perm> elems{Perm::identity(degree)};
  std::unordered_set<Perm, PermHash> seen(elems.begin(), elems.end());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : gens) {
      Perm y = s * elems[k];
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        elems.push_back(std::move(y));
      }
    }
  }
  return elems;
}

std::optional<PermGroup> search_subgroup(const PermGroup& g, std::uint64_t target_order, bool require_transitive,
                                         std::uint64_t seed, std::uint64_t cap) {
  const BigInt order = g.order();
  if (order == BigInt(static_cast<unsigned long>(target_order))) {
    if (!require_transitive || g.is_transitive()) return g;
    return std::nullopt;
  }
  if (target_order == 0 || order % static_cast<unsigned long>(target_order) != 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  auto sample = [&](std::uint64_t& budget) -> std::optional<Perm> {
    while (budget > 0) {
      --budget;
      Perm x = g.random_element(rng);
      if (!x.is_identity() && target_order % x.order() == 0) return x;
    }
    return std::nullopt;
  };
  std::uint64_t budget = cap;
  while (budget > 0) {
    auto x = sample(budget);
    if (!x) break;
    std::vector<Perm> gens{*x};
    std::uint64_t size = x->order();
    for (int extra = 0; extra < 2 && size < target_order; ++extra) {
      auto y = sample(budget);
      if (!y) break;
      std::vector<Perm> trial = gens;
      trial.push_back(*y);
      auto cl = closure_bounded(g.degree(), trial, target_order);
      if (!cl || target_order % cl->size() != 0) continue;
      if (cl->size() == size) continue;
      gens = std::move(trial);
      size = cl->size();
    }
    if (size != target_order) continue;
    PermGroup h(g.degree(), gens);
    if (require_transitive && !h.is_transitive()) continue;
    return h;
  }
  return std::nullopt;
}

}  // namespace qdesc
