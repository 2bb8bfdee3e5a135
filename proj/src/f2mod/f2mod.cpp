#include "qdesc/f2mod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "qdesc/error.hpp"

namespace qdesc {

GModule GModule::permutation(std::vector<Perm> generators, std::size_t n) {
  for (const auto& g : generators)
    if (g.degree() != n) throw Error("domain", "generator degree does not match module size", g.to_string());
  GModule m;
  m.gens_ = std::move(generators);
  m.perm_based_ = true;
  m.ambient_ = n;
  m.sub_ = F2Subspace::whole(n);
  m.quot_ = F2Subspace(n);
  m.finalize();
  return m;
}

GModule GModule::from_matrices(std::vector<Perm> generators, std::vector<F2Mat> matrices, std::size_t d) {
  if (generators.size() != matrices.size()) throw Error("domain", "one matrix per generator required");
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (matrices[k].rows() != d || matrices[k].cols() != d)
      throw Error("domain", "generator matrices must be square of equal size", std::to_string(k));
    if (matrices[k].rank() != static_cast<int>(d))
      throw Error("domain", "generator matrix is not invertible", std::to_string(k));
  }
  GModule m;
  m.gens_ = std::move(generators);
  m.perm_based_ = false;
  m.ambient_ = d;
  m.ambient_mats_ = std::move(matrices);
  m.sub_ = F2Subspace::whole(d);
  m.quot_ = F2Subspace(d);
  m.finalize();
  if (!m.relations_hold(0)) throw Error("domain", "generator matrices do not respect the group relations");
  return m;
}

F2Vec GModule::ambient_apply(const Perm& g, const F2Vec& v) const {
  F2Vec out(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i)
    if (v.get(i)) out.set(g(static_cast<std::uint32_t>(i)), true);
  return out;
}

void GModule::finalize() {
  ech_rows_.clear();
  ech_piv_.clear();
  ech_tag_.clear();
  lifts_.clear();
  auto reduce = [&](F2Vec v, std::vector<int>* used) {
    for (std::size_t i = 0; i < ech_rows_.size(); ++i) {
      if (!v.get(ech_piv_[i])) continue;
      v ^= ech_rows_[i];
      if (used && ech_tag_[i] >= 0) used->push_back(ech_tag_[i]);
    }
    return v;
  };
  auto add = [&](F2Vec v, int tag) {
    const std::size_t p = v.first_set();
    auto it = std::lower_bound(ech_piv_.begin(), ech_piv_.end(), p);
    const auto k = it - ech_piv_.begin();
    ech_piv_.insert(it, p);
    ech_rows_.insert(ech_rows_.begin() + k, std::move(v));
    ech_tag_.insert(ech_tag_.begin() + k, tag);
  };
  for (const auto& q : quot_.basis()) add(q, -1);
  for (const auto& s : sub_.basis()) {
    F2Vec r = reduce(s, nullptr);
    if (r.is_zero()) continue;
    lifts_.push_back(r);
    add(r, static_cast<int>(lifts_.size()) - 1);
  }
  mats_.clear();
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    F2Mat a(lifts_.size(), lifts_.size());
    for (std::size_t j = 0; j < lifts_.size(); ++j) {
      F2Vec w = perm_based_ ? ambient_apply(gens_[k], lifts_[j]) : ambient_mats_[k].apply(lifts_[j]);
      if (!sub_.contains(w)) throw Error("not_stable", "subspace is not stable under generator", std::to_string(k));
      F2Vec c = coords(w);
      for (std::size_t i = 0; i < lifts_.size(); ++i)
        if (c.get(i)) a.set(i, j, true);
    }
    mats_.push_back(std::move(a));
  }
  // the quotient subspace must be stable as well
  for (std::size_t k = 0; k < gens_.size(); ++k)
    for (const auto& q : quot_.basis()) {
      F2Vec w = perm_based_ ? ambient_apply(gens_[k], q) : ambient_mats_[k].apply(q);
      if (!quot_.contains(w))
        throw Error("not_stable", "quotient subspace is not stable under generator", std::to_string(k));
    }
}

F2Vec GModule::coords(const F2Vec& ambient) const {
  F2Vec v = ambient;
  F2Vec c(lifts_.size());
  for (std::size_t i = 0; i < ech_rows_.size(); ++i) {
    if (!v.get(ech_piv_[i])) continue;
    v ^= ech_rows_[i];
    if (ech_tag_[i] >= 0) c.flip(static_cast<std::size_t>(ech_tag_[i]));
  }
  if (!v.is_zero()) throw Error("domain", "vector is not in the submodule");
  return c;
}

F2Vec GModule::project(const F2Vec& ambient) const {
  F2Vec v = ambient;
  F2Vec c(lifts_.size());
  for (std::size_t i = 0; i < ech_rows_.size(); ++i) {
    if (!v.get(ech_piv_[i])) continue;
    v ^= ech_rows_[i];
    if (ech_tag_[i] >= 0) c.flip(static_cast<std::size_t>(ech_tag_[i]));
  }
  return c;
}

F2Vec GModule::lift(const F2Vec& c) const {
  F2Vec v(ambient_);
  for (std::size_t j = 0; j < lifts_.size(); ++j)
    if (c.get(j)) v ^= lifts_[j];
  return v;
}

F2Mat GModule::element_matrix(const Perm& g) const {
  if (!perm_based_) {
    if (g.is_identity()) return F2Mat::identity(dim());
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (gens_[k] == g) return mats_[k];
    throw Error("domain", "element matrix only available for generators of a matrix module", g.to_string());
  }
  if (g.degree() != ambient_) throw Error("domain", "permutation degree does not match module", g.to_string());
  F2Mat a(dim(), dim());
  for (std::size_t j = 0; j < lifts_.size(); ++j) {
    F2Vec c = coords(ambient_apply(g, lifts_[j]));
    for (std::size_t i = 0; i < lifts_.size(); ++i)
      if (c.get(i)) a.set(i, j, true);
  }
  return a;
}

GModule GModule::sub_quotient(const std::vector<F2Vec>& sub_basis, const std::vector<F2Vec>& quot_basis) const {
  for (const auto* basis : {&sub_basis, &quot_basis})
    for (const auto& v : *basis)
      if (v.size() != dim()) throw Error("domain", "basis vector length does not match module dimension");
  F2Subspace s = F2Subspace::span(dim(), sub_basis);
  F2Subspace q = F2Subspace::span(dim(), quot_basis);
  if (!s.contains(q)) throw Error("domain", "quotient subspace is not contained in the submodule");
  for (std::size_t k = 0; k < mats_.size(); ++k) {
    for (const auto& v : s.basis())
      if (!s.contains(mats_[k].apply(v)))
        throw Error("not_stable", "sub basis is not stable under generator " + std::to_string(k), gens_[k].to_string());
    for (const auto& v : q.basis())
      if (!q.contains(mats_[k].apply(v)))
        throw Error("not_stable", "quotient basis is not stable under generator " + std::to_string(k),
                    gens_[k].to_string());
  }
  GModule m = *this;
  m.group_.reset();
  F2Subspace ns = quot_, nq = quot_;
  for (const auto& v : s.basis()) ns.insert(lift(v));
  for (const auto& v : q.basis()) nq.insert(lift(v));
  m.sub_ = ns;
  m.quot_ = nq;
  m.finalize();
  m.group_ = group_;
  return m;
}

GModule GModule::dual() const {
  if (perm_based_) {
    GModule m = *this;
    m.sub_ = quot_.perp();
    m.quot_ = sub_.perp();
    m.finalize();
    return m;
  }
  std::vector<F2Mat> mats;
  for (const auto& a : mats_) mats.push_back(a.inverse().transpose());
  GModule m;
  m.gens_ = gens_;
  m.perm_based_ = false;
  m.ambient_ = dim();
  m.ambient_mats_ = std::move(mats);
  m.sub_ = F2Subspace::whole(dim());
  m.quot_ = F2Subspace(dim());
  m.finalize();
  return m;
}

GModule GModule::with_generators(std::vector<Perm> generators) const {
  if (!perm_based_) throw Error("domain", "only permutation modules can change their acting group");
  for (const auto& g : generators)
    if (g.degree() != ambient_) throw Error("domain", "generator degree does not match module", g.to_string());
  GModule m = *this;
  m.gens_ = std::move(generators);
  m.group_.reset();
  m.finalize();
  return m;
}

bool GModule::relations_hold(std::uint64_t seed, int words, int max_len) const {
  if (gens_.empty()) return true;
  const std::size_t n = gens_[0].degree();
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::uint32_t>, F2Mat> seen;
  for (int w = 0; w < words; ++w) {
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
    Perm p = Perm::identity(n);
    F2Mat a = F2Mat::identity(dim());
    for (int i = 0; i < len; ++i) {
      std::size_t k = rng() % gens_.size();
      p = p * gens_[k];
      a = a * mats_[k];
    }
    if (perm_based_) {
      if (element_matrix(p) != a) return false;
    } else {
      auto [it, inserted] = seen.emplace(p.images(), a);
      if (!inserted && it->second != a) return false;
      if (p.is_identity() && !a.is_identity()) return false;
    }
  }
  // words that are powers of a generator up to its order close the loop exactly
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    F2Mat a = F2Mat::identity(dim());
    for (std::uint64_t i = 0; i < gens_[k].order(); ++i) a = a * mats_[k];
    if (!a.is_identity()) return false;
  }
  return true;
}

bool GModule::operator==(const GModule& o) const {
  return ambient_ == o.ambient_ && perm_based_ == o.perm_based_ && sub_ == o.sub_ && quot_ == o.quot_ &&
         gens_ == o.gens_ && mats_ == o.mats_;
}

std::vector<F2Vec> fixed_points(const GModule& m, const std::vector<Perm>& h) {
  if (m.permutation_based() && !h.empty()) {
    if (!m.group_) {
      static std::mutex mu;
      std::lock_guard<std::mutex> lock(mu);
      if (!m.group_) m.group_ = std::make_shared<PermGroup>(m.ambient_dim(), m.generators());
    }
    for (const auto& x : h)
      if (x.degree() != m.ambient_dim() || !m.group_->contains(x))
        throw Error("domain", "element outside the acting group", x.to_string());
  }
  std::vector<F2Vec> rows;
  for (const auto& x : h) {
    F2Mat a = m.element_matrix(x) + F2Mat::identity(m.dim());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  }
  return F2Subspace::span(m.dim(), F2Mat::from_rows(m.dim(), rows).kernel()).basis();
}

F2Mat natural_map(const GModule& from, const GModule& to) {
  if (from.ambient_dim() != to.ambient_dim() || from.permutation_based() != to.permutation_based())
    throw Error("domain", "modules do not share a reference space");
  if (!to.sub().contains(from.sub()) || !to.quot().contains(from.quot()))
    throw Error("domain", "no natural map between these subquotients");
  F2Mat f(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    F2Vec c = to.coords(from.lifts()[j]);
    for (std::size_t i = 0; i < to.dim(); ++i)
      if (c.get(i)) f.set(i, j, true);
  }
  return f;
}

bool is_equivariant(const F2Mat& f, const GModule& from, const GModule& to) {
  if (f.rows() != to.dim() || f.cols() != from.dim()) throw Error("domain", "map has wrong shape");
  if (from.generators() != to.generators()) throw Error("domain", "modules have different generators");
  for (std::size_t k = 0; k < from.generators().size(); ++k)
    if (f * from.matrices()[k] != to.matrices()[k] * f) return false;
  return true;
}

std::vector<bool> check_fixed_surjectivity(const F2Mat& f, const GModule& from, const GModule& to,
                                           const std::vector<std::vector<Perm>>& subgroups) {
  if (!is_equivariant(f, from, to)) throw Error("not_equivariant", "map is not G-equivariant");
  std::vector<bool> out;
  for (const auto& h : subgroups) {
    auto src = fixed_points(from, h);
    auto dst = fixed_points(to, h);
    std::vector<F2Vec> img;
    for (const auto& v : src) img.push_back(f.apply(v));
    out.push_back(F2Subspace::span(to.dim(), img).dim() == dst.size());
  }
  return out;
}

F2Mat Correspondence::lower_star() const {
  F2Mat m(target, source);
  for (std::size_t i = 0; i < target; ++i)
    for (std::size_t j = 0; j < source; ++j)
      if (at(i, j) & 1) m.set(i, j, true);
  return m;
}

F2Mat Correspondence::upper_star() const { return lower_star().transpose(); }

Correspondence correspondence_from_surjection(const GModule& m, std::vector<Perm>* element_action) {
  const std::size_t d = m.dim();
  if (d > kMaxSurjectionDim)
    throw Error("capacity", "module too large for explicit element enumeration", std::to_string(d));
  const std::size_t count = std::size_t{1} << d;
  Correspondence c;
  c.source = count;
  c.target = d;
  c.entries.assign(d * count, 0);
  for (std::size_t e = 0; e < count; ++e)
    for (std::size_t i = 0; i < d; ++i)
      if ((e >> i) & 1) c.entries[i * count + e] = 1;
  if (element_action) {
    element_action->clear();
    for (const auto& a : m.matrices()) {
      std::vector<std::uint32_t> img(count);
      for (std::size_t e = 0; e < count; ++e) {
        F2Vec v(d);
        for (std::size_t i = 0; i < d; ++i)
          if ((e >> i) & 1) v.set(i, true);
        F2Vec w = a.apply(v);
        std::size_t t = 0;
        for (std::size_t i = 0; i < d; ++i)
          if (w.get(i)) t |= std::size_t{1} << i;
        img[e] = static_cast<std::uint32_t>(t);
      }
      element_action->push_back(Perm(std::move(img)));
    }
  }
  return c;
}

}  // namespace qdesc
