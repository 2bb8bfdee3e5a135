#include "qdesc/descent.hpp"

#include <algorithm>

#include "qdesc/error.hpp"

namespace qdesc {

namespace {

Perm restrict_to_odd(const CanonicalTheta& c, const Perm& p) {
  std::vector<std::uint32_t> img;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int32_t l = c.label_of[p(c.offsets[i])];
    if (l < 0) throw Error("internal", "permutation does not preserve odd forms");
    img.push_back(static_cast<std::uint32_t>(l));
  }
  return Perm(std::move(img));
}

std::vector<F2Vec> units(std::size_t n) {
  std::vector<F2Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(F2Vec::unit(n, i));
  return out;
}

}  // namespace

PermGroup sp6_group() {
  const CanonicalTheta c = build_canonical(3);
  return PermGroup(c.size(), c.generators);
}

PermGroup even_form_stabilizer() {
  const CanonicalTheta c = build_canonical(3);
  std::uint32_t v0 = 0;
  while (base_form(c.space, v0) != 1) ++v0;
  const PermGroup all(c.space.size(), c.generators_all);
  const PermGroup st = stabilizer(all, v0);
  std::vector<Perm> gens;
  for (const auto& p : st.generators()) gens.push_back(restrict_to_odd(c, p));
  return PermGroup(c.size(), gens);
}

bool ModuleFamily::exact() const {
  if (alpha.rank() != static_cast<int>(J2.dim())) return false;
  const F2Mat qa = q * alpha;
  for (std::size_t i = 0; i < qa.rows(); ++i)
    if (!qa.row(i).is_zero()) return false;
  return q.rank() == static_cast<int>(Edual.dim() - J2.dim());
}

ModuleFamily module_family(const PermGroup& g) {
  ModuleFamily f;
  f.canon = build_canonical(3);
  const std::size_t n = f.canon.size();
  if (g.degree() != n) throw Error("domain", "group must act on 28 points", std::to_string(g.degree()));
  const IncidenceStructure s = f.canon.structure();
  for (const auto& p : g.generators())
    if (!preserves(p, s)) throw Error("domain", "group does not preserve the syzygetic quadruples", p.to_string());
  f.group = g;

  std::vector<F2Vec> quads, twelve, pairs;
  for (const auto& q : s.quads) {
    F2Vec v(n);
    for (auto i : q) v.set(i, true);
    quads.push_back(v);
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i) pairs.push_back(F2Vec::unit(n, 0) ^ F2Vec::unit(n, i));
    for (std::uint32_t j = i + 1; j < n; ++j) {
      F2Vec v(n);
      for (const auto& q : s.quads)
        if (std::find(q.begin(), q.end(), i) != q.end() && std::find(q.begin(), q.end(), j) != q.end())
          for (auto k : q) v.set(k, true);
      twelve.push_back(v);
    }
  }
  f.one = F2Subspace::span(n, {F2Vec::ones(n)});
  f.jt = F2Subspace::span(n, twelve);
  f.r = F2Subspace::span(n, quads);
  f.e = F2Subspace::span(n, pairs);
  f.r_perp = f.r.perp();
  if (f.jt != f.r_perp) throw Error("internal", "span of the 12-sets differs from the annihilator of R");

  const GModule amb = GModule::permutation(g.generators(), n);
  f.E = amb.sub_quotient(f.e.basis(), {});
  f.R = amb.sub_quotient(f.r.basis(), {});
  f.Edual = amb.sub_quotient(units(n), f.one.basis());
  f.Rdual = amb.sub_quotient(units(n), f.r_perp.basis());
  f.J2 = amb.sub_quotient(f.r_perp.basis(), f.one.basis());
  f.alpha = natural_map(f.J2, f.Edual);
  f.q = natural_map(f.Edual, f.Rdual);
  if (!f.exact()) throw Error("internal", "0 -> J[2] -> E^vee -> R^vee is not exact");
  return f;
}

FixedRow fixed_row(const ModuleFamily& f, const PermGroup& h, const std::string& place) {
  FixedRow row;
  row.place = place;
  row.group_order = h.order();
  const auto j = fixed_points(f.J2, h.generators());
  const auto e = fixed_points(f.Edual, h.generators());
  const auto r = fixed_points(f.Rdual, h.generators());
  row.j2 = static_cast<int>(j.size());
  row.edual = static_cast<int>(e.size());
  row.rdual = static_cast<int>(r.size());
  row.rdual_fixed = F2Subspace::span(f.Rdual.dim(), r);
  std::vector<F2Vec> img;
  for (const auto& v : e) img.push_back(f.q.apply(v));
  row.q_image = F2Subspace::span(f.Rdual.dim(), img);
  F2Subspace acc = row.q_image;
  for (const auto& v : r)
    if (acc.insert(v)) row.coker_reps.push_back(v);
  row.coker = static_cast<int>(row.coker_reps.size());
  return row;
}

int local_size_dim(const FixedRow& row, std::uint32_t p) { return row.j2 + (p == 2 ? 3 : 0); }

int w_v_dim(const FixedRow& row, std::uint32_t p, std::optional<int> im_c_dim, bool good_unramified) {
  if (good_unramified) return 0;
  if (!im_c_dim) throw Error("domain", "#im C_v is required away from good unramified places", row.place);
  const int gamma = local_size_dim(row, p);
  if (*im_c_dim < 0 || *im_c_dim > gamma)
    throw Error("domain", "#im C_v must divide #im gamma_v", row.place);
  const int w = row.coker + *im_c_dim - gamma;
  if (w < 0) throw Error("domain", "non-integral #W_v", row.place);
  if (w > row.coker) throw Error("internal", "#W_v exceeds #coker q", row.place);
  return w;
}

KappaResult kappa(const FixedRow& global, const std::vector<PlaceRow>& places) {
  F2Subspace ker = global.rdual_fixed;
  int target = 0;
  for (const auto& pl : places) {
    if (!pl.w) throw Error("domain", "missing W_v at a place", pl.datum.place);
    if (!pl.w_exact) throw Error("undetermined", "only an upper bound on #W_v is known", pl.datum.place);
    if (*pl.w == 0) continue;
    if (*pl.w != pl.fixed.coker)
      throw Error("undetermined", "W_v is a proper quotient of coker q; kappa_v is not determined by sizes",
                  pl.datum.place);
    ker = ker.intersect(pl.fixed.q_image);
    target += *pl.w;
  }
  KappaResult k;
  k.kernel_dim = static_cast<int>(ker.dim()) - static_cast<int>(global.q_image.dim());
  k.cokernel_dim = target - (global.coker - k.kernel_dim);
  return k;
}

RankBound rank_bound(int fake_selmer_dim, int kappa_kernel_dim, int j2_global_dim, int rank_multiple) {
  if (fake_selmer_dim < 0 || kappa_kernel_dim < 0 || j2_global_dim < 0 || rank_multiple < 1)
    throw Error("domain", "negative dimension or multiple");
  RankBound b;
  b.selmer_dim = fake_selmer_dim + kappa_kernel_dim;
  b.rank = std::max(0, b.selmer_dim - j2_global_dim);
  b.rank -= b.rank % rank_multiple;
  return b;
}

DescentTable descent_table(const ModuleFamily& f, const std::vector<LocalDatum>& locals,
                           std::optional<int> fake_selmer_dim, int rank_multiple, bool circ_asserted) {
  DescentTable t;
  t.circ_asserted = circ_asserted;
  t.global = fixed_row(f, f.group, "global");
  bool complete = true;
  for (const auto& d : locals) {
    for (const auto& g : d.decomposition.generators())
      if (!f.group.contains(g)) throw Error("domain", "decomposition group is not inside G", d.place);
    PlaceRow row;
    row.datum = d;
    row.fixed = fixed_row(f, d.decomposition, d.place);
    row.local_size = local_size_dim(row.fixed, d.p);
    if (d.good_unramified || d.im_c_dim) {
      row.w = w_v_dim(row.fixed, d.p, d.im_c_dim, d.good_unramified);
      // #W_v grows with #im C_v, so a bound of 0 is exact
      row.w_exact = d.good_unramified || d.im_c_exact || *row.w == 0;
    }
    complete = complete && row.w_exact;
    t.places.push_back(std::move(row));
  }
  if (complete) t.kappa = kappa(t.global, t.places);
  if (fake_selmer_dim) {
    t.bound = rank_bound(*fake_selmer_dim, t.kappa ? t.kappa->kernel_dim : t.global.coker, t.global.j2, rank_multiple);
    t.bound->used_kappa = t.kappa.has_value();
  }
  return t;
}

}  // namespace qdesc
