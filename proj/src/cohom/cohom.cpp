#include "qdesc/cohom.hpp"

#include <bit>
#include <random>

#include "qdesc/error.hpp"

namespace qdesc {

namespace {

// Echelon basis of multiword bit rows; each row's pivot is its lowest set bit.
class BitEchelon {
 public:
  BitEchelon(std::size_t nbits, std::size_t words) : words_(words), owner_(nbits, -1) {}

  bool insert(std::vector<std::uint64_t> v) {
    for (;;) {
      std::size_t p = lowest(v);
      if (p == SIZE_MAX) return false;
      if (owner_[p] < 0) {
        owner_[p] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const auto& r = rows_[owner_[p]];
      for (std::size_t k = 0; k < words_; ++k) v[k] ^= r[k];
    }
  }
  bool insert(const std::uint64_t* v) { return insert(std::vector<std::uint64_t>(v, v + words_)); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

 private:
  std::size_t lowest(const std::vector<std::uint64_t>& v) const {
    for (std::size_t k = 0; k < words_; ++k)
      if (v[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(v[k]));
    return SIZE_MAX;
  }
  std::size_t words_;
  std::vector<int> owner_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

F2Vec words_to_vec(const std::uint64_t* w, std::size_t nbits) {
  F2Vec v(nbits);
  for (std::size_t k = 0; k < v.words().size(); ++k) v.words()[k] = w[k];
  return v;
}

// XORs the low `nbits` bits of `value` into the multiword row at bit offset `offset`.
void xor_bits(std::uint64_t* row, std::size_t offset, std::uint64_t value, std::size_t nbits) {
  if (!value) return;
  const std::size_t k = offset / 64, b = offset % 64;
  row[k] ^= value << b;
  if (b && b + nbits > 64) row[k + 1] ^= value >> (64 - b);
}

bool parity_and(const std::uint64_t* a, const std::vector<std::uint64_t>& b) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < b.size(); ++k) acc ^= a[k] & b[k];
  return std::popcount(acc) & 1;
}

std::vector<F2Vec> kernel_of_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t nbits) {
  std::vector<F2Vec> r;
  for (const auto& w : rows) r.push_back(words_to_vec(w.data(), nbits));
  return F2Mat::from_rows(nbits, r).kernel();
}

// Vectors of `vs` that extend the span of `base`, i.e. a complement basis.
std::vector<F2Vec> complement(const std::vector<F2Vec>& base, const std::vector<F2Vec>& vs, std::size_t n) {
  F2Subspace s = F2Subspace::span(n, base);
  std::vector<F2Vec> out;
  for (const auto& v : vs)
    if (s.insert(v)) out.push_back(v);
  return out;
}

}  // namespace

std::vector<Perm> small_generating_set(const PermGroup& g, std::uint64_t seed) {
  std::vector<Perm> nontrivial;
  for (const auto& x : g.generators())
    if (!x.is_identity()) nontrivial.push_back(x);
  if (nontrivial.size() <= 2) return nontrivial;
  const BigInt order = g.order();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 64; ++t) {
    Perm x = g.random_element(rng);
    if (BigInt(static_cast<unsigned long>(x.order())) == order) return {x};
  }
  for (int t = 0; t < 200; ++t) {
    Perm a = g.random_element(rng), b = g.random_element(rng);
    if (PermGroup(g.degree(), {a, b}).order() == order) return {a, b};
  }
  std::vector<Perm> gens = nontrivial;
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Perm> trial = gens;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (PermGroup(g.degree(), trial).order() == order) gens = std::move(trial);
  }
  return gens;
}

CocycleEngine::CocycleEngine(const PermGroup& g, const GModule& m, std::vector<Perm> gens, std::uint64_t seed)
    : group_(g) {
  if (g.order() > kEnumerationCap) throw Error("capacity", "group too large for cohomology", to_string(g.order()));
  if (m.permutation_based()) {
    if (gens.empty()) gens = small_generating_set(g, seed);
    module_ = m.with_generators(gens);
  } else {
    if (gens.empty()) gens = m.generators();
    if (gens != m.generators()) throw Error("domain", "matrix module generators differ from the requested generators");
    module_ = m;
  }
  for (const auto& s : gens)
    if (!g.contains(s)) throw Error("domain", "generator outside the group", s.to_string());
  if (PermGroup(g.degree(), gens).order() != g.order())
    throw Error("domain", "module generators do not generate the group");
  d_ = module_.dim();
  if (d_ > 64) throw Error("capacity", "module dimension above 64 is not supported", std::to_string(d_));
  space_.generators = gens;
  space_.module_dim = d_;
  const std::size_t u = gens.size() * d_;
  words_ = std::max<std::size_t>(1, (u + 63) / 64);
  const std::uint64_t n = g.order_u64();
  const std::uint64_t bytes = n * d_ * words_ * 8 + (module_.permutation_based() ? 0 : n * d_ * 8);
  if (bytes > kCocycleTableBytes) throw Error("capacity", "cocycle table exceeds memory budget", std::to_string(bytes));
  if (module_.permutation_based()) {
    const std::size_t amb = module_.ambient_dim();
    pi_.assign(amb, 0);
    for (std::size_t i = 0; i < amb; ++i) {
      F2Vec c = module_.project(F2Vec::unit(amb, i));
      pi_[i] = d_ ? c.words()[0] : 0;
    }
  }
  run();
}

void CocycleEngine::rho_rows(const Perm& w, std::vector<std::uint64_t>& rows) const {
  rows.assign(d_, 0);
  if (!module_.permutation_based()) {
    const auto& t = rho_table_[group_.rank(w)];
    rows = t;
    return;
  }
  // column j = sum of pi over the image of the support of lift j
  for (std::size_t j = 0; j < d_; ++j) {
    const F2Vec& l = module_.lifts()[j];
    std::uint64_t col = 0;
    for (std::size_t k = 0; k < l.words().size(); ++k) {
      std::uint64_t bits = l.words()[k];
      while (bits) {
        const std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        col ^= pi_[w(static_cast<std::uint32_t>(i))];
      }
    }
    for (std::size_t i = 0; i < d_; ++i)
      if ((col >> i) & 1) rows[i] |= 1ULL << j;
  }
}

void CocycleEngine::run() {
  const std::uint64_t n = group_.order_u64();
  const auto& gens = space_.generators;
  const std::size_t k = gens.size(), u = k * d_;
  const std::size_t row_stride = d_ * words_;
  table_.assign(n * row_stride, 0);
  std::vector<char> visited(n, 0);
  if (!module_.permutation_based()) rho_table_.assign(n, {});
  const Perm id = Perm::identity(group_.degree());
  const std::uint64_t r0 = group_.rank(id);
  visited[r0] = 1;
  if (!module_.permutation_based()) {
    rho_table_[r0].assign(d_, 0);
    for (std::size_t i = 0; i < d_; ++i) rho_table_[r0][i] = 1ULL << i;
  }
  std::vector<std::uint64_t> queue{r0};
  BitEchelon constraints(std::max<std::size_t>(u, 1), words_);
  std::vector<std::uint64_t> rho, cand(row_stride);
  std::vector<std::vector<std::uint64_t>> gen_rows(k);
  for (std::size_t s = 0; s < k; ++s) {
    const F2Mat& a = module_.matrices()[s];
    gen_rows[s].assign(d_, 0);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        if (a.get(i, j)) gen_rows[s][i] |= 1ULL << j;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t r = queue[head];
    const Perm w = group_.element(r);
    rho_rows(w, rho);
    for (std::size_t s = 0; s < k; ++s) {
      const Perm ws = w * gens[s];
      const std::uint64_t r2 = group_.rank(ws);
      std::copy(table_.begin() + r * row_stride, table_.begin() + (r + 1) * row_stride, cand.begin());
      for (std::size_t i = 0; i < d_; ++i) xor_bits(&cand[i * words_], s * d_, rho[i], d_);
      if (!visited[r2]) {
        visited[r2] = 1;
        std::copy(cand.begin(), cand.end(), table_.begin() + r2 * row_stride);
        if (!module_.permutation_based()) {
          auto& out = rho_table_[r2];
          out.assign(d_, 0);
          for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
              if ((rho[i] >> j) & 1) out[i] ^= gen_rows[s][j];
        }
        queue.push_back(r2);
      } else if (constraints.rank() < u) {
        for (std::size_t i = 0; i < d_; ++i) {
          std::vector<std::uint64_t> c(cand.begin() + i * words_, cand.begin() + (i + 1) * words_);
          const std::uint64_t* old = &table_[r2 * row_stride + i * words_];
          bool nonzero = false;
          for (std::size_t t = 0; t < words_; ++t) {
            c[t] ^= old[t];
            nonzero |= c[t] != 0;
          }
          if (nonzero) constraints.insert(std::move(c));
        }
      }
    }
  }
  if (queue.size() != n) throw Error("internal", "Cayley graph traversal did not reach every element");
  space_.z1 = kernel_of_rows(constraints.rows(), u);
  std::vector<F2Vec> cob;
  for (std::size_t j = 0; j < d_; ++j) {
    F2Vec v(u);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t i = 0; i < d_; ++i)
        if ((((gen_rows[s][i] >> j) & 1) != 0) != (i == j)) v.set(s * d_ + i, true);
    cob.push_back(std::move(v));
  }
  space_.b1 = F2Subspace::span(u, cob).basis();
  space_.h1 = complement(space_.b1, space_.z1, u);
}

F2Vec CocycleEngine::evaluate(const F2Vec& cocycle, const Perm& g) const {
  if (cocycle.size() != space_.unknowns()) throw Error("domain", "cocycle has wrong length");
  const std::uint64_t r = group_.rank(g);
  F2Vec out(d_);
  for (std::size_t i = 0; i < d_; ++i)
    if (parity_and(&table_[(r * d_ + i) * words_], cocycle.words())) out.set(i, true);
  return out;
}

F2Mat CocycleEngine::action(const Perm& g) const {
  std::vector<std::uint64_t> rows;
  rho_rows(g, rows);
  F2Mat a(d_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if ((rows[i] >> j) & 1) a.set(i, j, true);
  return a;
}

CocycleSpace h1_group(const PermGroup& g, const GModule& m) { return CocycleEngine(g, m).space(); }

CyclicH1 h1_cyclic(const F2Mat& sigma, std::uint64_t n) {
  const std::size_t d = sigma.rows();
  if (sigma.cols() != d) throw Error("domain", "action matrix must be square");
  if (n == 0) throw Error("domain", "group order must be positive");
  F2Mat pw = F2Mat::identity(d), norm(d, d);
  for (std::uint64_t i = 0; i < n; ++i) {
    norm = norm + pw;
    pw = pw * sigma;
  }
  if (!pw.is_identity()) throw Error("domain", "sigma^n is not the identity");
  std::vector<F2Vec> ker = norm.kernel();
  std::vector<F2Vec> im = (sigma + F2Mat::identity(d)).image();
  CyclicH1 out;
  out.basis = complement(im, ker, d);
  out.dimension = out.basis.size();
  return out;
}

Sha1Bound sha1_bound(const PermGroup& g, const GModule& m) {
  CocycleEngine eng(g, m);
  const CocycleSpace& sp = eng.space();
  Sha1Bound out;
  out.h1_dimension = sp.h1_dim();
  out.generators = sp.generators;
  const std::size_t z = sp.z1.size(), b = sp.b1.size(), u = sp.unknowns(), d = sp.module_dim;
  const std::size_t zw = std::max<std::size_t>(1, (z + 63) / 64);
  BitEchelon cond(std::max<std::size_t>(z, 1), zw);
  std::vector<Perm> cyc = cyclic_subgroups(g);
  out.cyclic_subgroups = cyc.size();
  for (const auto& h : cyc) {
    if (cond.rank() + b >= z) break;
    if (h.is_identity()) continue;
    F2Mat a = eng.action(h) + F2Mat::identity(d);
    // f(h) must lie in im(h - 1), i.e. be orthogonal to ker((h - 1)^T)
    for (const auto& ann : a.transpose().kernel()) {
      F2Vec lin(u);
      for (std::size_t t = 0; t < z; ++t) {
        F2Vec val = eng.evaluate(sp.z1[t], h);
        if (val.dot(ann)) lin.set(t, true);
      }
      std::vector<std::uint64_t> row(zw, 0);
      for (std::size_t t = 0; t < z; ++t)
        if (lin.get(t)) row[t / 64] |= 1ULL << (t % 64);
      cond.insert(std::move(row));
    }
  }
  std::vector<F2Vec> ys = kernel_of_rows(cond.rows(), z);
  std::vector<F2Vec> cocycles;
  for (const auto& y : ys) {
    F2Vec c(u);
    for (std::size_t t = 0; t < z; ++t)
      if (y.get(t)) c ^= sp.z1[t];
    cocycles.push_back(std::move(c));
  }
  out.representatives = complement(sp.b1, cocycles, u);
  out.dimension = out.representatives.size();
  return out;
}

}  // namespace qdesc
