#include "qdesc/thetacomb.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "qdesc/error.hpp"

namespace qdesc {

int SymplecticSpace::pair(std::uint32_t x, std::uint32_t y) const {
  const std::uint32_t even = 0x55555555u & (size() - 1);
  // pairs bit 2i of x with bit 2i+1 of y and vice versa
  const std::uint32_t a = (x & even) & ((y >> 1) & even);
  const std::uint32_t b = ((x >> 1) & even) & (y & even);
  return std::popcount(a ^ b) & 1;
}

F2Mat SymplecticSpace::gram() const {
  F2Mat m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) m.set(i, j, pair(1u << i, 1u << j));
  return m;
}

int base_form(const SymplecticSpace& s, std::uint32_t x) {
  int r = (x & 1) ^ ((x >> 1) & 1);
  for (int i = 0; i < s.g; ++i) r ^= ((x >> (2 * i)) & 1) & ((x >> (2 * i + 1)) & 1);
  return r;
}

bool QuadForm::associated() const {
  const std::uint32_t n = space.size();
  if (values.size() != n) return false;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if ((values[x ^ y] ^ values[x] ^ values[y]) != space.pair(x, y)) return false;
  return true;
}

QuadForm QuadForm::translate(const SymplecticSpace& s, std::uint32_t v) {
  QuadForm q{s, std::vector<std::uint8_t>(s.size())};
  for (std::uint32_t x = 0; x < s.size(); ++x) q.values[x] = static_cast<std::uint8_t>(base_form(s, x) ^ s.pair(v, x));
  return q;
}

int arf(const QuadForm& q) {
  if (!q.associated()) throw Error("domain", "quadratic form is not associated to the pairing");
  std::uint64_t zeros = 0;
  for (auto v : q.values) zeros += v == 0;
  const int g = q.space.g;
  const std::uint64_t even_zeros = (1ull << (2 * g - 1)) + (1ull << (g - 1));
  return zeros == even_zeros ? 0 : 1;
}

void IncidenceStructure::normalize() {
  for (auto& q : quads) std::sort(q.begin(), q.end());
  std::sort(quads.begin(), quads.end());
  quads.erase(std::unique(quads.begin(), quads.end()), quads.end());
}

IncidenceStructure CanonicalTheta::structure() const { return IncidenceStructure{offsets.size(), sigma}; }

bool CanonicalTheta::in_sigma(const Quad& q) const {
  Quad s = q;
  std::sort(s.begin(), s.end());
  return std::binary_search(sigma.begin(), sigma.end(), s);
}

std::uint32_t transvect_offset(const SymplecticSpace& s, std::uint32_t a, std::uint32_t v) {
  const int c = 1 ^ base_form(s, a) ^ s.pair(v, a);
  return c ? v ^ a : v;
}

CanonicalTheta build_canonical(int g) {
  if (g < 2 || g > 4) throw Error("domain", "genus must be between 2 and 4", std::to_string(g));
  CanonicalTheta c;
  c.space.g = g;
  const std::uint32_t n = c.space.size();
  c.label_of.assign(n, -1);
  for (std::uint32_t v = 0; v < n; ++v)
    if (base_form(c.space, v) == 0) {
      c.label_of[v] = static_cast<std::int32_t>(c.offsets.size());
      c.offsets.push_back(v);
    }
  const std::size_t m = c.offsets.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::int32_t l = c.label_of[c.offsets[i] ^ c.offsets[j] ^ c.offsets[k]];
        if (l > static_cast<std::int32_t>(k))
          c.sigma.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l)});
      }
  std::sort(c.sigma.begin(), c.sigma.end());

  for (int i = 0; i < 2 * g; ++i) c.transvections.push_back(1u << i);
  c.transvections.push_back(n - 1);
  // For g = 3 the transvections above all fix one odd form; e_0 + e_2 breaks that.
  c.transvections.push_back(0b101);
  for (std::uint32_t a : c.transvections) {
    std::vector<std::uint32_t> all(n), odd(m);
    for (std::uint32_t v = 0; v < n; ++v) all[v] = transvect_offset(c.space, a, v);
    for (std::size_t i = 0; i < m; ++i) {
      const std::int32_t l = c.label_of[all[c.offsets[i]]];
      if (l < 0) throw Error("internal", "transvection does not preserve odd forms");
      odd[i] = static_cast<std::uint32_t>(l);
    }
    c.generators_all.emplace_back(std::move(all));
    c.generators.emplace_back(std::move(odd));
  }
  return c;
}

std::uint64_t sigma_count_formula(int g) {
  // (2^{g-3}/3)(2^{2g}-1)(2^{2g-2}-1)(2^{g-2}-1), kept integral
  const std::uint64_t a = (1ull << (2 * g)) - 1, b = (1ull << (2 * g - 2)) - 1, c = (1ull << (g - 2)) - 1;
  const std::uint64_t prod = a * b * c;
  return g >= 3 ? (prod << (g - 3)) / 3 : prod / (3ull << (3 - g));
}

std::uint64_t sigma_count_exhaustive(const CanonicalTheta& c) {
  const std::size_t m = c.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint32_t vij = c.offsets[i] ^ c.offsets[j];
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::uint32_t vijk = vij ^ c.offsets[k];
        for (std::size_t l = k + 1; l < m; ++l) count += (vijk ^ c.offsets[l]) == 0;
      }
    }
  return count;
}

std::uint32_t quad_solve(const F2Function& f, const std::vector<std::uint32_t>& shifts) {
  const int n = f.n;
  if (n <= 0 || n > 20 || f.values.size() != (1u << n)) throw Error("domain", "function table has wrong size");
  auto fail = [] { return Error("domain", "lemma hypotheses not met"); };
  if (n % 2 || shifts.size() > 2) throw fail();
  if (shifts.size() == 1 && n < 4) throw fail();
  if (shifts.size() == 2 && n < 6) throw fail();
  const std::uint32_t size = 1u << n;
  for (auto v : shifts)
    if (v >= size) throw Error("domain", "shift outside the space");
  auto b = [&](std::uint32_t x, std::uint32_t y) { return f.values[x ^ y] ^ f.values[x] ^ f.values[y] ^ f.values[0]; };
  // degree <= 2 iff each x -> b(x, e_j) is linear
  F2Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram.set(i, j, b(1u << i, 1u << j));
  for (int j = 0; j < n; ++j)
    for (std::uint32_t x = 0; x < size; ++x) {
      int lin = 0;
      for (int i = 0; i < n; ++i)
        if ((x >> i) & 1) lin ^= gram.get(i, j);
      if (b(x, 1u << j) != lin) throw fail();
    }
  if (gram.rank() != n) throw fail();
  for (std::uint32_t x = 0; x < size; ++x) {
    bool ok = f.values[x] == 0;
    for (auto v : shifts) ok = ok && f.values[x ^ v] == 0;
    if (ok) return x;
  }
  throw Error("internal", "no witness found although the lemma guarantees one");
}

std::array<std::uint32_t, 3> six_theta_resolution(const CanonicalTheta& c, const std::array<std::uint32_t, 6>& t) {
  if (c.space.g < 3) throw Error("domain", "six-theta resolution needs genus at least 3");
  std::uint32_t sum = 0;
  for (auto l : t) {
    if (l >= c.size()) throw Error("domain", "label out of range", std::to_string(l));
    sum ^= c.offsets[l];
  }
  if (sum != 0) throw Error("domain", "offsets do not sum to zero");
  F2Function f{c.space.dim(), std::vector<std::uint8_t>(c.space.size())};
  for (std::uint32_t x = 0; x < c.space.size(); ++x) f.values[x] = static_cast<std::uint8_t>(base_form(c.space, x));
  const std::uint32_t v1 = c.offsets[t[0]] ^ c.offsets[t[1]];
  const std::uint32_t v2 = c.offsets[t[2]] ^ c.offsets[t[3]];
  const std::uint32_t x = quad_solve(f, {v1, v2});
  auto lab = [&](std::uint32_t v) { return static_cast<std::uint32_t>(c.label_of[v]); };
  return {lab(x ^ v2), lab(x ^ v1), lab(x)};
}

namespace {

int genus_from_size(std::size_t n) {
  for (int g = 2; g <= 5; ++g)
    if (n == (1ull << (g - 1)) * ((1ull << g) - 1)) return g;
  return -1;
}

std::uint64_t quad_key(Quad q) {
  std::sort(q.begin(), q.end());
  return (std::uint64_t(q[0]) << 48) | (std::uint64_t(q[1]) << 32) | (std::uint64_t(q[2]) << 16) | q[3];
}

}  // namespace

SymplecticRecovery recover_symplectic(const IncidenceStructure& s) {
  auto bad = [](const std::string& why) { return Error("domain", "not a theta structure", why); };
  const int g = genus_from_size(s.n);
  if (g < 0) throw bad("label count is not 2^{g-1}(2^g-1)");
  const std::size_t n = s.n;
  F2Subspace rel(n);
  if (g == 2) {
    if (!s.quads.empty()) throw bad("genus 2 structures have no quadruples");
    rel.insert(F2Vec::ones(n));
  } else {
    for (const auto& q : s.quads) {
      F2Vec v(n);
      for (auto l : q) {
        if (l >= n) throw bad("label out of range");
        v.flip(l);
      }
      rel.insert(v);
    }
  }
  SymplecticRecovery out;
  out.dim_p = n - rel.dim();
  if (out.dim_p != static_cast<std::size_t>(2 * g + 1)) throw bad("relation space has corank " + std::to_string(out.dim_p));
  std::vector<bool> pivot(n, false);
  for (auto p : rel.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) free.push_back(i);
  auto coords = [&](const F2Vec& v) {
    F2Vec r = rel.reduce(v), c(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) c.set(k, r.get(free[k]));
    return c;
  };
  for (std::size_t i = 0; i < n; ++i) out.marking.push_back(coords(F2Vec::unit(n, i)));

  std::map<F2Vec, std::uint32_t> label_at;
  for (std::size_t i = 0; i < n; ++i)
    if (!label_at.emplace(out.marking[i], static_cast<std::uint32_t>(i)).second) throw bad("two labels have equal classes");
  if (g >= 3) {
    std::set<std::uint64_t> expected, given;
    for (const auto& q : s.quads) given.insert(quad_key(q));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          auto it = label_at.find(out.marking[i] ^ out.marking[j] ^ out.marking[k]);
          if (it != label_at.end() && it->second > k)
            expected.insert(quad_key({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                      static_cast<std::uint32_t>(k), it->second}));
        }
    if (expected != given) throw bad("quadruples are not the zero-sum quadruples of the recovered space");
  }

  F2Subspace p0(out.dim_p);
  for (std::size_t i = 1; i < n; ++i) p0.insert(out.marking[i] ^ out.marking[0]);
  out.dim_p0 = p0.dim();
  if (out.dim_p0 != static_cast<std::size_t>(2 * g)) throw bad("pair span has wrong dimension");
  out.p0_basis = p0.basis();
  const std::size_t d = out.dim_p0;
  const std::uint32_t size = 1u << d;
  auto elem = [&](std::uint32_t x) {
    F2Vec v(out.dim_p);
    for (std::size_t k = 0; k < d; ++k)
      if ((x >> k) & 1) v ^= out.p0_basis[k];
    return v;
  };
  std::map<F2Vec, std::uint32_t> index;
  for (std::uint32_t x = 0; x < size; ++x) index.emplace(elem(x), x);
  out.q.assign(size, 1);
  for (std::size_t i = 0; i < n; ++i) out.q[index.at(out.marking[i] ^ out.marking[0])] = 0;
  out.pairing = F2Mat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.pairing.set(i, j, out.q[(1u << i) ^ (1u << j)] ^ out.q[1u << i] ^ out.q[1u << j]);
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y) {
      int e = 0;
      for (std::size_t i = 0; i < d; ++i)
        if ((x >> i) & 1)
          for (std::size_t j = 0; j < d; ++j)
            if ((y >> j) & 1) e ^= out.pairing.get(i, j);
      if ((out.q[x ^ y] ^ out.q[x] ^ out.q[y]) != e) throw bad("induced form is not quadratic");
    }
  if (out.pairing.rank() != static_cast<int>(d)) throw bad("induced pairing is degenerate");
  std::uint64_t zeros = 0;
  for (auto v : out.q) zeros += v == 0;
  out.arf = zeros == (1ull << (d - 1)) + (1ull << (g - 1)) ? 0 : 1;
  if (out.arf != 1) throw bad("marking has Arf invariant 0");
  return out;
}

bool preserves(const Perm& p, const IncidenceStructure& s) {
  if (p.degree() != s.n) return false;
  std::set<std::uint64_t> keys;
  for (const auto& q : s.quads) keys.insert(quad_key(q));
  for (const auto& q : s.quads)
    if (!keys.count(quad_key({p(q[0]), p(q[1]), p(q[2]), p(q[3])}))) return false;
  return true;
}

}  // namespace qdesc
