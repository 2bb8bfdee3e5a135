#include <algorithm>
#include <unordered_map>

#include "qdesc/error.hpp"
#include "qdesc/thetacomb.hpp"

namespace qdesc {

namespace {

// For every triple lying in some quadruple, the list of labels completing it.
struct TripleIndex {
  std::size_t n = 0;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> completions;
  std::vector<std::size_t> degree;
  std::vector<std::vector<std::uint32_t>> pair_degree;

  static std::uint64_t key(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 42) | (std::uint64_t(b) << 21) | c;
  }

  explicit TripleIndex(const IncidenceStructure& s) : n(s.n), degree(s.n, 0), pair_degree(s.n, std::vector<std::uint32_t>(s.n, 0)) {
    for (const auto& q : s.quads) {
      for (int i = 0; i < 4; ++i) {
        ++degree[q[i]];
        for (int j = 0; j < 4; ++j)
          if (i != j) ++pair_degree[q[i]][q[j]];
        std::array<std::uint32_t, 3> t{};
        int k = 0;
        for (int j = 0; j < 4; ++j)
          if (j != i) t[k++] = q[j];
        completions[key(t[0], t[1], t[2])].push_back(q[i]);
      }
    }
  }

  const std::vector<std::uint32_t>* find(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    auto it = completions.find(key(a, b, c));
    return it == completions.end() ? nullptr : &it->second;
  }
};

class Matcher {
 public:
  Matcher(const IncidenceStructure& a, const IncidenceStructure& b, std::uint64_t cap)
      : ia_(a), ib_(b), cap_(cap), map_(a.n, kUnset), inv_(b.n, kUnset) {}

  bool run() { return extend(0); }
  const std::vector<std::uint32_t>& result() const { return map_; }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  bool consistent(std::uint32_t k, std::uint32_t img) const {
    for (std::uint32_t i = 0; i < k; ++i) {
      if (ia_.pair_degree[i][k] != ib_.pair_degree[map_[i]][img]) return false;
      for (std::uint32_t j = i + 1; j < k; ++j) {
        const auto* ca = ia_.find(i, j, k);
        const auto* cb = ib_.find(map_[i], map_[j], img);
        const std::size_t na = ca ? ca->size() : 0, nb = cb ? cb->size() : 0;
        if (na != nb) return false;
        if (!na) continue;
        for (auto c : *ca)
          if (c < k && std::find(cb->begin(), cb->end(), map_[c]) == cb->end()) return false;
        for (auto c : *cb) {
          const std::uint32_t pre = inv_[c];
          if (pre != kUnset && std::find(ca->begin(), ca->end(), pre) == ca->end()) return false;
        }
      }
    }
    return true;
  }

  bool extend(std::uint32_t k) {
    if (k == ia_.n) return true;
    for (std::uint32_t img = 0; img < ib_.n; ++img) {
      if (inv_[img] != kUnset || ib_.degree[img] != ia_.degree[k]) continue;
      if (++nodes_ > cap_) throw Error("capacity", "structure matching exceeded its node cap");
      if (!consistent(k, img)) continue;
      map_[k] = img;
      inv_[img] = k;
      if (extend(k + 1)) return true;
      map_[k] = kUnset;
      inv_[img] = kUnset;
    }
    return false;
  }

  TripleIndex ia_, ib_;
  std::uint64_t cap_, nodes_ = 0;
  std::vector<std::uint32_t> map_, inv_;
};

}  // namespace

bool transports(const std::vector<std::uint32_t>& map, const IncidenceStructure& a, const IncidenceStructure& b) {
  if (map.size() != a.n || a.n != b.n || a.quads.size() != b.quads.size()) return false;
  std::vector<Quad> img;
  for (const auto& q : a.quads) {
    Quad r{map[q[0]], map[q[1]], map[q[2]], map[q[3]]};
    std::sort(r.begin(), r.end());
    img.push_back(r);
  }
  std::sort(img.begin(), img.end());
  std::vector<Quad> target = b.quads;
  for (auto& q : target) std::sort(q.begin(), q.end());
  std::sort(target.begin(), target.end());
  return img == target;
}

std::optional<std::vector<std::uint32_t>> match_structures(const IncidenceStructure& a, const IncidenceStructure& b,
                                                           std::uint64_t node_cap) {
  if (a.n != b.n) throw Error("domain", "label sets have different sizes");
  if (a.quads.size() != b.quads.size()) return std::nullopt;
  Matcher m(a, b, node_cap);
  if (!m.run()) return std::nullopt;
  std::vector<std::uint32_t> out = m.result();
  if (!transports(out, a, b)) throw Error("internal", "matching does not transport quadruples");
  return out;
}

}  // namespace qdesc
