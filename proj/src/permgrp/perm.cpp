#include "qdesc/perm.hpp"

#include <algorithm>
#include <numeric>

#include "qdesc/error.hpp"

namespace qdesc {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error("domain", "not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0u);
  return p;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw Error("domain", "cycle point out of range");
      img[c[i]] = c[(i + 1) % c.size()];
    }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  if (o.img_.size() != img_.size()) throw Error("domain", "degree mismatch in permutation product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm Perm::pow(std::int64_t k) const {
  Perm base = k < 0 ? inverse() : *this;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Perm r = identity(img_.size());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> ct;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (int c : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(c));
  return o;
}

std::vector<std::uint32_t> Perm::fixed_points() const {
  std::vector<std::uint32_t> f;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == i) f.push_back(static_cast<std::uint32_t>(i));
  return f;
}

std::uint32_t Perm::least_moved_point() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<std::uint32_t>(i);
  return static_cast<std::uint32_t>(img_.size());
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p.images()) h = (h ^ v) * 1099511628211ULL;
  return h;
}

std::string cycle_type_string(const std::vector<int>& ct) {
  // "7^4" style, descending lengths
  std::string s;
  for (std::size_t i = 0; i < ct.size();) {
    std::size_t j = i;
    while (j < ct.size() && ct[j] == ct[i]) ++j;
    if (!s.empty()) s += " ";
    s += std::to_string(ct[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace qdesc
