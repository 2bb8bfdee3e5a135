#include <algorithm>

#include "qdesc/error.hpp"
#include "qdesc/linalg.hpp"
#include "qdesc/quartic.hpp"

namespace qdesc {

namespace {

// x^2, xy, xz, y^2, yz, z^2
std::array<FqElem, 6> conic_monomials(const Point3& p) {
  return {p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]};
}

// For a conic C with coefficient vector c, C(s a + t b) = (alpha.c) s^2 + (beta.c) st + (gamma.c) t^2.
// C contains the contact divisor of the line iff that restriction is proportional to q:
// three 2x2 minors, linear in c.
struct LineConditions {
  std::array<std::array<FqElem, 6>, 3> restriction;  // alpha, beta, gamma
  std::array<std::array<FqElem, 6>, 3> rows;
};

LineConditions line_conditions(const Bitangent& bt) {
  LineConditions lc;
  const Point3 s{bt.a[0] + bt.b[0], bt.a[1] + bt.b[1], bt.a[2] + bt.b[2]};
  const auto ma = conic_monomials(bt.a), mb = conic_monomials(bt.b), ms = conic_monomials(s);
  for (int k = 0; k < 6; ++k) {
    lc.restriction[0][k] = ma[k];
    lc.restriction[1][k] = ms[k] - ma[k] - mb[k];
    lc.restriction[2][k] = mb[k];
  }
  const auto& q = bt.q;
  const auto& r = lc.restriction;
  for (int k = 0; k < 6; ++k) {
    lc.rows[0][k] = q[1] * r[0][k] - q[0] * r[1][k];
    lc.rows[1][k] = q[2] * r[0][k] - q[0] * r[2][k];
    lc.rows[2][k] = q[2] * r[1][k] - q[1] * r[2][k];
  }
  return lc;
}

FqElem dot(const std::array<FqElem, 6>& a, const std::vector<FqElem>& c) {
  FqElem s = zero_of(c[0]);
  for (int k = 0; k < 6; ++k) s += a[k] * c[k];
  return s;
}

bool contains_divisor(const LineConditions& lc, const std::vector<FqElem>& c) {
  bool nonzero = false;
  for (const auto& r : lc.restriction) nonzero = nonzero || !dot(r, c).is_zero();
  if (!nonzero) return false;  // the conic contains the whole line
  for (const auto& r : lc.rows)
    if (!dot(r, c).is_zero()) return false;
  return true;
}

}  // namespace

IncidenceStructure syzygetic_structure(const BitangentSet& b) {
  const std::size_t n = b.lines.size();
  if (n != 28) throw Error("domain", "need 28 bitangents", std::to_string(n));
  const FqElem zero = b.field->zero();
  std::vector<LineConditions> conds;
  for (const auto& bt : b.lines) conds.push_back(line_conditions(bt));

  IncidenceStructure s;
  s.n = n;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) {
        Matrix<FqElem> m;
        for (auto t : {i, j, k})
          for (const auto& row : conds[t].rows) m.emplace_back(row.begin(), row.end());
        const auto ker = kernel(std::move(m), 6, zero);
        if (ker.empty()) continue;
        const std::string ctx = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        if (ker.size() > 1) throw Error("degenerate", "conic through three contact divisors is not unique", ctx);
        const auto& c = ker[0];
        for (auto t : {i, j, k})
          if (!contains_divisor(conds[t], c)) throw Error("degenerate", "conic contains a bitangent", ctx);
        std::vector<std::uint32_t> fourth;
        for (std::uint32_t l = 0; l < n; ++l)
          if (l != i && l != j && l != k && contains_divisor(conds[l], c)) fourth.push_back(l);
        if (fourth.size() != 1) throw Error("degenerate", "residual intersection is not a contact divisor", ctx);
        if (fourth[0] > k) s.quads.push_back({i, j, k, fourth[0]});
      }
  s.normalize();
  return s;
}

}  // namespace qdesc
