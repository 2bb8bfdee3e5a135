#include "qdesc/json_io.hpp"

#include <fstream>

namespace qdesc {

namespace {

BigInt parse_int_field(const json& v, const std::string& what) {
  try {
    if (v.is_string()) return parse_bigint(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.dump());
  } catch (const std::exception&) {
  }
  throw Error("parse", "expected an integer", what);
}

json dims(const FixedRow& r) {
  return {{"place", r.place}, {"groupOrder", bigint_json(r.group_order)}, {"J2", r.j2},
          {"Edual", r.edual},  {"Rdual", r.rdual},                         {"coker", r.coker}};
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("parse", "cannot open file", path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("parse", e.what(), path);
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write file", path);
  out << j.dump(2) << '\n';
}

MPoly<BigInt> curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw Error("parse", "curve file needs a \"coeffs\" array");
  if (j.contains("ring") && j["ring"] != "ZZ") throw Error("parse", "only ring \"ZZ\" is supported", j["ring"].dump());
  const json& c = j["coeffs"];
  if (!c.is_array() || c.size() != 15) throw Error("parse", "\"coeffs\" must hold 15 integers", c.dump());
  QuarticCoeffs q;
  for (std::size_t i = 0; i < 15; ++i) q[i] = parse_int_field(c[i], "coeffs[" + std::to_string(i) + "]");
  const MPoly<BigInt> g = quartic_from_coeffs(q);
  if (g.is_zero()) throw Error("parse", "zero quartic");
  return g;
}

json curve_to_json(const MPoly<BigInt>& g) {
  json c = json::array();
  for (const auto& a : coeffs_of(g)) c.push_back(to_string(a));
  return {{"coeffs", c}, {"ring", "ZZ"}};
}

MPoly<BigInt> read_curve_file(const std::string& path) { return curve_from_json(read_json_file(path)); }

PermGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw Error("parse", "group file needs \"degree\" and \"generators\"");
  if (!j["degree"].is_number_unsigned()) throw Error("parse", "bad degree", j["degree"].dump());
  const auto n = j["degree"].get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array() || g.size() != n) throw Error("parse", "generator has the wrong length", g.dump());
    std::vector<std::uint32_t> img;
    for (const auto& x : g) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= n) throw Error("parse", "bad image", g.dump());
      img.push_back(x.get<std::uint32_t>());
    }
    try {
      gens.emplace_back(std::move(img));
    } catch (const std::exception& e) {
      throw Error("parse", e.what(), g.dump());
    }
  }
  PermGroup G(n, std::move(gens));
  if (j.contains("order") && !j["order"].is_null()) {
    const BigInt claimed = parse_int_field(j["order"], "order");
    if (claimed != G.order())
      throw Error("parse", "claimed order does not match the generated group",
                  to_string(claimed) + " vs " + to_string(G.order()));
  }
  return G;
}

json group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return {{"degree", g.degree()}, {"generators", gens}, {"order", to_string(g.order())}};
}

PermGroup read_group_file(const std::string& path) { return group_from_json(read_json_file(path)); }

json bigint_json(const BigInt& a) { return to_string(a); }

json fq_to_json(const FqElem& a) {
  json c = json::array();
  for (auto x : a.coeffs()) c.push_back(x);
  return {{"p", a.field().p()}, {"r", a.field().degree()}, {"coeffs", c}};
}

json field_to_json(const FqField& F) { return {{"p", F.p()}, {"r", F.degree()}, {"modulus", F.modulus()}}; }

json bitangents_to_json(const BitangentSet& b) {
  json lines = json::array();
  for (const auto& bt : b.lines) {
    json l = {{"line", json::array()}, {"doubleContact", bt.double_contact}};
    for (const auto& c : bt.line) l["line"].push_back(fq_to_json(c));
    if (b.contact_field) {
      json pts = json::array();
      for (const auto& p : bt.contact_points) {
        json q = json::array();
        for (const auto& c : p) q.push_back(fq_to_json(c));
        pts.push_back(q);
      }
      l["contactPoints"] = pts;
    }
    lines.push_back(l);
  }
  json ddf = json::array();
  for (auto [d, n] : b.ddf_pattern) ddf.push_back({d, n});
  json out = {{"p", b.p},
              {"splittingDegree", b.r},
              {"projection", b.projection},
              {"field", field_to_json(*b.field)},
              {"ddf", ddf},
              {"lines", lines}};
  out["contactField"] = b.contact_field ? field_to_json(*b.contact_field) : json(nullptr);
  return out;
}

json lpoly_to_json(const LPolynomial& l) {
  json a = json::array();
  for (const auto& c : l.a) a.push_back(to_string(c));
  return {{"p", l.p},
          {"counts", l.counts},
          {"L", a},
          {"JPoints", to_string(l.jacobian_order())},
          {"functionalEquation", l.functional_equation_holds()}};
}

json flags_to_json(const ReductionFlags& f) {
  return {{"good", f.good},
          {"mult1Node", f.mult1_node},
          {"geomIrreducible", f.geom_irreducible},
          {"weilHenselPoint", f.weil_hensel_point}};
}

json fixed_row_to_json(const FixedRow& r) {
  json j = dims(r);
  json reps = json::array();
  for (const auto& v : r.coker_reps) reps.push_back(v.to_hex());
  j["cokerReps"] = reps;
  return j;
}

json table_to_json(const DescentTable& t) {
  json places = json::array();
  for (const auto& pl : t.places) {
    json j = fixed_row_to_json(pl.fixed);
    j["p"] = pl.datum.p;
    j["localSize"] = pl.local_size;
    j["goodUnramified"] = pl.datum.good_unramified;
    if (pl.datum.im_c_dim)
      j["imC"] = {{"dim", *pl.datum.im_c_dim}, {"exact", pl.datum.im_c_exact}, {"source", pl.datum.im_c_source}};
    else
      j["imC"] = nullptr;
    j["W"] = pl.w ? json(*pl.w) : json(nullptr);
    j["WExact"] = pl.w_exact;
    places.push_back(j);
  }
  json out = {{"global", fixed_row_to_json(t.global)}, {"places", places}, {"circAsserted", t.circ_asserted}};
  out["kappa"] = t.kappa ? json{{"kernelDim", t.kappa->kernel_dim}, {"cokernelDim", t.kappa->cokernel_dim}}
                         : json(nullptr);
  out["bound"] = t.bound ? json{{"selmerDim", t.bound->selmer_dim},
                                {"rank", t.bound->rank},
                                {"usedKappa", t.bound->used_kappa}}
                         : json(nullptr);
  return out;
}

json error_to_json(const Error& e) { return {{"code", e.code()}, {"message", e.what()}, {"context", e.context()}}; }

}  // namespace qdesc
