#include <algorithm>
#include <bit>
#include <cctype>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qdesc/cohom.hpp"
#include "qdesc/descent.hpp"
#include "qdesc/json_io.hpp"

namespace qdesc {
namespace {

struct RunConfig {
  std::string curve_path;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
  std::uint64_t cap = 1000000;
  std::string output;
  int threads = 1;  // accepted for interface stability; every computation here is sequential
};

json factor_prime_json(const BigInt& p) {
  if (p.fits_ulong_p()) return p.get_ui();
  return to_string(p);
}

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

json cmd_disc(const RunConfig& cfg) {
  const auto g = read_curve_file(cfg.curve_path);
  const BigInt d = discriminant_i27(g);
  json out = {{"I27", to_string(d)}, {"factors", json::array()}, {"S", json::array({2})}, {"primes", json::array()}};
  if (d == 0) throw Error("domain", "singular quartic", "I27 = 0");
  for (const auto& [p, e] : factor_int(d, cfg.seed)) {
    out["factors"].push_back({factor_prime_json(p), e});
    if (p == 2) continue;
    if (e >= 2) out["S"].push_back(factor_prime_json(p));
    json row = {{"p", factor_prime_json(p)}, {"exponent", e}};
    if (p.fits_uint_p()) {
      row["flags"] = flags_to_json(reduction_flags(g, static_cast<std::uint32_t>(p.get_ui())));
    } else {
      row["flags"] = nullptr;
    }
    out["primes"].push_back(row);
  }
  return out;
}

json cmd_bitangents(const RunConfig& cfg) {
  return bitangents_to_json(bitangents_fq(read_curve_file(cfg.curve_path), cfg.p));
}

json cmd_incidence(const RunConfig& cfg) {
  const BitangentSet b = bitangents_fq(read_curve_file(cfg.curve_path), cfg.p, false);
  const IncidenceStructure s = syzygetic_structure(b);
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> pair_count;
  for (const auto& q : s.quads)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ++pair_count[{q[i], q[j]}];
  int lo = std::numeric_limits<int>::max(), hi = 0;
  for (std::uint32_t i = 0; i < s.n; ++i)
    for (std::uint32_t j = i + 1; j < s.n; ++j) {
      const auto it = pair_count.find({i, j});
      const int c = it == pair_count.end() ? 0 : it->second;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  const Perm frob = frobenius_on_bitangents(b);
  json out = {{"p", b.p},
              {"splittingDegree", b.r},
              {"sigma", s.quads},
              {"sigmaCount", s.quads.size()},
              {"pairMultiplicity", {lo, hi}},
              {"frobenius", frob.images()},
              {"cycleType", frob.cycle_type()},
              {"ddfCycleType", ddf_cycle_type(b)}};
  out["cycleTypeMatchesDdf"] = frob.cycle_type() == ddf_cycle_type(b);
  const CanonicalTheta c = build_canonical(3);
  const auto m = match_structures(s, c);
  if (!m) {
    out["matching"] = nullptr;
    out["decomposition"] = nullptr;
    return out;
  }
  out["matching"] = *m;
  std::vector<std::uint32_t> img(s.n);
  for (std::uint32_t i = 0; i < s.n; ++i) img[(*m)[i]] = (*m)[frob(i)];
  const Perm canon_frob(std::move(img));
  out["decomposition"] = group_to_json(PermGroup(s.n, {canon_frob}));
  out["inSp6"] = preserves(canon_frob, c.structure());
  return out;
}

std::set<int> subset_sums(const std::vector<int>& parts) {
  std::set<int> sums{0};
  for (int d : parts) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

json cmd_galois(const RunConfig& cfg) {
  const auto g = read_curve_file(cfg.curve_path);
  const BigInt d = discriminant_i27(g);
  json per = json::array();
  std::set<std::vector<int>> types;
  std::set<int> degrees;
  for (int k = 1; k < 28; ++k) degrees.insert(k);
  BigInt order_lcm = 1;
  for (auto p : sorted_unique(cfg.primes)) {
    json row = {{"p", p}};
    if (p == 2 || mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      row["skipped"] = p == 2 ? "characteristic 2" : "bad reduction";
      per.push_back(row);
      continue;
    }
    const BitangentSet b = bitangents_fq(g, p, false);
    const std::vector<int> ct = ddf_cycle_type(b);
    row["cycleType"] = ct;
    const int ord = std::accumulate(ct.begin(), ct.end(), 1, [](int a, int x) { return std::lcm(a, x); });
    row["elementOrder"] = ord;
    order_lcm = lcm(order_lcm, BigInt(ord));
    per.push_back(row);
    types.insert(ct);
    const auto sums = subset_sums(ct);
    std::set<int> keep;
    for (int k : degrees)
      if (sums.count(k)) keep.insert(k);
    degrees = std::move(keep);
  }
  json out = {{"primes", per},
              {"orbitMultisets", types},
              {"possibleFactorDegrees", degrees},
              {"orderDivisibleBy", to_string(order_lcm)}};
  // a rational factor of h of degree k needs a sum of cycle lengths equal to k at every prime
  out["transitive"] = types.empty() ? json(nullptr) : json(degrees.empty());
  return out;
}

json cmd_canonical(int genus, const std::string& group_out, bool even_form) {
  const CanonicalTheta c = build_canonical(genus);
  const PermGroup G(c.size(), c.generators);
  json out = {{"genus", genus},
              {"deltaCount", c.size()},
              {"offsets", c.offsets},
              {"sigma", c.sigma},
              {"sigmaCount", c.sigma.size()},
              {"sigmaFormula", sigma_count_formula(genus)},
              {"sigmaExhaustive", sigma_count_exhaustive(c)},
              {"transvections", c.transvections},
              {"groupOrder", to_string(G.order())},
              {"stabilizerOrder", to_string(stabilizer(G, 0).order())},
              {"transitive", G.is_transitive()}};
  if (even_form && genus != 3) throw Error("domain", "--even-form needs genus 3", std::to_string(genus));
  if (!group_out.empty()) write_json_file(group_out, group_to_json(even_form ? even_form_stabilizer() : G));
  return out;
}

const GModule& pick_module(const ModuleFamily& f, const std::string& name) {
  if (name == "R") return f.R;
  if (name == "Rdual") return f.Rdual;
  if (name == "J2") return f.J2;
  if (name == "Edual") return f.Edual;
  if (name == "E") return f.E;
  throw Error("parse", "unknown module", name);
}

json hex_rows(const std::vector<F2Vec>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_hex());
  return a;
}

json cmd_cohom(const std::string& group_path, const std::string& module, bool h1_only) {
  const PermGroup G = read_group_file(group_path);
  const ModuleFamily f = module_family(G);
  const GModule& m = pick_module(f, module);
  json out = {{"module", module},
              {"dim", m.dim()},
              {"groupOrder", to_string(G.order())},
              {"moduleData", {{"sub", hex_rows(m.sub().basis())}, {"quot", hex_rows(m.quot().basis())}}}};
  if (h1_only) {
    const CocycleSpace h = h1_group(G, m);
    out["h1Dim"] = h.h1_dim();
    out["generators"] = json::array();
    for (const auto& p : h.generators) out["generators"].push_back(p.images());
    out["h1Basis"] = hex_rows(h.h1);
    return out;
  }
  const Sha1Bound s = sha1_bound(G, m);
  out["h1Dim"] = s.h1_dimension;
  out["sha1Bound"] = s.dimension;
  out["cyclicSubgroups"] = s.cyclic_subgroups;
  out["generators"] = json::array();
  for (const auto& p : s.generators) out["generators"].push_back(p.images());
  out["sha1Representatives"] = hex_rows(s.representatives);
  return out;
}

json cmd_count(const RunConfig& cfg) { return lpoly_to_json(l_polynomial(read_curve_file(cfg.curve_path), cfg.p)); }

json cmd_torsion(const RunConfig& cfg) {
  const auto g = read_curve_file(cfg.curve_path);
  const BigInt d = discriminant_i27(g);
  std::vector<std::uint32_t> good;
  json per = json::array();
  for (auto p : sorted_unique(cfg.primes)) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      per.push_back({{"p", p}, {"good", false}});
      continue;
    }
    good.push_back(p);
    per.push_back({{"p", p}, {"good", true}, {"JPoints", to_string(l_polynomial(g, p).jacobian_order())}});
  }
  return {{"primes", per}, {"bound", to_string(torsion_bound(g, good))}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error("parse", "expected a non-negative integer", what + ": " + s);
  return std::stoull(s);
}

// place:groupfile:imC with imC one of: good, N (exact #im C_v), <=N (upper bound), ? (unknown)
LocalDatum parse_local(const std::string& arg) {
  const auto parts = split(arg, ':');
  if (parts.size() != 3) throw Error("parse", "expected place:groupfile:imC", arg);
  LocalDatum d;
  d.place = parts[0];
  d.p = static_cast<std::uint32_t>(parse_u64(parts[0], "place"));
  d.decomposition = read_group_file(parts[1]);
  std::string c = parts[2];
  if (c == "good") {
    d.good_unramified = true;
    d.im_c_source = "good unramified";
    return d;
  }
  if (c == "?") return d;
  if (c.rfind("<=", 0) == 0) {
    d.im_c_exact = false;
    c = c.substr(2);
  }
  const std::uint64_t n = parse_u64(c, "imC");
  if (n == 0 || (n & (n - 1))) throw Error("parse", "#im C_v must be a power of 2", arg);
  d.im_c_dim = std::countr_zero(n);
  d.im_c_source = "command line";
  return d;
}

json cmd_table(const RunConfig& cfg, const std::string& global, const std::vector<std::string>& locals,
               std::optional<int> fake, int multiple, bool circ) {
  const auto g = read_curve_file(cfg.curve_path);
  const ModuleFamily f = module_family(read_group_file(global));
  std::vector<LocalDatum> data;
  for (const auto& l : locals)
    for (const auto& s : split(l, ','))
      if (!s.empty()) data.push_back(parse_local(s));
  json out = table_to_json(descent_table(f, data, fake, multiple, circ));
  out["curve"] = curve_to_json(g);
  return out;
}

json cmd_search(const RunConfig& cfg, std::uint64_t order, bool transitive, const std::string& within) {
  const PermGroup G = within.empty() ? sp6_group() : read_group_file(within);
  const auto h = search_subgroup(G, order, transitive, cfg.seed, cfg.cap);
  if (!h) throw Error("not_found", "no subgroup of the requested order found within the cap", std::to_string(order));
  json out = group_to_json(*h);
  out["transitive"] = h->is_transitive();
  out["seed"] = cfg.seed;
  return out;
}

void emit(const RunConfig& cfg, const json& j) {
  if (cfg.output.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(cfg.output, j);
}

int run(int argc, char** argv) {
  CLI::App app{"Explicit 2-descent tools for plane quartics"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Sample cap for subgroup search")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");

  std::function<json()> action;
  auto curve_cmd = [&](const std::string& name, const std::string& help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("curve", cfg.curve_path, "Curve JSON file")->required();
    return sc;
  };

  auto* disc = curve_cmd("disc", "I27, its factorization and a choice of S");
  disc->callback([&] { action = [&] { return cmd_disc(cfg); }; });

  auto* bit = curve_cmd("bitangents", "The 28 bitangents over a finite field");
  bit->add_option("--p", cfg.p, "Odd prime of good reduction")->required();
  bit->callback([&] { action = [&] { return cmd_bitangents(cfg); }; });

  auto* inc = curve_cmd("incidence", "Syzygetic quadruples, matching and Frobenius");
  inc->add_option("--p", cfg.p, "Odd prime of good reduction")->required();
  inc->callback([&] { action = [&] { return cmd_incidence(cfg); }; });

  auto* gal = curve_cmd("galois", "Frobenius cycle types on the bitangents");
  gal->add_option("--primes", cfg.primes, "Comma-separated primes")->required()->delimiter(',');
  gal->callback([&] { action = [&] { return cmd_galois(cfg); }; });

  int genus = 3;
  std::string group_out;
  bool even_form = false;
  auto* can = app.add_subcommand("canonical", "Canonical theta structure of genus g");
  can->add_option("--genus", genus, "Genus (2..4)")->required();
  can->add_option("--group-out", group_out, "Write the symplectic group as a group file");
  can->add_flag("--even-form", even_form, "Write the stabilizer of an even form instead (genus 3)");
  can->callback([&] { action = [&] { return cmd_canonical(genus, group_out, even_form); }; });

  std::string group_path, module = "J2";
  bool h1_only = false;
  auto* coh = app.add_subcommand("cohom", "H^1 and the Sha^1 bound for a module of the family");
  coh->add_option("--group", group_path, "Group file on 28 points")->required();
  coh->add_option("--module", module, "R, Rdual, J2, Edual or E")->check(CLI::IsMember({"R", "Rdual", "J2", "Edual", "E"}));
  coh->add_flag("--h1-only", h1_only, "Skip the cyclic-subgroup intersection");
  coh->callback([&] { action = [&] { return cmd_cohom(group_path, module, h1_only); }; });

  auto* cnt = curve_cmd("count", "Point counts, L-polynomial and #J(F_p)");
  cnt->add_option("--p", cfg.p, "Prime of good reduction")->required();
  cnt->callback([&] { action = [&] { return cmd_count(cfg); }; });

  auto* tor = curve_cmd("torsion", "Bound on the rational torsion");
  tor->add_option("--primes", cfg.primes, "Comma-separated primes")->required()->delimiter(',');
  tor->callback([&] { action = [&] { return cmd_torsion(cfg); }; });

  std::string global;
  std::vector<std::string> locals;
  std::optional<int> fake;
  int multiple = 1;
  bool circ = false;
  auto* tab = curve_cmd("table", "Descent table and rank bound");
  tab->add_option("--global", global, "Group file for G")->required();
  tab->add_option("--local", locals, "place:groupfile:imC (imC = N, <=N, good or ?)");
  tab->add_option("--fake-dim", fake, "log2 of the fake Selmer bound");
  tab->add_option("--rank-multiple", multiple, "Known divisor of the rank")->check(CLI::PositiveNumber);
  tab->add_flag("--circ", circ, "Assert the hypothesis on the global H^1 class");
  tab->callback([&] { action = [&] { return cmd_table(cfg, global, locals, fake, multiple, circ); }; });

  std::uint64_t order = 0;
  bool transitive = false;
  std::string within;
  auto* srch = app.add_subcommand("search-subgroup", "Seeded search for a subgroup of given order");
  srch->add_option("--order", order, "Target order")->required();
  srch->add_flag("--transitive", transitive, "Require a transitive subgroup");
  srch->add_option("--within", within, "Ambient group file (default Sp6 on 28 points)");
  srch->callback([&] { action = [&] { return cmd_search(cfg, order, transitive, within); }; });

  auto* cen = app.add_subcommand("census", "Cycle-type census, one JSON line per type");
  cen->add_option("--group", group_path, "Group file")->required();
  cen->callback([&] {
    action = [&] {
      const auto census = cycle_type_census(read_group_file(group_path));
      for (const auto& [ct, n] : census) std::cout << json{{"cycleType", ct}, {"count", n}}.dump() << '\n';
      return json();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_to_json(Error("usage", e.what())).dump(2) << '\n';
    return 2;
  }
  try {
    const json out = action();
    if (!out.is_null()) emit(cfg, out);
  } catch (const Error& e) {
    std::cout << error_to_json(e).dump(2) << '\n';
    return e.code() == "parse" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << error_to_json(Error("internal", e.what())).dump(2) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace qdesc

int main(int argc, char** argv) { return qdesc::run(argc, argv); }
