#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "cohom_oracle.hpp"
#include "doctest.h"
#include "qdesc/cohom.hpp"
#include "qdesc/descent.hpp"

using namespace qdesc;
using namespace qdesc::testing;

TEST_SUITE("cohom") {
  TEST_CASE("examples") {
    const Perm s = cyc(2, {0, 1});
    const PermGroup c2(2, {s});
    const GModule triv = GModule::from_matrices({s}, {F2Mat::identity(1)}, 1);
    CHECK(h1_group(c2, triv).h1_dim() == 1);
    CHECK(h1_cyclic(F2Mat::identity(1), 2).dimension == 1);
    CHECK(h1_group(c2, GModule::permutation({s}, 2)).h1_dim() == 0);
    CHECK(h1_group(c2, GModule::from_matrices({s}, {F2Mat(0, 0)}, 0)).h1_dim() == 0);
  }

  TEST_CASE("C7 on J[2] without fixed vectors") {
    const PermGroup sp = sp6_group();
    std::optional<Perm> g7;
    std::mt19937_64 rng(1);
    while (!g7) {
      const Perm p = sp.random_element(rng);
      if (p.order() == 7) g7 = p;
    }
    const ModuleFamily f = module_family(PermGroup(28, {*g7}));
    CHECK(fixed_points(f.J2, f.group).empty());
    CHECK(h1_group(f.group, f.J2).h1_dim() == 0);
    CHECK(local_size_dim(fixed_row(f, f.group, "7"), 7) == 0);
  }

  TEST_CASE("brute-force oracle on groups of order <= 12, modules of dim <= 3") {
    std::mt19937_64 rng(2024);
    int cases = 0;
    for (const auto& [name, g] : small_groups()) {
      CAPTURE(name);
      for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<std::vector<F2Mat>> homs;
        homs.push_back(std::vector<F2Mat>(g.generators().size(), F2Mat::identity(d)));
        for (int attempt = 0; attempt < 400 && homs.size() < 8; ++attempt)
          if (auto h = random_hom(g, d, rng)) homs.push_back(*h);
        for (const auto& h : homs) {
          const GModule m = GModule::from_matrices(g.generators(), h, d);
          CHECK(h1_group(g, m).h1_dim() == h1_bruteforce(g, h, d));
          ++cases;
        }
      }
      // permutation modules of small degree
      if (g.degree() <= 3) {
        const GModule m = GModule::permutation(g.generators(), g.degree());
        std::vector<F2Mat> h;
        for (const auto& s : g.generators()) h.push_back(m.element_matrix(s));
        CHECK(h1_group(g, m).h1_dim() == h1_bruteforce(g, h, g.degree()));
        ++cases;
      }
    }
    MESSAGE("oracle cases: " << cases);
    CHECK(cases >= 300);
  }

  TEST_CASE("cyclic closed form for n <= 60, dim <= 6") {
    std::mt19937_64 rng(60);
    int cases = 0;
    for (std::uint32_t n = 1; n <= 60; ++n) {
      std::vector<std::uint32_t> c(n);
      std::iota(c.begin(), c.end(), 0u);
      const Perm s = n == 1 ? Perm::identity(1) : cyc(n, c);
      const PermGroup g(n, {s});
      for (int t = 0; t < 4; ++t) {
        const std::size_t d = 1 + rng() % 6;
        const F2Mat a = matrix_of_order_dividing(n, d, rng);
        const GModule m = GModule::from_matrices({s}, {a}, d);
        CHECK(h1_group(g, m).h1_dim() == h1_cyclic(a, n).dimension);
        CHECK(sha1_bound(g, m).dimension == 0);
        ++cases;
      }
    }
    CHECK(cases == 240);
  }

  TEST_CASE("Sha^1 bound vanishes for trivial action") {
    int cases = 0;
    for (const auto& [name, g] : small_groups())
      for (std::size_t d = 1; d <= 3; ++d) {
        const GModule m =
            GModule::from_matrices(g.generators(), std::vector<F2Mat>(g.generators().size(), F2Mat::identity(d)), d);
        const Sha1Bound s = sha1_bound(g, m);
        CHECK(s.dimension == 0);
        CHECK(s.dimension <= s.h1_dimension);
        ++cases;
      }
    CHECK(cases >= 60);
  }

  TEST_CASE("cocycle identity on random elements") {
    const PermGroup ev = even_form_stabilizer();
    const ModuleFamily f = module_family(ev);
    const CocycleEngine e(ev, f.Rdual);
    std::mt19937_64 rng(3);
    const auto& sp = e.space();
    REQUIRE(!sp.z1.empty());
    for (const auto& z : sp.z1)
      for (int t = 0; t < 100; ++t) {
        const Perm g = ev.random_element(rng);
        for (const auto& s : sp.generators) CHECK(e.evaluate(z, g * s) == (e.evaluate(z, g) ^ e.action(g).apply(e.evaluate(z, s))));
      }
  }

  TEST_CASE("pinned values for the 40320 group and Sp6") {
    const PermGroup ev = even_form_stabilizer();
    const ModuleFamily f = module_family(ev);
    const Sha1Bound s = sha1_bound(ev, f.Rdual);
    CHECK(s.h1_dimension == 2);
    CHECK(s.dimension == 0);
    // H^1(Sp6(F2), F2^6) = F2
    const ModuleFamily sp = module_family(sp6_group());
    CHECK(h1_group(sp.group, sp.J2).h1_dim() == 1);
  }
}
