#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "qdesc/descent.hpp"
#include "qdesc/error.hpp"
#include "qdesc/permgrp.hpp"

using namespace qdesc;

namespace {

Perm cyc(std::size_t n, std::vector<std::uint32_t> c) { return Perm::from_cycles(n, {std::move(c)}); }

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

TEST_SUITE("permgrp") {
  TEST_CASE("small examples") {
    const PermGroup c2(2, {cyc(2, {0, 1})});
    CHECK(c2.order() == 2);
    CHECK(c2.is_transitive());
    const PermGroup triv = PermGroup::trivial(5);
    CHECK(triv.order() == 1);
    CHECK(stabilizer(triv, 3).order() == 1);
    CHECK_THROWS(Perm(std::vector<std::uint32_t>{0, 0, 1}));
  }

  TEST_CASE("Sp6 on 28 points") {
    const PermGroup sp = sp6_group();
    CHECK(sp.order() == 1451520);
    CHECK(sp.is_transitive());
    const PermGroup st = stabilizer(sp, 0);
    CHECK(st.order() == 51840);
    CHECK(sp.order() / st.order() == 28);
    CHECK(even_form_stabilizer().order() == 40320);
  }

  TEST_CASE("order and membership against brute force") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 3 + rng() % 5;
      std::vector<Perm> gens;
      const int k = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < k; ++i) gens.push_back(random_perm(n, rng));
      const PermGroup G(n, gens);
      const auto all = closure_bounded(n, gens, 10000);
      REQUIRE(all);
      CHECK(G.order() == all->size());
      const std::set<Perm> els(all->begin(), all->end());
      for (int i = 0; i < 8; ++i) {
        const Perm p = random_perm(n, rng);
        CHECK(G.contains(p) == (els.count(p) > 0));
      }
      std::size_t total = 0;
      for (const auto& o : G.orbits()) total += o.size();
      CHECK(total == n);
      CHECK(G.is_transitive() == (G.orbits().size() == 1));
      for (std::uint32_t pt = 0; pt < n; ++pt) {
        const PermGroup st = stabilizer(G, pt);
        for (const auto& h : st.generators()) CHECK((G.contains(h) && h(pt) == pt));
        CHECK(G.order() % st.order() == 0);
      }
    }
  }

  TEST_CASE("element ranks round-trip") {
    const PermGroup G = even_form_stabilizer();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t r = rng() % G.order_u64();
      CHECK(G.rank(G.element(r)) == r);
    }
  }

  TEST_CASE("cyclic subgroups") {
    const PermGroup c6(6, {cyc(6, {0, 1, 2, 3, 4, 5})});
    std::multiset<std::uint64_t> orders;
    for (const auto& g : cyclic_subgroups(c6)) orders.insert(g.order());
    CHECK(orders == std::multiset<std::uint64_t>{1, 2, 3, 6});
    const PermGroup s3(3, {cyc(3, {0, 1}), cyc(3, {0, 1, 2})});
    orders.clear();
    for (const auto& g : cyclic_subgroups(s3)) orders.insert(g.order());
    CHECK(orders == std::multiset<std::uint64_t>{1, 2, 2, 2, 3});
  }

  TEST_CASE("cyclic subgroups of the 40320 group cover every element once") {
    const PermGroup G = even_form_stabilizer();
    std::uint64_t total = 0;
    for (const auto& g : cyclic_subgroups(G)) total += euler_phi(g.order());
    CHECK(total == 40320);
  }

  TEST_CASE("census") {
    const PermGroup c2(28, {cyc(28, {0, 1})});
    const auto cc = cycle_type_census(c2);
    REQUIRE(cc.size() == 2);
    const auto sp = cycle_type_census(sp6_group());
    std::uint64_t total = 0;
    for (const auto& [ct, n] : sp) total += n;
    CHECK(total == 1451520);
    CHECK(sp.count({7, 7, 7, 7}) == 1);
  }

  TEST_CASE("census is conjugation invariant") {
    std::mt19937_64 rng(9);
    const PermGroup G = even_form_stabilizer();
    const auto sub = search_subgroup(G, 168, true, 0, 1000000);
    REQUIRE(sub);
    const Perm c = random_perm(28, rng);
    std::vector<Perm> conj;
    for (const auto& g : sub->generators()) conj.push_back(c * g * c.inverse());
    CHECK(cycle_type_census(*sub) == cycle_type_census(PermGroup(28, conj)));
  }

  TEST_CASE("subgroup search") {
    const PermGroup ev = even_form_stabilizer();
    const auto whole = search_subgroup(ev, 40320, false, 0, 1000);
    REQUIRE(whole);
    CHECK(whole->order() == 40320);

    const auto g56 = search_subgroup(ev, 56, true, 0, 1000000);
    REQUIRE(g56);
    CHECK(g56->order() == 56);
    CHECK(g56->is_transitive());
    for (const auto& h : g56->generators()) CHECK(ev.contains(h));
    const PermGroup s56 = stabilizer(*g56, 0);
    std::size_t fixed = 0;
    for (std::uint32_t i = 0; i < 28; ++i)
      if (std::all_of(s56.generators().begin(), s56.generators().end(), [&](const Perm& p) { return p(i) == i; }))
        ++fixed;
    CHECK(fixed == 4);

    const auto g168 = search_subgroup(ev, 168, true, 0, 1000000);
    REQUIRE(g168);
    CHECK(g168->is_transitive());
    const PermGroup s168 = stabilizer(*g168, 0);
    fixed = 0;
    for (std::uint32_t i = 0; i < 28; ++i)
      if (std::all_of(s168.generators().begin(), s168.generators().end(), [&](const Perm& p) { return p(i) == i; }))
        ++fixed;
    CHECK(fixed == 1);
  }

  TEST_CASE("search is deterministic for a seed") {
    const PermGroup ev = even_form_stabilizer();
    const auto a = search_subgroup(ev, 56, true, 4, 1000000);
    const auto b = search_subgroup(ev, 56, true, 4, 1000000);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->generators() == b->generators());
  }
}
