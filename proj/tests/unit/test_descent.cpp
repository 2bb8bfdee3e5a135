#include "doctest.h"
#include "qdesc/descent.hpp"
#include "qdesc/error.hpp"

using namespace qdesc;

namespace {

const PermGroup& g40320() {
  static const PermGroup g = even_form_stabilizer();
  return g;
}

const ModuleFamily& fam40320() {
  static const ModuleFamily f = module_family(g40320());
  return f;
}

}  // namespace

TEST_SUITE("descent") {
  TEST_CASE("fixed rows") {
    const ModuleFamily sp = module_family(sp6_group());
    const FixedRow a = fixed_row(sp, sp.group, "global");
    CHECK(a.j2 == 0);
    CHECK(a.edual == 0);
    CHECK(a.rdual == 0);
    CHECK(a.coker == 0);

    const FixedRow b = fixed_row(fam40320(), g40320(), "global");
    CHECK(b.j2 == 0);
    CHECK(b.edual == 0);
    CHECK(b.rdual == 1);
    CHECK(b.coker == 1);
    CHECK(b.coker_reps.size() == 1);

    const auto g56 = search_subgroup(g40320(), 56, true, 0, 1000000);
    REQUIRE(g56);
    const FixedRow c = fixed_row(fam40320(), *g56, "2");
    CHECK(c.j2 == 0);
    CHECK(c.edual == 0);
    CHECK(c.rdual == 1);
    CHECK(local_size_dim(c, 2) == 3);
    CHECK(local_size_dim(c, 5) == 0);
  }

  TEST_CASE("W_v") {
    const FixedRow b = fixed_row(fam40320(), g40320(), "global");
    CHECK(w_v_dim(b, 5, std::nullopt, true) == 0);
    CHECK(w_v_dim(b, 2, 3, false) >= 0);
  }

  TEST_CASE("curve 1 table") {
    const auto g56 = search_subgroup(g40320(), 56, true, 0, 1000000);
    REQUIRE(g56);
    LocalDatum d;
    d.place = "2";
    d.p = 2;
    d.decomposition = *g56;
    d.im_c_dim = 3;
    d.im_c_source = "test";
    const DescentTable t = descent_table(fam40320(), {d}, 0);
    REQUIRE(t.places.size() == 1);
    REQUIRE(t.places[0].w);
    CHECK(*t.places[0].w == 1);
    REQUIRE(t.kappa);
    CHECK(t.kappa->kernel_dim == 0);
    REQUIRE(t.bound);
    CHECK(t.bound->selmer_dim == 0);
    CHECK(t.bound->rank == 0);
    CHECK(t.bound->used_kappa);
  }

  TEST_CASE("curve 2 bound from the Sp6 row") {
    const ModuleFamily sp = module_family(sp6_group());
    const DescentTable t = descent_table(sp, {}, 1);
    REQUIRE(t.bound);
    CHECK(t.bound->rank <= 1);
    CHECK(t.global.coker == 0);
  }

  TEST_CASE("curve 3 bound is monotone in im C") {
    const PermGroup sp = sp6_group();
    const auto g504 = search_subgroup(sp, 504, true, 0, 1000000);
    REQUIRE(g504);
    const auto d2 = search_subgroup(*g504, 56, true, 0, 1000000);
    REQUIRE(d2);
    const ModuleFamily f = module_family(*g504);
    LocalDatum d;
    d.place = "2";
    d.p = 2;
    d.decomposition = *d2;
    d.im_c_dim = 3;
    d.im_c_exact = false;
    const DescentTable loose = descent_table(f, {d}, 3);
    REQUIRE(loose.bound);
    CHECK(loose.bound->selmer_dim == 5);
    CHECK_FALSE(loose.kappa);

    // with rank a multiple of 3 the loose bound already gives 3
    CHECK(descent_table(f, {d}, 3, 3).bound->rank == 3);

    // #im C_2 = 2 also cuts the fake Selmer bound to 2^1
    d.im_c_dim = 1;
    d.im_c_exact = true;
    const DescentTable tight = descent_table(f, {d}, 1);
    REQUIRE(tight.bound);
    REQUIRE(tight.places[0].w);
    CHECK(*tight.places[0].w == 0);
    CHECK(tight.bound->selmer_dim == 3);
    CHECK(tight.bound->selmer_dim <= loose.bound->selmer_dim);
    CHECK(tight.bound->rank <= loose.bound->rank);
  }

  TEST_CASE("rank bound arithmetic") {
    CHECK(rank_bound(3, 0, 0).rank == 3);
    CHECK(rank_bound(3, 2, 1).selmer_dim == 5);
    CHECK(rank_bound(3, 2, 1).rank == 4);
    CHECK(rank_bound(5, 0, 0, 2).rank == 4);
  }

  TEST_CASE("decomposition groups must lie in G") {
    LocalDatum d;
    d.place = "3";
    d.p = 3;
    d.decomposition = sp6_group();
    d.im_c_dim = 0;
    CHECK_THROWS_AS(descent_table(fam40320(), {d}, 0), Error);
  }
}
