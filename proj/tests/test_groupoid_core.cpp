#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gpd/group_table.hpp"
#include "gpd/groupoid.hpp"
#include "zoo.hpp"

using namespace gpd;

TEST_CASE("trivial groupoid data validates") {
  raw_groupoid raw;
  raw.name = "T";
  raw.objects = 1;
  raw.arrows = {{0, 0}};
  raw.compose = {{0, 0, 0}};
  groupoid_ptr t = finite_groupoid::validate(raw);
  CHECK(t->object_count() == 1);
  CHECK(t->arrow_count() == 1);
  CHECK(t->unit(0) == 0);
  CHECK(t->inverse(0) == 0);
}

TEST_CASE("pair groupoid on two objects validates") {
  // Oracle: all 8 composable pairs of P2, enumerated by hand.  Arrow a->b
  // has id 2a+b.
  raw_groupoid raw;
  raw.objects = 2;
  raw.arrows = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  raw.compose = {{0, 0, 0}, {0, 1, 1}, {1, 2, 0}, {1, 3, 1},
                 {2, 0, 2}, {2, 1, 3}, {3, 2, 2}, {3, 3, 3}};
  groupoid_ptr p2 = finite_groupoid::validate(raw);
  CHECK(p2->arrow_count() == 4);
  CHECK(p2->unit(0) == 0);
  CHECK(p2->unit(1) == 3);
  CHECK(p2->inverse(1) == 2);
  CHECK(p2->structurally_equal(*pair_groupoid(2)));
}

TEST_CASE("omitted composite is rejected") {
  raw_groupoid raw;
  raw.objects = 2;
  raw.arrows = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  raw.compose = {{0, 0, 0}, {0, 1, 1}, {1, 2, 0}, {1, 3, 1},
                 {2, 0, 2}, {2, 1, 3}, {3, 2, 2}};  // 3.3 missing
  CHECK_THROWS_WITH_AS(finite_groupoid::validate(raw),
                       doctest::Contains("MissingComposite"), groupoid_error);
}

TEST_CASE("ill-typed and non-associative data are rejected") {
  raw_groupoid raw;
  raw.objects = 2;
  raw.arrows = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  SUBCASE("composite of arrows that do not meet") {
    raw.compose = {{0, 3, 1}};
    CHECK_THROWS_WITH_AS(finite_groupoid::validate(raw),
                         doctest::Contains("IllTypedComposite"),
                         groupoid_error);
  }
  SUBCASE("composite with wrong endpoints") {
    raw.compose = {{0, 1, 2}};
    CHECK_THROWS_WITH_AS(finite_groupoid::validate(raw),
                         doctest::Contains("IllTypedComposite"),
                         groupoid_error);
  }
  SUBCASE("non-associative table") {
    // Z3-like loops at one object with a broken table.
    raw_groupoid bad;
    bad.objects = 1;
    bad.arrows = {{0, 0}, {0, 0}, {0, 0}};
    bad.compose = {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 1, 2},
                   {1, 2, 0}, {2, 0, 2}, {2, 1, 0}, {2, 2, 2}};
    CHECK_THROWS_AS(finite_groupoid::validate(bad), groupoid_error);
  }
  SUBCASE("no unit") {
    raw_groupoid bad;
    bad.objects = 1;
    bad.arrows = {{0, 0}, {0, 0}};
    // x.y = x: associative, but nothing acts as a left unit.
    bad.compose = {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}};
    try {
      finite_groupoid::validate(bad);
      CHECK(false);
    } catch (const groupoid_error& e) {
      CHECK(e.kind() == errc::no_unit);
    }
  }
}

TEST_CASE("empty groupoid is admitted") {
  raw_groupoid raw;
  raw.objects = 0;
  groupoid_ptr g = finite_groupoid::validate(raw);
  CHECK(g->object_count() == 0);
  CHECK(coarse_space_of(*g).n_classes == 0);
}

TEST_CASE("coarse space counts components") {
  CHECK(coarse_space_of(*pair_groupoid(2)).n_classes == 1);
  CHECK(coarse_space_of(*discrete_groupoid(2)).n_classes == 2);
  // disjoint union P2 + T; component count oracle: BFS over arrows done by
  // the zoo builder itself, expected 2.
  auto du = disjoint_union(pair_groupoid(2), trivial_groupoid());
  coarse_space cs = coarse_space_of(*du.gpd);
  CHECK(cs.n_classes == 2);
  CHECK(cs.class_of[0] == cs.class_of[1]);
  CHECK(cs.class_of[2] == 1);
}

TEST_CASE("coarse classes are reachability orbits") {
  for (const groupoid_ptr& g : zoo::all()) {
    coarse_space cs = coarse_space_of(*g);
    // Independent reachability check per pair of objects.
    for (object_id a = 0; a < g->object_count(); ++a)
      for (object_id b = 0; b < g->object_count(); ++b) {
        bool connected = !g->hom(a, b).empty();
        if (connected) CHECK(cs.class_of[a] == cs.class_of[b]);
      }
  }
}

TEST_CASE("isotropy groups") {
  groupoid_ptr bs3 = zoo::bs3();
  isotropy_group iso = isotropy_group_at(*bs3, 0);
  CHECK(iso.table.order == 6);
  CHECK_FALSE(iso.table.is_abelian());

  CHECK(isotropy_group_at(*pair_groupoid(2), 0).table.order == 1);
  CHECK(isotropy_group_at(*discrete_groupoid(2), 1).table.order == 1);
}

TEST_CASE("restriction keeps arrows between retained objects") {
  groupoid_ptr p2 = pair_groupoid(2);
  restriction r = restrict_objects(p2, {0});
  CHECK(r.sub->object_count() == 1);
  CHECK(r.sub->arrow_count() == 1);
  CHECK(r.sub->structurally_equal(*trivial_groupoid()));

  restriction all = restrict_objects(p2, {0, 1});
  CHECK(all.sub->structurally_equal(*p2));

  CHECK_THROWS_AS(restrict_objects(p2, {}), groupoid_error);
}

TEST_CASE("restriction is idempotent") {
  groupoid_ptr g = zoo::p2_plus_t();
  restriction once = restrict_objects(g, {0, 2});
  std::vector<object_id> everything(once.sub->object_count());
  for (object_id i = 0; i < everything.size(); ++i) everything[i] = i;
  restriction twice = restrict_objects(once.sub, everything);
  CHECK(twice.sub->structurally_equal(*once.sub));
}

TEST_CASE("classifying groupoids") {
  groupoid_ptr bz2 = classifying_groupoid(group_table::cyclic(2));
  CHECK(bz2->object_count() == 1);
  CHECK(bz2->arrow_count() == 2);
  groupoid_ptr bs3 = classifying_groupoid(group_table::symmetric(3));
  CHECK(bs3->object_count() == 1);
  CHECK(bs3->arrow_count() == 6);

  std::vector<std::uint32_t> bad = {0, 1, 1, 1};  // not a group table
  CHECK_THROWS_WITH_AS(group_table::validate(2, bad),
                       doctest::Contains("NotAGroup"), groupoid_error);
}

TEST_CASE("group table helpers") {
  group_table s3 = group_table::symmetric(3);
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
  group_table z4 = group_table::cyclic(4);
  CHECK(z4.element_order(1) == 4);
  group_table v4 = group_table::direct_product(group_table::cyclic(2),
                                               group_table::cyclic(2));
  CHECK(v4.order == 4);
  CHECK(groups_isomorphic(v4, v4));
  CHECK_FALSE(groups_isomorphic(v4, z4));
  CHECK(groups_isomorphic(s3, s3));
}

TEST_CASE("action groupoids") {
  SUBCASE("trivial action of T on one point") {
    groupoid_ptr t = trivial_groupoid();
    groupoid_action act;
    act.n_points = 1;
    act.anchor = {0};
    act.act = {0};
    auto res = action_groupoid(t, act);
    CHECK(res.gpd->structurally_equal(*t));
  }
  SUBCASE("conjugation action of BZ2 on its loops") {
    groupoid_ptr bz2 = classifying_groupoid(group_table::cyclic(2));
    groupoid_action act;
    act.n_points = 2;
    act.anchor = {0, 0};
    act.act.assign(4, no_object);
    for (arrow_id y = 0; y < 2; ++y)
      for (std::uint32_t p = 0; p < 2; ++p)
        act.act[y * 2 + p] = p;  // conjugation in an abelian group is trivial
    auto res = action_groupoid(bz2, act);
    CHECK(res.gpd->object_count() == 2);
    CHECK(res.gpd->arrow_count() == 4);
  }
  SUBCASE("action violating the unit axiom") {
    groupoid_ptr d2 = discrete_groupoid(2);
    groupoid_action act;
    act.n_points = 2;
    act.anchor = {0, 1};
    act.act.assign(4, no_object);
    act.act[0 * 2 + 0] = 0;
    act.act[1 * 2 + 1] = 0;  // act(1_1, p1) = p0, breaking act(1,p)=p
    CHECK_THROWS_WITH_AS(action_groupoid(d2, act),
                         doctest::Contains("InvalidAction"), groupoid_error);
  }
}

TEST_CASE("groupoid axioms hold on the whole zoo") {
  for (const groupoid_ptr& g : zoo::all()) {
    CHECK_NOTHROW(verify_groupoid_axioms(*g));
    for (arrow_id x = 0; x < g->arrow_count(); ++x)
      CHECK(g->inverse(g->inverse(x)) == x);
  }
}

TEST_CASE("morita equivalence via skeletons") {
  CHECK(morita_equivalent(*pair_groupoid(2), *trivial_groupoid()));
  CHECK_FALSE(morita_equivalent(*zoo::bz2(), *trivial_groupoid()));
  for (const groupoid_ptr& g : zoo::all()) CHECK(morita_equivalent(*g, *g));
  CHECK_FALSE(morita_equivalent(*zoo::bz4(), *zoo::bv4()));
  CHECK(morita_equivalent(*zoo::p2_plus_t(), *discrete_groupoid(2)));
}
