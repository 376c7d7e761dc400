#include "doctest.h"
#include "gpd/fiber_product.hpp"
#include "zoo.hpp"

using namespace gpd;

namespace {

strict_morphism to_trivial(const groupoid_ptr& g) {
  strict_morphism f;
  f.dom = g;
  f.cod = zoo::t();
  f.f0.assign(g->object_count(), 0);
  f.f1.assign(g->arrow_count(), 0);
  return f;
}

}  // namespace

TEST_CASE("fiber product sizes") {
  SUBCASE("(P2 -> T) x_T (P2 -> T)") {
    // Objects (a, x, b): 2 * 1 * 2; arrows counted by brute force over
    // (y, o, z) with matching sources: each of 4 objects carries 2*2.
    groupoid_ptr p2 = zoo::p2();
    fiber_product_bundle fp = fiber_product(to_trivial(p2), to_trivial(p2));
    CHECK(fp.total->object_count() == 4);
    CHECK(fp.total->arrow_count() == 16);
    CHECK_NOTHROW(verify_groupoid_axioms(*fp.total));
    CHECK_NOTHROW(fp.pi1.verify());
    CHECK_NOTHROW(fp.pi2.verify());
  }
  SUBCASE("BZ2 x_{id,BZ2,id} BZ2") {
    groupoid_ptr bz2 = zoo::bz2();
    strict_morphism id = strict_morphism::identity(bz2);
    fiber_product_bundle fp = fiber_product(id, id);
    CHECK(fp.total->object_count() == 2);
    CHECK(fp.total->arrow_count() == 8);
    CHECK_NOTHROW(verify_groupoid_axioms(*fp.total));
  }
  SUBCASE("T x_T T = T") {
    strict_morphism id = strict_morphism::identity(zoo::t());
    fiber_product_bundle fp = fiber_product(id, id);
    CHECK(fp.total->structurally_equal(*zoo::t()));
  }
  SUBCASE("codomain mismatch is rejected") {
    CHECK_THROWS_WITH_AS(
        fiber_product(strict_morphism::identity(zoo::t()),
                      strict_morphism::identity(zoo::bz2())),
        doctest::Contains("CodomainMismatch"), groupoid_error);
  }
}

TEST_CASE("strict fiber product sizes") {
  SUBCASE("BZ2 x~_T BZ2 is the Klein four group") {
    groupoid_ptr bz2 = zoo::bz2();
    strict_fiber_product_bundle sfp =
        strict_fiber_product(to_trivial(bz2), to_trivial(bz2));
    CHECK(sfp.total->object_count() == 1);
    CHECK(sfp.total->arrow_count() == 4);
    CHECK(groups_isomorphic(
        isotropy_group_at(*sfp.total, 0).table,
        group_table::direct_product(group_table::cyclic(2),
                                    group_table::cyclic(2))));
  }
  SUBCASE("BS3 x~_{id,id} BS3 is the diagonal") {
    strict_morphism id = strict_morphism::identity(zoo::bs3());
    strict_fiber_product_bundle sfp = strict_fiber_product(id, id);
    CHECK(sfp.total->object_count() == 1);
    CHECK(sfp.total->arrow_count() == 6);
    for (arrow_id x = 0; x < 6; ++x)
      CHECK(sfp.arrow_decode(x).left == sfp.arrow_decode(x).right);
  }
  SUBCASE("disjoint images give the empty groupoid") {
    groupoid_ptr d2 = zoo::d2();
    restriction r0 = restrict_objects(d2, {0});
    restriction r1 = restrict_objects(d2, {1});
    strict_fiber_product_bundle sfp =
        strict_fiber_product(restriction_inclusion(r0, d2),
                             restriction_inclusion(r1, d2));
    CHECK(sfp.total->object_count() == 0);
    CHECK(sfp.total->arrow_count() == 0);
  }
}

TEST_CASE("decode and encode are mutually inverse") {
  groupoid_ptr p2 = zoo::p2();
  fiber_product_bundle fp = fiber_product(to_trivial(p2), to_trivial(p2));
  for (object_id o = 0; o < fp.total->object_count(); ++o) {
    fp_object d = fp.object_decode(o);
    CHECK(fp.find_object(d.left, d.mid, d.right) == o);
  }
  for (arrow_id x = 0; x < fp.total->arrow_count(); ++x) {
    fp_arrow d = fp.arrow_decode(x);
    CHECK(fp.find_arrow(d.left, d.at, d.right) == x);
  }
  strict_morphism id = strict_morphism::identity(zoo::bz2());
  strict_fiber_product_bundle sfp = strict_fiber_product(id, id);
  for (object_id o = 0; o < sfp.total->object_count(); ++o) {
    sfp_object d = sfp.object_decode(o);
    CHECK(sfp.find_object(d.left, d.right) == o);
  }
  for (arrow_id x = 0; x < sfp.total->arrow_count(); ++x) {
    sfp_arrow d = sfp.arrow_decode(x);
    CHECK(sfp.find_arrow(d.left, d.right) == x);
  }
}

TEST_CASE("projections inherit equivalence from the opposite leg") {
  groupoid_ptr p2 = zoo::p2();
  groupoid_ptr bz2 = zoo::bz2();
  // g equivalence forces pi1 equivalence, and symmetrically.
  fiber_product_bundle fp = fiber_product(to_trivial(bz2), to_trivial(p2));
  CHECK(is_equivalence(fp.pi1).ok());  // P2 -> T is an equivalence
  CHECK_FALSE(is_equivalence(fp.pi2).ok());
  fiber_product_bundle fp2 = fiber_product(to_trivial(p2), to_trivial(bz2));
  CHECK(is_equivalence(fp2.pi2).ok());

  // Full-equivalence forces full-equivalence of the strict projections.
  strict_fiber_product_bundle sfp =
      strict_fiber_product(to_trivial(bz2), to_trivial(p2));
  CHECK(is_full_equivalence(sfp.pi1).ok());
  strict_fiber_product_bundle sfp2 =
      strict_fiber_product(to_trivial(p2), to_trivial(bz2));
  CHECK(is_full_equivalence(sfp2.pi2).ok());
}

TEST_CASE("the canonical transformation between the two legs") {
  groupoid_ptr p2 = zoo::p2();
  fiber_product_bundle fp = fiber_product(to_trivial(p2), to_trivial(p2));
  CHECK_NOTHROW(fp.canonical_transformation().verify());
  strict_morphism id = strict_morphism::identity(zoo::bs3());
  CHECK_NOTHROW(fiber_product(id, id).canonical_transformation().verify());
}

TEST_CASE("embedding of the strict product into the product") {
  SUBCASE("over T both products coincide and q is an isomorphism") {
    strict_morphism id = strict_morphism::identity(zoo::t());
    fiber_product_bundle fp = fiber_product(id, id);
    strict_fiber_product_bundle sfp = strict_fiber_product(id, id);
    strict_morphism q = embed_q(sfp, fp);
    CHECK_NOTHROW(q.verify());
    CHECK(is_isomorphism(q));
  }
  SUBCASE("BZ2 along identities: 1 -> 2 objects, 2 -> 8 arrows") {
    strict_morphism id = strict_morphism::identity(zoo::bz2());
    fiber_product_bundle fp = fiber_product(id, id);
    strict_fiber_product_bundle sfp = strict_fiber_product(id, id);
    CHECK(sfp.total->object_count() == 1);
    CHECK(sfp.total->arrow_count() == 2);
    strict_morphism q = embed_q(sfp, fp);
    CHECK_NOTHROW(q.verify());
    // Injectivity on objects and arrows.
    CHECK(q.f0[0] == fp.find_object(0, zoo::bz2()->unit(0), 0));
    CHECK(q.f1[0] != q.f1[1]);
    // The image restriction is an isomorphism.
    restriction r = restrict_objects(fp.total, q.f0);
    CHECK(r.sub->object_count() == 1);
    CHECK(r.sub->arrow_count() == 2);
    CHECK(r.sub->structurally_equal(*sfp.total));
    // Identities are full-equivalences, so q is an equivalence.
    CHECK(is_equivalence(q).ok());
  }
  SUBCASE("P2 -> T on both sides: q is an equivalence") {
    groupoid_ptr p2 = zoo::p2();
    strict_morphism down = to_trivial(p2);
    fiber_product_bundle fp = fiber_product(down, down);
    strict_fiber_product_bundle sfp = strict_fiber_product(down, down);
    strict_morphism q = embed_q(sfp, fp);
    CHECK_NOTHROW(q.verify());
    CHECK(is_equivalence(q).ok());
    // The restriction to the image is equivalent to the whole product.
    restriction r = restrict_objects(fp.total, q.f0);
    CHECK(is_equivalence(restriction_inclusion(r, fp.total)).ok());
  }
  SUBCASE("mismatched inputs are rejected") {
    strict_morphism id_t = strict_morphism::identity(zoo::t());
    strict_morphism id_b = strict_morphism::identity(zoo::bz2());
    fiber_product_bundle fp = fiber_product(id_t, id_t);
    strict_fiber_product_bundle sfp = strict_fiber_product(id_b, id_b);
    CHECK_THROWS_WITH_AS(embed_q(sfp, fp),
                         doctest::Contains("MismatchedInputs"),
                         groupoid_error);
  }
}

TEST_CASE("re-association of iterated products") {
  SUBCASE("all factors trivial") {
    strict_morphism id = strict_morphism::identity(zoo::t());
    assoc_iso_result res = assoc_iso(id, id, id, id);
    CHECK(res.isomorphisms_verified);
    CHECK(res.square_commutes);
    CHECK(res.strict_forward.equal(
        strict_morphism::identity(res.strict_outer_left.total)));
  }
  SUBCASE("H = K = M = P2 over G = L = T") {
    groupoid_ptr p2 = zoo::p2();
    strict_morphism down = to_trivial(p2);
    assoc_iso_result res = assoc_iso(down, down, down, down);
    CHECK(res.isomorphisms_verified);
    CHECK(res.square_commutes);
    CHECK_NOTHROW(res.strict_forward.verify());
    CHECK_NOTHROW(res.weak_forward.verify());
    CHECK_NOTHROW(res.q_left.verify());
    CHECK_NOTHROW(res.q_right.verify());
    // Round trip through the decode maps.
    for (object_id o = 0; o < res.weak_outer_left.total->object_count(); ++o)
      CHECK(res.weak_backward.f0[res.weak_forward.f0[o]] == o);
  }
  SUBCASE("mixed classifying factors") {
    groupoid_ptr bz2 = zoo::bz2();
    strict_morphism id = strict_morphism::identity(bz2);
    assoc_iso_result res = assoc_iso(id, id, id, id);
    CHECK(res.isomorphisms_verified);
    CHECK(res.square_commutes);
  }
  SUBCASE("wiring mismatch is rejected") {
    strict_morphism id_t = strict_morphism::identity(zoo::t());
    strict_morphism id_b = strict_morphism::identity(zoo::bz2());
    CHECK_THROWS_WITH_AS(assoc_iso(id_t, id_t, id_b, id_b),
                         doctest::Contains("WiringMismatch"), groupoid_error);
  }
}

TEST_CASE("unit isomorphisms via projections") {
  SUBCASE("identity of T") {
    unit_iso_result res = unit_iso(strict_morphism::identity(zoo::t()));
    CHECK(res.verified);
  }
  SUBCASE("P2 -> T: both projections bijective on 2 objects, 4 arrows") {
    groupoid_ptr p2 = zoo::p2();
    unit_iso_result res = unit_iso(to_trivial(p2));
    CHECK(res.verified);
    CHECK(res.left.total->object_count() == 2);
    CHECK(res.left.total->arrow_count() == 4);
    CHECK(res.right.total->object_count() == 2);
    CHECK(res.right.total->arrow_count() == 4);
    CHECK_NOTHROW(res.left_iso.verify());
    CHECK_NOTHROW(res.right_iso.verify());
  }
  SUBCASE("unit inclusion T -> BZ2") {
    groupoid_ptr bz2 = zoo::bz2();
    groupoid_ptr tt = zoo::t();
    strict_morphism incl;
    incl.dom = tt;
    incl.cod = bz2;
    incl.f0 = {0};
    incl.f1 = {bz2->unit(0)};
    incl.verify();
    unit_iso_result res = unit_iso(incl);
    CHECK(res.verified);
    CHECK(res.left.total->structurally_equal(*tt));
  }
}
