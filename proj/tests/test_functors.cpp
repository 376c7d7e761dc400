#include <algorithm>

#include "doctest.h"
#include "gpd/functors.hpp"
#include "zoo.hpp"

using namespace gpd;

namespace {

// The unique functor collapsing everything onto the trivial groupoid.
strict_morphism to_trivial(const groupoid_ptr& g) {
  strict_morphism f;
  f.dom = g;
  f.cod = zoo::t();
  f.f0.assign(g->object_count(), 0);
  f.f1.assign(g->arrow_count(), 0);
  return f;
}

// Test-side oracle: natural transformations by raw product enumeration over
// all component choices, independent of the propagation search in the
// library.
std::size_t count_nat_trans_brute(const strict_morphism& f,
                                  const strict_morphism& g) {
  const finite_groupoid& dom = *f.dom;
  const finite_groupoid& cod = *f.cod;
  std::vector<std::vector<arrow_id>> candidates(dom.object_count());
  for (object_id a = 0; a < dom.object_count(); ++a)
    candidates[a] = cod.hom(f.f0[a], g.f0[a]);
  std::size_t count = 0;
  std::vector<std::size_t> pick(dom.object_count(), 0);
  if (dom.object_count() == 0) return 1;
  for (const auto& c : candidates)
    if (c.empty()) return 0;
  while (true) {
    bool natural = true;
    for (arrow_id x = 0; x < dom.arrow_count() && natural; ++x) {
      arrow_id ca = candidates[dom.source(x)][pick[dom.source(x)]];
      arrow_id cb = candidates[dom.target(x)][pick[dom.target(x)]];
      natural = cod.compose(f.f1[x], cb) == cod.compose(ca, g.f1[x]);
    }
    if (natural) ++count;
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("strict morphism composition") {
  groupoid_ptr p2 = zoo::p2();
  strict_morphism collapse = to_trivial(p2);
  collapse.verify();
  restriction r = restrict_objects(p2, {0});
  strict_morphism incl = restriction_inclusion(r, p2);
  incl.verify();

  strict_morphism id_p2 = strict_morphism::identity(p2);
  CHECK(compose_strict(id_p2, collapse).equal(collapse));
  CHECK(compose_strict(incl, id_p2).equal(incl));

  // (T -> P2 inclusion) then (P2 -> T) is the identity on T's carrier.
  strict_morphism round = compose_strict(incl, collapse);
  CHECK(round.equal(strict_morphism::identity(r.sub)));

  CHECK_THROWS_WITH_AS(compose_strict(collapse, collapse),
                       doctest::Contains("DomainMismatch"), groupoid_error);
}

TEST_CASE("equivalence detection with witnesses") {
  groupoid_ptr p2 = zoo::p2();
  SUBCASE("P2 -> T is an equivalence") {
    equivalence_report rep = is_equivalence(to_trivial(p2));
    CHECK(rep.ok());
  }
  SUBCASE("inclusion T -> P2 is an equivalence") {
    restriction r = restrict_objects(p2, {0});
    CHECK(is_equivalence(restriction_inclusion(r, p2)).ok());
  }
  SUBCASE("inclusion T -> D2 misses an object") {
    groupoid_ptr d2 = zoo::d2();
    restriction r = restrict_objects(d2, {0});
    equivalence_report rep = is_equivalence(restriction_inclusion(r, d2));
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.essentially_surjective);
    REQUIRE(rep.missed_object.has_value());
    CHECK(*rep.missed_object == 1);
  }
  SUBCASE("collapse BZ2 -> T is not faithful") {
    equivalence_report rep = is_equivalence(to_trivial(zoo::bz2()));
    CHECK_FALSE(rep.ok());
    CHECK(rep.essentially_surjective);
    CHECK_FALSE(rep.fully_faithful);
    CHECK(rep.bad_hom.has_value());
  }
}

TEST_CASE("full-equivalence needs a surjective object map") {
  groupoid_ptr p2 = zoo::p2();
  CHECK(is_full_equivalence(to_trivial(p2)).ok());
  restriction r = restrict_objects(p2, {0});
  full_equivalence_report rep =
      is_full_equivalence(restriction_inclusion(r, p2));
  CHECK(rep.equivalence.ok());
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.missed_object.has_value());
  CHECK(*rep.missed_object == 1);
  CHECK(is_full_equivalence(strict_morphism::identity(p2)).ok());
}

TEST_CASE("natural transformation enumeration matches brute force") {
  auto check_count = [](const strict_morphism& f, const strict_morphism& g,
                        std::size_t expected) {
    auto found = enumerate_nat_trans(f, g);
    CHECK(found.size() == expected);
    CHECK(count_nat_trans_brute(f, g) == expected);
    for (const natural_transformation& nt : found) CHECK_NOTHROW(nt.verify());
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [](const natural_transformation& a,
                            const natural_transformation& b) {
                           return a.comp < b.comp;
                         }));
  };
  check_count(strict_morphism::identity(zoo::bz2()),
              strict_morphism::identity(zoo::bz2()), 2);
  check_count(strict_morphism::identity(zoo::bs3()),
              strict_morphism::identity(zoo::bs3()), 1);
  check_count(strict_morphism::identity(zoo::d2()),
              strict_morphism::identity(zoo::d2()), 1);
  check_count(strict_morphism::identity(zoo::bv4()),
              strict_morphism::identity(zoo::bv4()), 4);
}

TEST_CASE("a natural transformation transfers the equivalence property") {
  // Whenever f => g, either both or neither are equivalences.
  for (const groupoid_ptr& g : {zoo::bz2(), zoo::bs3(), zoo::p2(), zoo::d2()})
    for (const strict_morphism& f : enumerate_functors(g, g))
      for (const strict_morphism& h : enumerate_functors(g, g))
        if (!enumerate_nat_trans(f, h).empty())
          CHECK(is_equivalence(f).ok() == is_equivalence(h).ok());
}

TEST_CASE("composition preserves equivalences") {
  groupoid_ptr p2 = zoo::p2();
  restriction r = restrict_objects(p2, {0});
  strict_morphism incl = restriction_inclusion(r, p2);   // T -> P2
  strict_morphism down = to_trivial(p2);                 // P2 -> T
  CHECK(is_equivalence(compose_strict(incl, down)).ok());
  CHECK(is_equivalence(compose_strict(down, incl)).ok());
  // Full-equivalences compose to full-equivalences.
  strict_morphism down2 = to_trivial(r.sub);
  CHECK(is_full_equivalence(down).ok());
  CHECK(is_full_equivalence(compose_strict(down, down2)).ok());
}

TEST_CASE("preimages of commuting triangles commute") {
  // Transport of a composite along the hom-set bijections of an equivalence.
  groupoid_ptr p2 = zoo::p2();
  strict_morphism down = to_trivial(p2);
  groupoid_ptr tt = zoo::t();
  const finite_groupoid& h = *tt;
  for (object_id a = 0; a < 2; ++a)
    for (object_id b = 0; b < 2; ++b)
      for (object_id c = 0; c < 2; ++c)
        for (arrow_id x : h.hom(0, 0))
          for (arrow_id y : h.hom(0, 0)) {
            arrow_id xa = preimage_arrow(down, a, b, x);
            arrow_id yb = preimage_arrow(down, b, c, y);
            arrow_id za = preimage_arrow(down, a, c, h.compose(x, y));
            CHECK(p2->compose(xa, yb) == za);
          }
}

TEST_CASE("quasi-inverse uses least indices and produces valid witnesses") {
  groupoid_ptr p2 = zoo::p2();
  SUBCASE("identity on groupoids whose objects are least in their class") {
    for (const groupoid_ptr& g : {zoo::t(), zoo::bz2(), zoo::d2()}) {
      quasi_inverse_data qi = quasi_inverse(strict_morphism::identity(g));
      CHECK(qi.inverse.equal(strict_morphism::identity(g)));
      CHECK_NOTHROW(qi.to_dom_unit.verify());
      CHECK_NOTHROW(qi.to_cod_unit.verify());
    }
    // On P2 the least-index rule sends both objects to object 0.
    quasi_inverse_data qi = quasi_inverse(strict_morphism::identity(p2));
    CHECK(qi.inverse.f0 == std::vector<object_id>{0, 0});
    CHECK(is_equivalence(qi.inverse).ok());
    CHECK_NOTHROW(qi.to_dom_unit.verify());
    CHECK_NOTHROW(qi.to_cod_unit.verify());
  }
  SUBCASE("P2 -> T picks the least preimage object") {
    quasi_inverse_data qi = quasi_inverse(to_trivial(p2));
    CHECK(qi.inverse.f0 == std::vector<object_id>{0});
    CHECK(is_equivalence(qi.inverse).ok());
    CHECK_NOTHROW(qi.to_dom_unit.verify());
    CHECK_NOTHROW(qi.to_cod_unit.verify());
  }
  SUBCASE("non-equivalence input is rejected") {
    CHECK_THROWS_WITH_AS(quasi_inverse(to_trivial(zoo::bz2())),
                         doctest::Contains("NotAnEquivalence"),
                         groupoid_error);
  }
}

TEST_CASE("functor enumeration") {
  // Functor counts on classifying groupoids equal endomorphism counts of the
  // groups: Z2 has 2 endomorphisms, 1 automorphism.
  auto endos_bz2 = enumerate_functors(zoo::bz2(), zoo::bz2());
  CHECK(endos_bz2.size() == 2);
  CHECK(enumerate_self_equivalences(zoo::bz2()).size() == 1);
  // Aut(S3) has order 6; S3 additionally has the trivial map and 3+1
  // homomorphisms... count endomorphisms by direct brute force instead.
  CHECK(enumerate_self_equivalences(zoo::bs3()).size() == 6);
  CHECK(enumerate_self_equivalences(zoo::bz4()).size() == 2);
  CHECK(enumerate_self_equivalences(zoo::bv4()).size() == 6);
  CHECK(enumerate_self_equivalences(zoo::d3()).size() == 6);
}

TEST_CASE("self natural transformations of an equivalence form a group") {
  for (const groupoid_ptr& g : {zoo::bz2(), zoo::bv4(), zoo::p2()}) {
    strict_morphism id = strict_morphism::identity(g);
    auto nts = enumerate_nat_trans(id, id);
    // Closure, unit, inverse under vertical composition of components.
    auto locate = [&](const std::vector<arrow_id>& comp) {
      for (std::size_t i = 0; i < nts.size(); ++i)
        if (nts[i].comp == comp) return i;
      return nts.size();
    };
    std::vector<arrow_id> unit_comp;
    for (object_id a = 0; a < g->object_count(); ++a)
      unit_comp.push_back(g->unit(a));
    CHECK(locate(unit_comp) < nts.size());
    for (const auto& s : nts) {
      std::vector<arrow_id> inv_comp;
      for (object_id a = 0; a < g->object_count(); ++a)
        inv_comp.push_back(g->inverse(s.comp[a]));
      CHECK(locate(inv_comp) < nts.size());
      for (const auto& t : nts) {
        std::vector<arrow_id> prod;
        for (object_id a = 0; a < g->object_count(); ++a)
          prod.push_back(g->compose(s.comp[a], t.comp[a]));
        CHECK(locate(prod) < nts.size());
      }
    }
  }
}
