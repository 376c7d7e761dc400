#ifndef GPD_FIBER_PRODUCT_HPP
#define GPD_FIBER_PRODUCT_HPP

#include <compare>
#include <memory>
#include <vector>

#include "gpd/functors.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

// Hard cap on materialized product size; nested products past this are not
// desk scale and constructions refuse them instead of thrashing.
inline constexpr std::size_t product_arrow_cap = 5'000'000;

// Object (a, x, b): a in the left factor, b in the right factor, x an arrow
// of the base from the image of a to the image of b.
struct fp_object {
  object_id left;
  arrow_id mid;
  object_id right;
  auto operator<=>(const fp_object&) const = default;
};

// Arrow (y, o, z): y over the left factor, z over the right, based at the
// source object o; the square condition pins the target.
struct fp_arrow {
  arrow_id left;
  object_id at;
  arrow_id right;
  auto operator<=>(const fp_arrow&) const = default;
};

struct fiber_product_bundle {
  groupoid_ptr total;
  strict_morphism pi1, pi2;
  strict_morphism input_f, input_g;
  std::shared_ptr<const std::vector<fp_object>> objects;
  std::shared_ptr<const std::vector<fp_arrow>> arrows;

  fp_object object_decode(object_id o) const { return (*objects)[o]; }
  fp_arrow arrow_decode(arrow_id x) const { return (*arrows)[x]; }
  object_id find_object(object_id a, arrow_id x, object_id b) const;
  arrow_id find_arrow(arrow_id y, object_id at, arrow_id z) const;

  // f∘π1 ⇒ g∘π2, with component x at the object (a, x, b).
  natural_transformation canonical_transformation() const;
};

fiber_product_bundle fiber_product(const strict_morphism& f,
                                   const strict_morphism& g);

struct sfp_object {
  object_id left, right;
  auto operator<=>(const sfp_object&) const = default;
};

struct sfp_arrow {
  arrow_id left, right;
  auto operator<=>(const sfp_arrow&) const = default;
};

struct strict_fiber_product_bundle {
  groupoid_ptr total;
  strict_morphism pi1, pi2;
  strict_morphism input_f, input_g;
  std::shared_ptr<const std::vector<sfp_object>> objects;
  std::shared_ptr<const std::vector<sfp_arrow>> arrows;

  sfp_object object_decode(object_id o) const { return (*objects)[o]; }
  sfp_arrow arrow_decode(arrow_id x) const { return (*arrows)[x]; }
  object_id find_object(object_id a, object_id b) const;
  arrow_id find_arrow(arrow_id x, arrow_id y) const;
};

strict_fiber_product_bundle strict_fiber_product(const strict_morphism& f1,
                                                 const strict_morphism& f2);

// The injective comparison morphism q: both bundles must be built from the
// same pair of input morphisms.
strict_morphism embed_q(const strict_fiber_product_bundle& sfp,
                        const fiber_product_bundle& fp);

// Re-association of iterated products for the wiring f: H->G, g: K->G,
// u: K->L, v: M->L, in both flavors, with the connecting square report.
struct assoc_iso_result {
  // strict side: (H x~ K) x~ M  and  H x~ (K x~ M)
  strict_fiber_product_bundle strict_inner_left, strict_outer_left;
  strict_fiber_product_bundle strict_inner_right, strict_outer_right;
  strict_morphism strict_forward, strict_backward;
  // weak side
  fiber_product_bundle weak_inner_left, weak_outer_left;
  fiber_product_bundle weak_inner_right, weak_outer_right;
  strict_morphism weak_forward, weak_backward;
  // verticals of the square (strict outer -> weak outer)
  strict_morphism q_left, q_right;
  bool isomorphisms_verified = false;
  bool square_commutes = false;
};

assoc_iso_result assoc_iso(const strict_morphism& f, const strict_morphism& g,
                           const strict_morphism& u, const strict_morphism& v);

// H x~_{id,H,f} G ~= G ~= G x~_{f,H,id} H, realized by the projections.
struct unit_iso_result {
  strict_fiber_product_bundle left, right;
  strict_morphism left_iso;   // H x~ G -> G, the second projection
  strict_morphism right_iso;  // G x~ H -> G, the first projection
  bool verified = false;
};

unit_iso_result unit_iso(const strict_morphism& f);

}  // namespace gpd

#endif
