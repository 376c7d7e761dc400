#ifndef GPD_COMPOSITION_HPP
#define GPD_COMPOSITION_HPP

#include <memory>

#include "gpd/morphism_cat.hpp"

namespace gpd {

// Result of composing two spans; the middle product is kept so callers can
// decode carrier objects of the composite.
struct h_composite {
  gen_morphism morphism;
  std::shared_ptr<const fiber_product_bundle> middle_fp;          // general
  std::shared_ptr<const strict_fiber_product_bundle> middle_sfp;  // full
};

// m: G => H, then n: H => N, giving G => N.  The composite is validated
// (psi of the result must be an equivalence, full in full mode).
h_composite h_compose(const gen_morphism& m, const gen_morphism& n);

// Horizontal composition of arrows: a over spans G => H, b over spans
// H => N; the result connects the two composites.
mor_arrow h_compose_arrows(const mor_arrow& a, const mor_arrow& b);

// Full mode chooses lift objects; recompute under every admissible choice
// on both routes and compare.
bool h_compose_choice_independent(const mor_arrow& a, const mor_arrow& b);

// (b1∘a1)•(b2∘a2) == (b1•b2)∘(a1•a2), pointwise on the common carrier.
bool interchange_check(const mor_arrow& a1, const mor_arrow& a2,
                       const mor_arrow& b1, const mor_arrow& b2);

// The canonical arrow (m3∘m2)∘m1 -> m3∘(m2∘m1) induced by re-association
// of the iterated middle products.
struct associator_data {
  gen_morphism nested_right;  // (m3∘m2)∘m1, carrier K1 x (K2 x K3)
  gen_morphism nested_left;   // m3∘(m2∘m1), carrier (K1 x K2) x K3
  strict_morphism reassoc;    // apex(nested_right) -> apex(nested_left)
  mor_arrow arrow;            // nested_right -> nested_left
};

associator_data associator_arrow(const gen_morphism& m1,
                                 const gen_morphism& m2,
                                 const gen_morphism& m3);

// Transport of triple composites across the associators: the naturality
// square closes and values agree pointwise under re-association.
bool associator_transport_check(const mor_arrow& a1, const mor_arrow& a2,
                                const mor_arrow& a3);

// The weak-unit arrows: the identity span is not a strict unit for ∘, but
// absorbs against any span through these canonical arrows.
mor_arrow unit_right_absorber(const gen_morphism& m);  // m∘1_G -> m
mor_arrow unit_left_absorber(const gen_morphism& m);   // 1_H∘m -> m

}  // namespace gpd

#endif
