#ifndef GPD_MORPHISM_CAT_HPP
#define GPD_MORPHISM_CAT_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gpd/fiber_product.hpp"
#include "gpd/functors.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

enum class mor_mode { general, full };

// A span G <-psi- K -u-> H with psi an equivalence (a full-equivalence in
// full mode).
class gen_morphism {
 public:
  gen_morphism() = default;
  gen_morphism(strict_morphism psi, strict_morphism u, mor_mode mode,
               bool check = true);

  const strict_morphism& psi() const { return psi_; }
  const strict_morphism& u() const { return u_; }
  mor_mode mode() const { return mode_; }
  const groupoid_ptr& base_dom() const { return psi_.cod; }  // G
  const groupoid_ptr& apex() const { return psi_.dom; }      // K
  const groupoid_ptr& base_cod() const { return u_.cod; }    // H

  static gen_morphism identity(const groupoid_ptr& g);  // (id, G, id), full

  gen_morphism with_mode(mor_mode m) const;

  bool equal(const gen_morphism& other) const;

 private:
  strict_morphism psi_, u_;
  mor_mode mode_ = mor_mode::general;
};

// Carrier of arrows between two spans: the (strict) fiber product of the two
// psi legs over the common base.
struct carrier_obj {
  object_id k1;
  arrow_id mid;  // no_arrow in full mode
  object_id k2;
};

class mor_carrier {
 public:
  mor_mode mode = mor_mode::general;
  std::optional<fiber_product_bundle> fp;
  std::optional<strict_fiber_product_bundle> sfp;

  const groupoid_ptr& total() const {
    return mode == mor_mode::general ? fp->total : sfp->total;
  }
  std::size_t object_count() const { return total()->object_count(); }
  carrier_obj object(object_id o) const;
  object_id find(object_id k1, arrow_id mid, object_id k2) const;
  const strict_morphism& pi1() const {
    return mode == mor_mode::general ? fp->pi1 : sfp->pi1;
  }
  const strict_morphism& pi2() const {
    return mode == mor_mode::general ? fp->pi2 : sfp->pi2;
  }
};

std::shared_ptr<const mor_carrier> make_carrier(const gen_morphism& m1,
                                                const gen_morphism& m2);

// An arrow between two spans: a natural transformation u1∘π1 ⇒ u2∘π2 over
// the carrier, stored as its component family.
class mor_arrow {
 public:
  mor_arrow() = default;
  mor_arrow(gen_morphism src, gen_morphism tgt,
            std::shared_ptr<const mor_carrier> carrier,
            std::vector<arrow_id> alpha, bool check = true);

  const gen_morphism& src() const { return src_; }
  const gen_morphism& tgt() const { return tgt_; }
  mor_mode mode() const { return src_.mode(); }
  const mor_carrier& carrier() const { return *carrier_; }
  const std::shared_ptr<const mor_carrier>& carrier_ptr() const {
    return carrier_;
  }
  arrow_id value(object_id carrier_object) const {
    return alpha_[carrier_object];
  }
  const std::vector<arrow_id>& alpha() const { return alpha_; }

  natural_transformation as_nat_trans() const;
  void verify() const;
  bool equal(const mor_arrow& other) const;

 private:
  gen_morphism src_, tgt_;
  std::shared_ptr<const mor_carrier> carrier_;
  std::vector<arrow_id> alpha_;
};

// Complete duplicate-free list, ordered lexicographically by components.
std::vector<mor_arrow> enumerate_arrows(const gen_morphism& m1,
                                        const gen_morphism& m2);

mor_arrow unit_arrow(const gen_morphism& m);
mor_arrow invert_arrow(const mor_arrow& a);
mor_arrow vertical_compose(const mor_arrow& a1, const mor_arrow& a2);

// Recomputes the composite under every admissible splitting witness and
// reports whether all agree with the least-index choice.
bool vertical_choice_independent(const mor_arrow& a1, const mor_arrow& a2);

// Canonical arrow m1 -> m2 induced by a strict morphism h: apex(m1) ->
// apex(m2) commuting with both legs on the nose.
mor_arrow induced_arrow(const gen_morphism& m1, const gen_morphism& m2,
                        const strict_morphism& h);

struct mor_roster {
  groupoid_ptr base_dom, base_cod;
  mor_mode mode = mor_mode::general;
  std::vector<gen_morphism> entries;
};

// Standard roster generator (a): all strict morphisms packaged as (id, G, u).
mor_roster strict_morphism_roster(const groupoid_ptr& g,
                                  const groupoid_ptr& h);

// Refinement psi: the fold of a multiselection of objects (each object taken
// with multiplicity >= 1), a full-equivalence onto g.
struct refinement {
  groupoid_ptr apex;
  strict_morphism fold;                // apex -> g
  std::vector<object_id> object_of;    // apex object -> g object
};
refinement refinement_of(const groupoid_ptr& g,
                         const std::vector<std::uint32_t>& multiplicity);

struct morphism_groupoid_result {
  groupoid_ptr gpd;
  std::vector<mor_arrow> arrow_decode;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arrow_endpoints;
};

// Objects: roster entries; arrows: all enumerated arrows; composition:
// vertical composition.  The output passes the full groupoid validator.
morphism_groupoid_result build_morphism_groupoid(const mor_roster& roster);

// Comparison functor i: full-mode arrows extend to general-mode arrows along
// the embedding q of carriers.
mor_arrow embed_i(const mor_arrow& full_arrow);            // i1
mor_arrow restrict_i(const mor_arrow& general_arrow);      // (i1)^-1 = - ∘ q0
bool i1_witness_independent(const mor_arrow& full_arrow);
bool i1_preserves_composition_check(const mor_arrow& a, const mor_arrow& b);

// The full-mode replacement representative (id∘π1, G×_G K, u∘π2) of a span,
// with the explicit connecting arrow in general mode.
struct replacement_data {
  gen_morphism representative;  // full mode
  mor_arrow connecting;         // m -> representative (general mode)
};
replacement_data replacement_representative(const gen_morphism& m);

}  // namespace gpd

#endif
