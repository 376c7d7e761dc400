#ifndef GPD_FUNCTORS_HPP
#define GPD_FUNCTORS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// A functor between finite groupoids: object map f0, arrow map f1.
struct strict_morphism {
  groupoid_ptr dom, cod;
  std::vector<object_id> f0;
  std::vector<arrow_id> f1;

  object_id map_object(object_id a) const { return f0[a]; }
  arrow_id map_arrow(arrow_id x) const { return f1[x]; }

  static strict_morphism identity(const groupoid_ptr& g);

  // Functoriality: endpoint compatibility, units, multiplicativity.
  void verify() const;

  bool equal(const strict_morphism& other) const;
};

// f then g (diagrammatic order); requires cod(f) = dom(g).
strict_morphism compose_strict(const strict_morphism& f,
                               const strict_morphism& g);

strict_morphism restriction_inclusion(const restriction& r,
                                      const groupoid_ptr& parent);

bool is_isomorphism(const strict_morphism& f);

// ---- equivalences -----------------------------------------------------------

struct equivalence_report {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  // Witnesses on failure.
  std::optional<object_id> missed_object;
  std::optional<std::pair<object_id, object_id>> bad_hom;
  std::string detail;

  bool ok() const { return essentially_surjective && fully_faithful; }
  explicit operator bool() const { return ok(); }
};

equivalence_report is_equivalence(const strict_morphism& f);

struct full_equivalence_report {
  equivalence_report equivalence;
  bool objects_surjective = false;
  std::optional<object_id> missed_object;

  bool ok() const { return equivalence.ok() && objects_surjective; }
  explicit operator bool() const { return ok(); }
};

full_equivalence_report is_full_equivalence(const strict_morphism& f);

// Unique x in hom(a, b) with f1(x) = y, for fully faithful f; no_arrow when
// the hom set has no such preimage.
arrow_id preimage_arrow(const strict_morphism& f, object_id a, object_id b,
                        arrow_id y);

// ---- natural transformations ------------------------------------------------

struct natural_transformation {
  strict_morphism src, tgt;
  std::vector<arrow_id> comp;  // object of dom -> arrow of cod

  void verify() const;
};

// Complete, duplicate-free, sorted lexicographically by component vector.
std::vector<natural_transformation> enumerate_nat_trans(
    const strict_morphism& f, const strict_morphism& g);

// ---- quasi-inverse ----------------------------------------------------------

struct quasi_inverse_data {
  strict_morphism inverse;             // g : cod -> dom
  natural_transformation to_dom_unit;  // (f then g) => id_dom
  natural_transformation to_cod_unit;  // (g then f) => id_cod
};

// Least-index quasi-inverse of an equivalence; throws not_an_equivalence.
quasi_inverse_data quasi_inverse(const strict_morphism& f);

// ---- enumeration ------------------------------------------------------------

// All functors g -> h by exhaustive backtracking; desk scale only.
std::vector<strict_morphism> enumerate_functors(const groupoid_ptr& g,
                                                const groupoid_ptr& h);

std::vector<strict_morphism> enumerate_self_equivalences(const groupoid_ptr& g);

}  // namespace gpd

#endif
