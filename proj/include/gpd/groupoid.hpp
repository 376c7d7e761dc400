#ifndef GPD_GROUPOID_HPP
#define GPD_GROUPOID_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpd/errors.hpp"

namespace gpd {

using object_id = std::uint32_t;
using arrow_id = std::uint32_t;

inline constexpr object_id no_object = UINT32_MAX;
inline constexpr arrow_id no_arrow = UINT32_MAX;

class finite_groupoid;
using groupoid_ptr = std::shared_ptr<const finite_groupoid>;

// Unvalidated input as it appears in groupoid files: units and inverses are
// never supplied, they are inferred during validation.
struct raw_groupoid {
  std::string name;
  std::uint32_t objects = 0;
  std::vector<std::pair<object_id, object_id>> arrows;  // (src, tgt)
  std::vector<std::array<arrow_id, 3>> compose;         // x . y = z
};

// Immutable finite groupoid over dense integer ids.  Composition reads
// left-to-right: compose(x, y) is "x then y" and is defined exactly when
// target(x) == source(y).
class finite_groupoid {
 public:
  std::size_t object_count() const { return n_objects_; }
  std::size_t arrow_count() const { return src_.size(); }

  object_id source(arrow_id x) const { return src_[x]; }
  object_id target(arrow_id x) const { return tgt_[x]; }
  arrow_id unit(object_id a) const { return unit_[a]; }
  arrow_id inverse(arrow_id x) const { return inv_[x]; }

  bool composable(arrow_id x, arrow_id y) const { return tgt_[x] == src_[y]; }
  arrow_id compose(arrow_id x, arrow_id y) const {
    if (!dense_.empty()) return dense_[x * arrow_count() + y];
    return compose_fn_(x, y);
  }

  std::span<const arrow_id> arrows_from(object_id a) const { return out_[a]; }
  std::span<const arrow_id> arrows_into(object_id a) const { return in_[a]; }
  std::vector<arrow_id> hom(object_id a, object_id b) const;
  bool is_loop(arrow_id x) const { return src_[x] == tgt_[x]; }

  const std::string& name() const { return name_; }

  // Structural equality on normalized data; names are metadata and ignored.
  bool structurally_equal(const finite_groupoid& other) const;

  std::size_t composable_pair_count() const;

  // Full validation of raw data: totality, typing, associativity; units and
  // inverses are searched for.  Throws groupoid_error on any violation.
  static groupoid_ptr validate(const raw_groupoid& raw);

  raw_groupoid to_raw() const;

  // Internal builder for constructions that are correct by shape.  Runs O(A)
  // sanity checks (bounds, unit and inverse laws) but not associativity.
  struct parts {
    std::string name;
    std::uint32_t n_objects = 0;
    std::vector<object_id> src, tgt;
    std::vector<arrow_id> unit, inverse;
    // Total on composable pairs; may capture shared decode state.
    std::function<arrow_id(arrow_id, arrow_id)> compose;
  };
  static groupoid_ptr from_parts(parts p);

 private:
  finite_groupoid() = default;
  void finish_indices();
  void spot_check() const;

  std::string name_;
  std::uint32_t n_objects_ = 0;
  std::vector<object_id> src_, tgt_;
  std::vector<arrow_id> unit_, inv_;
  std::vector<std::vector<arrow_id>> out_, in_;
  // Either a dense arrow x arrow table (small groupoids; no_arrow marks
  // non-composable) or a computed composition.
  std::vector<arrow_id> dense_;
  std::function<arrow_id(arrow_id, arrow_id)> compose_fn_;
};

bool same_groupoid(const finite_groupoid& a, const finite_groupoid& b);
bool same_groupoid(const groupoid_ptr& a, const groupoid_ptr& b);

// Exhaustive axiom check of an already-built groupoid; used by theorem-level
// tests (this is the executable content of the morphism-groupoid theorems).
void verify_groupoid_axioms(const finite_groupoid& g);

// ---- coarse space ---------------------------------------------------------

struct coarse_space {
  std::vector<std::uint32_t> class_of;  // object -> class index
  std::uint32_t n_classes = 0;
};

coarse_space coarse_space_of(const finite_groupoid& g);

// ---- restriction ----------------------------------------------------------

struct restriction {
  groupoid_ptr sub;
  std::vector<object_id> object_map;  // sub object -> parent object
  std::vector<arrow_id> arrow_map;    // sub arrow  -> parent arrow
};

restriction restrict_objects(const groupoid_ptr& g,
                             const std::vector<object_id>& objs);

// ---- groupoid actions -----------------------------------------------------

struct groupoid_action {
  std::uint32_t n_points = 0;
  std::vector<object_id> anchor;  // point -> object
  // act[x * n_points + p], defined (!= no_object-as-point) iff
  // source(x) == anchor[p]; values are points.
  std::vector<std::uint32_t> act;

  std::uint32_t apply(arrow_id x, std::uint32_t p) const {
    return act[static_cast<std::size_t>(x) * n_points + p];
  }
};

// Checks the action axioms; throws invalid_action with a witness.
void verify_action(const finite_groupoid& g, const groupoid_action& act);

struct action_groupoid_result {
  groupoid_ptr gpd;
  // arrow of result -> (g-arrow, point)
  std::vector<std::pair<arrow_id, std::uint32_t>> arrow_decode;
};

action_groupoid_result action_groupoid(const groupoid_ptr& g,
                                       const groupoid_action& act);

// ---- standard constructors ------------------------------------------------

groupoid_ptr trivial_groupoid();
groupoid_ptr discrete_groupoid(std::uint32_t n_objects);
groupoid_ptr pair_groupoid(std::uint32_t n_objects);

struct disjoint_union_result {
  groupoid_ptr gpd;
  object_id object_offset;  // objects/arrows of the second summand start here
  arrow_id arrow_offset;
};

disjoint_union_result disjoint_union(const groupoid_ptr& a,
                                     const groupoid_ptr& b);

}  // namespace gpd

#endif
