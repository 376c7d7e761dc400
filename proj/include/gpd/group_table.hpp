#ifndef GPD_GROUP_TABLE_HPP
#define GPD_GROUP_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

// Plain multiplication table of a finite group, row-major: mult[a][b] = a.b
// (left-to-right, matching the groupoid composition convention).
struct group_table {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> mult;
  std::uint32_t unit = 0;
  std::vector<std::uint32_t> inverse;

  std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
    return mult[static_cast<std::size_t>(a) * order + b];
  }

  // Validates a bare table (group axioms); throws not_a_group.
  static group_table validate(std::uint32_t order,
                              const std::vector<std::uint32_t>& mult);

  std::uint32_t element_order(std::uint32_t a) const;
  bool is_abelian() const;

  static group_table trivial();
  static group_table cyclic(std::uint32_t n);
  static group_table direct_product(const group_table& a,
                                    const group_table& b);
  static group_table symmetric(std::uint32_t n);  // n <= 5 at desk scale
};

// Brute-force isomorphism search with element-order pruning.
std::optional<std::vector<std::uint32_t>> find_group_isomorphism(
    const group_table& a, const group_table& b);
bool groups_isomorphic(const group_table& a, const group_table& b);

// ---- isotropy -------------------------------------------------------------

struct isotropy_group {
  std::vector<arrow_id> loops;  // ascending arrow ids; element i = loops[i]
  group_table table;
};

isotropy_group isotropy_group_at(const finite_groupoid& g, object_id a);

// Classifying groupoid [*/G]: one object, one arrow per group element.
groupoid_ptr classifying_groupoid(const group_table& table,
                                  const std::string& name = "");

// ---- skeletons and Morita equivalence -------------------------------------

struct groupoid_skeleton {
  std::vector<object_id> representatives;  // least object of each class
  std::vector<isotropy_group> isotropy;    // aligned with representatives
};

groupoid_skeleton skeleton_of(const finite_groupoid& g);

// Finite groupoids are Morita equivalent iff their skeletons match: equal
// class counts and a class bijection with isomorphic isotropy groups.
bool morita_equivalent(const finite_groupoid& g, const finite_groupoid& h);

}  // namespace gpd

#endif
