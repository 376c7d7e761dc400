#ifndef GPD_TESTS_ZOO_HPP
#define GPD_TESTS_ZOO_HPP

#include <vector>

#include "gpd/group_table.hpp"
#include "gpd/groupoid.hpp"

// The small groupoids every suite works over.
namespace zoo {

inline gpd::groupoid_ptr t() { return gpd::trivial_groupoid(); }
inline gpd::groupoid_ptr d2() { return gpd::discrete_groupoid(2); }
inline gpd::groupoid_ptr d3() { return gpd::discrete_groupoid(3); }
inline gpd::groupoid_ptr p2() { return gpd::pair_groupoid(2); }

inline gpd::groupoid_ptr bz2() {
  return gpd::classifying_groupoid(gpd::group_table::cyclic(2), "BZ2");
}
inline gpd::groupoid_ptr bz4() {
  return gpd::classifying_groupoid(gpd::group_table::cyclic(4), "BZ4");
}
inline gpd::groupoid_ptr bs3() {
  return gpd::classifying_groupoid(gpd::group_table::symmetric(3), "BS3");
}
inline gpd::groupoid_ptr bv4() {
  return gpd::classifying_groupoid(
      gpd::group_table::direct_product(gpd::group_table::cyclic(2),
                                       gpd::group_table::cyclic(2)),
      "BV4");
}
inline gpd::groupoid_ptr p2_plus_t() {
  return gpd::disjoint_union(gpd::pair_groupoid(2), gpd::trivial_groupoid())
      .gpd;
}

inline std::vector<gpd::groupoid_ptr> all() {
  return {t(), d2(), d3(), p2(), bz2(), bz4(), bs3(), p2_plus_t()};
}

}  // namespace zoo

#endif
