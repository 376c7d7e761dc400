#ifndef GPD_CHECKS_HPP
#define GPD_CHECKS_HPP

#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd::checks {

enum class verdict { pass, fail, skip };

struct check_result {
  std::string label;
  verdict outcome = verdict::fail;
  std::string detail;
};

// Suites: core, fiber, mor, comp, aut, all.
std::vector<check_result> run_suite(const std::string& name,
                                    const groupoid_ptr& g);
std::vector<std::string> suite_names();

}  // namespace gpd::checks

#endif
