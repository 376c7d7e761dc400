#include "gpd/cli.hpp"

#include <ostream>

namespace gpd::cli {

int run(const std::vector<std::string>&, std::ostream&, std::ostream&) {
  return 0;
}

}  // namespace gpd::cli
