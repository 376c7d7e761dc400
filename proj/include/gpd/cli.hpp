#ifndef GPD_CLI_HPP
#define GPD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gpd::cli {

// Runs one command; output and diagnostics streams are injectable for tests.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& diag);

}  // namespace gpd::cli

#endif
