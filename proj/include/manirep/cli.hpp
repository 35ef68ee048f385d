#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace manirep {

/// Runs one CLI invocation (args exclude the program name).
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// gr-real style name of a manifold family.
std::string manifold_cli_name(int family_index);

}  // namespace manirep
