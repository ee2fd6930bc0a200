#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrs::cli {

/// Runs one invocation; args excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrs::cli
