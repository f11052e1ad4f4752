#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeqi::cli {

/// Exit codes: 0 success / equivalent / valid, 1 not equivalent / invalid
/// complex, 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeqi::cli
