#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrmm::cli {

/// Full command-line surface, stream-parameterized so tests can drive it
/// in-process. Returns the process exit status: 0 success, 1 domain error,
/// 2 usage error. Every error path writes exactly one diagnostic line to
/// `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mrmm::cli
