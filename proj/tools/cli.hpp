#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glr::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 on domain errors (one diagnostic line on `err`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace glr::cli
