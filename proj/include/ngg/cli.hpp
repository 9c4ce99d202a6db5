#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ngg::cli {

/// Runs one command. `args` is the argv tail (program name excluded).
/// Reports go to `out`, diagnostics to `err`. Output is byte-deterministic
/// for identical inputs. Exit code: 0 success (negative mathematical
/// answers included), 1 invalid input, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ngg::cli
