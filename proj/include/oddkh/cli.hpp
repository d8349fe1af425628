#pragma once

#include <iosfwd>

namespace oddkh {

/// The `oddkh` command line. Returns the process exit code: 0 on success, 1
/// when any input failed, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddkh
