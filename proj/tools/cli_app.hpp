#pragma once

namespace floe::cli {

/// Parse arguments and run one subcommand. Returns the process exit
/// status: 0 on success, 1 on computational failure, 2 on usage errors.
int run(int argc, const char* const* argv);

}  // namespace floe::cli
