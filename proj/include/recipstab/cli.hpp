#pragma once

namespace recipstab {

/// Parse argv and run one subcommand. Exit codes: 0 all checks pass,
/// 1 a check failed, 2 inconclusive/refused results present, 64 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace recipstab
