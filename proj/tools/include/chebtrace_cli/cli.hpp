// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#ifndef CHEBTRACE_CLI_CLI_HPP
#define CHEBTRACE_CLI_CLI_HPP

#include <ostream>

namespace chebtrace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResidual = 2;

/// Runs one subcommand. Reports go to out, diagnostics to err.
/// Returns 0 on success, 2 when a residual exceeds --tol and 1 on
/// usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chebtrace::cli

#endif  // CHEBTRACE_CLI_CLI_HPP
