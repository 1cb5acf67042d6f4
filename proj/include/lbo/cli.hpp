// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lbo::cli {

enum ExitCode : int
{
    exit_success = 0,
    exit_input_error = 2,
    exit_usage_error = 3,
    exit_invariant_violation = 4,
};

/*!
 * Run the command line `lbo <args...>` (args exclude the program name).
 *
 * Subcommands: classify, canonical, slice, stabilizer, verify. Records are
 * read from `in` unless --in names a file. Environment variables LBO_TOL,
 * LBO_SEED, LBO_SAMPLES, LBO_R, LBO_THREADS and LBO_FORMAT supply defaults;
 * flags take precedence.
 */
int run(std::vector<std::string> const& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace lbo::cli
