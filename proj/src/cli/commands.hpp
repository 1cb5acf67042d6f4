// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "input.hpp"
#include "json_writer.hpp"
#include "lbo/tolerance.hpp"

namespace lbo::cli {

enum class Command
{
    classify,
    canonical,
    slice,
    stabilizer,
};

struct Options
{
    Command command = Command::classify;
    ToleranceConfig tol;
    std::uint64_t seed = 0;
    int samples = 0;  //!< slice: random words for the empirical radius
    std::optional<double> r;
};

struct Outcome
{
    Json report;
    int status = 0;  //!< 0, exit_input_error or exit_invariant_violation
};

//! The report for one record; deterministic in (record, options).
Outcome process(InputRecord const& record, Options const& options);

//! One line of the table format for a report produced by process().
std::string table_row(Json const& report, Command command);
std::string table_header(Command command);

}  // namespace lbo::cli
