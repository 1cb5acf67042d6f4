// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lbo/tolerance.hpp"

namespace lbo {

struct CheckResult
{
    std::string name;
    double value = 0;  //!< worst residual (or failure count)
    double threshold = 0;
    bool passed = false;
};

struct SuiteReport
{
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

//! isometry, pfaffian, frames, stabilizer, slice.
std::vector<std::string> const& suite_names();

//! Runs one named suite; "all" is not accepted here.
//! Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed,
                      ToleranceConfig const& tol);

}  // namespace lbo
