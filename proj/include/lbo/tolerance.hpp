// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace lbo {

/*!
 * Tolerances shared by every approximate predicate in the library.
 *
 * abs_tol and rel_tol gate membership tests (Lorentz group, light cone,
 * slices, degenerate orbit band); fd_step is the central-difference step
 * used by the parallel-frame check.
 */
struct ToleranceConfig
{
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double fd_step = 1e-5;
    std::uint64_t rng_seed = 0;

    //! Throws std::invalid_argument unless every tolerance is positive.
    void validate() const;
};

}  // namespace lbo
