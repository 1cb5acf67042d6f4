// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/tolerance.hpp"

#include <stdexcept>

namespace lbo {

void ToleranceConfig::validate() const
{
    if (!(abs_tol > 0) || !(rel_tol > 0) || !(fd_step > 0))
    {
        throw std::invalid_argument(
            "tolerances and finite-difference step must be positive");
    }
}

}  // namespace lbo
