// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lbo/stabilizer.hpp"

namespace lbo::cases {

struct SubspaceCase
{
    char const* name;
    StabilizerBase base;
    std::vector<Bivector> span;
    SubspaceLabel expected;
};

//! Twenty spans at the neutral and degenerate base points with known labels.
std::vector<SubspaceCase> enumerated_subspaces();

}  // namespace lbo::cases
