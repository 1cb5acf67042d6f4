// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lbo {

//! A 4x4 matrix failed the proper-Lorentz membership test.
class NotLorentzError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! A bivector was required to lie on the light cone and does not.
class NotInLightConeError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! An operation that only exists on neutral orbits got a degenerate one.
class DegenerateOrbitError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/*!
 * A check that must hold mathematically failed numerically.
 *
 * Thrown only where a result contradicts a proven identity, so it signals a
 * bug or an input far outside the supported numeric range.
 */
class InvariantViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

}  // namespace lbo
