// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "lbo/orbit.hpp"

namespace lbo {

enum class SliceTopology
{
    empty,
    sphere2,
    rp3,
};

char const* to_string(SliceTopology topology);

/*!
 * atanh(tan(phi/2)) on [0, pi/2), atanh(cot(phi/2)) on (pi/2, pi].
 * Throws std::domain_error outside [0, pi] or within abs_tol of pi/2.
 */
double t_phi(double phi, ToleranceConfig const& tol = {});

/*!
 * Smallest radius at which the orbit through reference_point(phi) meets
 * the r-slice: sqrt(2) cos(phi/2) / cosh t(phi) below pi/2, the sin branch
 * above, 0 within abs_tol of pi/2.
 */
double r_min(double phi, ToleranceConfig const& tol = {});

//! In the light cone with |A - r^2| <= rel_tol r^2. Throws if r <= 0.
bool slice_membership(Bivector const& omega, double r,
                      ToleranceConfig const& tol);

struct SliceCertificate
{
    SliceTopology topology = SliceTopology::empty;
    bool boundary = false;  //!< r within abs_tol * max(r0, 1) of r0
};

//! Topology of orbit ∩ r-slice. Throws std::invalid_argument if r <= 0.
SliceCertificate slice_topology(OrbitClass const& cls, double r,
                                ToleranceConfig const& tol);

//! r0 ((w23, w31, w12) + epsilon (w14, w24, w34)) . a for |a| = 1.
Bivector minimal_slice_point(double r0, int epsilon, Vec3 const& unit);

/*!
 * Monte-Carlo oracle for the minimal slice radius of the orbit of omega.
 *
 * Running minimum of sqrt(A) over: `samples` pushforwards by random words
 * (length 1..4, seeded), a grid over the surface S in (theta, t), a boost
 * sweep t in [0, 10] along P_{2,2}, and a compass-search refinement of the
 * best grid point. Every candidate is an orbit element, so the result never
 * undercuts the true infimum.
 */
double empirical_min_radius(Bivector const& omega, int samples,
                            std::uint64_t seed, ToleranceConfig const& tol);

}  // namespace lbo
