// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/slice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lbo/errors.hpp"
#include "lbo/rng.hpp"

namespace lbo {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGrid = 256;
constexpr double kGridRapidity = 4;
constexpr double kSweepRapidity = 10;
constexpr int kSweepSteps = 2001;

void check_phi(double phi)
{
    if (!(phi >= 0 && phi <= kPi))
        throw std::domain_error("phi must lie in [0, pi]");
}

bool near_half_pi(double phi, ToleranceConfig const& tol)
{
    return std::abs(phi - kPi / 2) <= tol.abs_tol;
}

}  // namespace

char const* to_string(SliceTopology topology)
{
    switch (topology)
    {
        case SliceTopology::empty: return "Empty";
        case SliceTopology::sphere2: return "Sphere2";
        case SliceTopology::rp3: return "RP3";
    }
    return "?";
}

double t_phi(double phi, ToleranceConfig const& tol)
{
    check_phi(phi);
    if (near_half_pi(phi, tol))
        throw std::domain_error("t(phi) is undefined at phi = pi/2");
    if (phi < kPi / 2)
        return std::atanh(std::tan(phi / 2));
    return std::atanh(1 / std::tan(phi / 2));
}

double r_min(double phi, ToleranceConfig const& tol)
{
    check_phi(phi);
    if (near_half_pi(phi, tol))
        return 0;
    double const t = t_phi(phi, tol);
    double const half
        = phi < kPi / 2 ? std::cos(phi / 2) : std::sin(phi / 2);
    return std::numbers::sqrt2 * half / std::cosh(t);
}

bool slice_membership(Bivector const& omega, double r,
                      ToleranceConfig const& tol)
{
    if (!(r > 0))
        throw std::invalid_argument("slice radius must be positive");
    if (!in_light_cone(omega, tol))
        return false;
    double const r2 = r * r;
    return std::abs(quantities_AB(omega).A - r2) <= tol.rel_tol * r2;
}

SliceCertificate slice_topology(OrbitClass const& cls, double r,
                                ToleranceConfig const& tol)
{
    if (!(r > 0))
        throw std::invalid_argument("slice radius must be positive");
    SliceCertificate cert;
    if (!cls.is_neutral())
    {
        cert.topology = SliceTopology::rp3;
        return cert;
    }
    double const band = tol.abs_tol * std::max(cls.r0, 1.0);
    if (std::abs(r - cls.r0) <= band)
    {
        cert.topology = SliceTopology::sphere2;
        cert.boundary = true;
    }
    else
    {
        cert.topology = r < cls.r0 ? SliceTopology::empty
                                   : SliceTopology::rp3;
    }
    return cert;
}

Bivector minimal_slice_point(double r0, int epsilon, Vec3 const& unit)
{
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("epsilon must be +1 or -1");
    Bivector omega;
    omega.c << unit[2], -unit[1], epsilon * unit[0], unit[0],
        epsilon * unit[1], epsilon * unit[2];
    return r0 * omega;
}

double empirical_min_radius(Bivector const& omega, int samples,
                            std::uint64_t seed, ToleranceConfig const& tol)
{
    if (!in_light_cone(omega, tol))
        throw NotInLightConeError("bivector is not in the light cone");
    if (samples < 1)
        throw std::invalid_argument("samples must be >= 1");

    auto const radius = [](Bivector const& w) {
        return std::sqrt(quantities_AB(w).A);
    };
    double best = radius(omega);

    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i)
    {
        int const len = 1 + static_cast<int>(rng.below(4));
        best = std::min(best,
                        radius(pushforward(random_proper_lorentz(rng, len),
                                           omega)));
    }

    // The orbit of omega is the orbit of normal_form(r, phi), which is the
    // orbit of reference_point(phi) scaled by r / sqrt(2).
    CanonicalForm const cf = canonical_form(omega, tol);
    double const scale = cf.r / std::numbers::sqrt2;
    auto const on_surface = [&](double theta, double t) {
        return scale * radius(surface_point(cf.phi, theta, t));
    };

    double best_theta = 0;
    double best_t = 0;
    double best_grid = on_surface(0, 0);
    double const dtheta = 2 * kPi / kGrid;
    double const dt = 2 * kGridRapidity / kGrid;
    for (int i = 0; i < kGrid; ++i)
    {
        double const theta = -kPi + i * dtheta;
        for (int j = 0; j <= kGrid; ++j)
        {
            double const t = -kGridRapidity + j * dt;
            double const v = on_surface(theta, t);
            if (v < best_grid)
            {
                best_grid = v;
                best_theta = theta;
                best_t = t;
            }
        }
    }

    double step_theta = dtheta;
    double step_t = dt;
    while (step_theta > 1e-14 || step_t > 1e-14)
    {
        bool moved = false;
        for (auto const& [s, u] : {std::pair{1, 0}, std::pair{-1, 0},
                                  std::pair{0, 1}, std::pair{0, -1}})
        {
            double const theta = best_theta + s * step_theta;
            double const t = best_t + u * step_t;
            double const v = on_surface(theta, t);
            if (v < best_grid)
            {
                best_grid = v;
                best_theta = theta;
                best_t = t;
                moved = true;
                break;
            }
        }
        if (!moved)
        {
            step_theta /= 2;
            step_t /= 2;
        }
    }
    best = std::min(best, best_grid);

    Bivector const base = scale * reference_point(cf.phi);
    for (int k = 0; k < kSweepSteps; ++k)
    {
        double const t
            = -kSweepRapidity + 2 * kSweepRapidity * k / (kSweepSteps - 1);
        best = std::min(
            best,
            radius(pushforward(generator({2, Family::boost, t}), base)));
    }
    return best;
}

}  // namespace lbo
