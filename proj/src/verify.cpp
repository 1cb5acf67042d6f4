// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "lbo/orbit.hpp"
#include "lbo/rng.hpp"
#include "lbo/slice.hpp"
#include "lbo/stabilizer.hpp"

namespace lbo {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTrials = 1000;

class Checks
{
  public:
    explicit Checks(SuiteReport& report) : report_(report) {}

    void at_most(std::string name, double value, double threshold)
    {
        report_.checks.push_back(
            {std::move(name), value, threshold, value <= threshold});
    }

  private:
    SuiteReport& report_;
};

Bivector random_bivector(SplitMix64& rng)
{
    Bivector w;
    for (int k = 0; k < 6; ++k)
        w.c[k] = rng.uniform(-1, 1);
    return w;
}

Bivector random_light_cone(SplitMix64& rng)
{
    double const phi = rng.uniform(0, kPi);
    double const r = rng.uniform(0.1, 4);
    int const len = 1 + static_cast<int>(rng.below(4));
    return pushforward(random_proper_lorentz(rng, len),
                       r / std::numbers::sqrt2 * reference_point(phi));
}

void isometry_suite(Checks& c, SplitMix64& rng)
{
    double isometry = 0;
    double homomorphism = 0;
    double cone = 0;
    ToleranceConfig const tol;
    for (int i = 0; i < kTrials; ++i)
    {
        int const len = 1 + static_cast<int>(rng.below(4));
        LorentzMatrix const p = random_proper_lorentz(rng, len);
        LorentzMatrix const q = random_proper_lorentz(rng, len);
        Bivector const a = random_bivector(rng);
        Bivector const b = random_bivector(rng);
        double const d = std::abs(hat_inner(pushforward(p, a), pushforward(p, b))
                                  - hat_inner(a, b));
        isometry = std::max(isometry, d / (1 + a.norm() * b.norm()));
        homomorphism = std::max(
            homomorphism, (pushforward_matrix(p * q)
                           - pushforward_matrix(p) * pushforward_matrix(q))
                              .cwiseAbs()
                              .maxCoeff());
        if (!in_light_cone(pushforward(p, random_light_cone(rng)), tol))
            cone += 1;
    }
    c.at_most("hat metric preserved", isometry, 1e-8);
    c.at_most("pushforward is a homomorphism", homomorphism, 1e-8);
    c.at_most("light cone preserved (failures)", cone, 0);
}

void pfaffian_suite(Checks& c, SplitMix64& rng, ToleranceConfig const& tol)
{
    double invariance = 0;
    double class_r0 = 0;
    double class_kind = 0;
    double reconstruction = 0;
    double representative = 0;
    for (int i = 0; i < kTrials; ++i)
    {
        Bivector const omega = random_light_cone(rng);
        LorentzMatrix const p = random_proper_lorentz(rng, 4);
        Bivector const image = pushforward(p, omega);
        double const scale = std::max(1.0, quantities_AB(image).A);
        invariance = std::max(invariance,
                              std::abs(pfaffian(image) - pfaffian(omega)) / scale);

        OrbitClass const a = orbit_class(omega, tol);
        OrbitClass const b = orbit_class(image, tol);
        if (a.kind != b.kind)
            class_kind += 1;
        else if (a.is_neutral())
            class_r0 = std::max(class_r0, std::abs(a.r0 - b.r0) / a.r0);

        CanonicalForm const cf = canonical_form(omega, tol);
        reconstruction = std::max(reconstruction,
                                  (cf.reconstruct() - omega).norm() / cf.r);
        if (a.is_neutral())
        {
            auto const rep = canonical_representative(omega, tol);
            Bivector const expected
                = a.r0 * (Bivector::omega(1, 2) + a.epsilon * Bivector::omega(3, 4));
            representative = std::max(
                representative,
                (pushforward(rep.witness, omega) - expected).norm() / cf.r);
        }
    }
    c.at_most("pfaffian invariant (relative)", invariance, 1e-8);
    c.at_most("orbit kind invariant (failures)", class_kind, 0);
    c.at_most("r0 invariant (relative)", class_r0, 1e-8);
    c.at_most("canonical form reconstructs (relative)", reconstruction, 1e-9);
    c.at_most("representative witness (relative)", representative, 1e-9);
}

void frames_suite(Checks& c, ToleranceConfig const& tol)
{
    double signature_failures = 0;
    for (double phi : {0.0, kPi / 6, kPi / 3, 3 * kPi / 4, kPi})
    {
        if (!(signature(tangent_gram(phi), 1e-10) == Signature{2, 2, 0}))
            signature_failures += 1;
    }
    if (!(signature(tangent_gram(kPi / 2), 1e-10) == Signature{1, 1, 2}))
        signature_failures += 1;
    c.at_most("tangent signature (2,2) / rank 2 (failures)",
              signature_failures, 0);

    double gram = 0;
    Mat4 const target = Vec4(1, -1, 1, -1).asDiagonal();
    for (int i = 0; i < 10; ++i)
    {
        double const phi = kPi * (i + 0.5) / 10;
        auto const v = orthonormal_tangent_frame(phi, tol).vectors();
        Mat4 g;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                g(a, b) = hat_inner(v[a], v[b]);
        gram = std::max(gram, (g - target).cwiseAbs().maxCoeff());
    }
    c.at_most("pseudo-orthonormal frame Gram", gram, 1e-10);

    double tangential = 0;
    double normal = 0;
    for (int i = 0; i < 10; ++i)
    {
        for (int j = 0; j < 10; ++j)
        {
            auto const r = parallel_frame_check(kPi / 3, -1.5 + i / 3.0,
                                                -1 + j / 4.5, tol);
            tangential = std::max(tangential, r.tangential_residual);
            normal = std::max(normal, r.normal_mismatch);
        }
    }
    c.at_most("parallel frame tangential residual", tangential, 1e-4);
    c.at_most("parallel frame normal mismatch", normal, 1e-4);

    double null = 0;
    double span = 0;
    double y = 0;
    for (int i = 0; i < 10; ++i)
    {
        auto const r = parallel_frame_check(kPi / 2, -1 + 0.2 * i,
                                            0.5 - 0.1 * i, tol);
        null = std::max(null, r.null_residual);
        span = std::max(span, r.span_residual);
        y = std::max(y, r.y_derivative);
    }
    c.at_most("degenerate dX null", null, 1e-6);
    c.at_most("degenerate dX in span{X~}", span, 1e-4);
    c.at_most("degenerate dY vanishes", y, 1e-6);
}

void stabilizer_suite(Checks& c, SplitMix64& rng, ToleranceConfig const& tol)
{
    using SF = StabilizerFamily;
    double fixing = 0;
    for (double p : {-0.9, -0.3, 0.3, 0.9})
    {
        for (SF f : {SF::rot12, SF::boost34, SF::neg_boost34})
            fixing = std::max(fixing,
                              stabilizer_generator_neutral(f, p, 1.3, -1)
                                  .fixing_residual());
        for (SF f : {SF::u, SF::v, SF::u_prime, SF::v_prime})
            fixing = std::max(
                fixing, stabilizer_generator_degenerate(f, p).fixing_residual());
    }
    c.at_most("generators fix base points", fixing, 1e-10);

    double primed = 0;
    for (double t : {-1.5, -0.5, 0.5, 1.5})
    {
        primed = std::max(
            primed, (u_prime(std::tanh(t)).matrix()
                     - stabilizer_generator_degenerate(SF::u, t).matrix.matrix())
                        .cwiseAbs()
                        .maxCoeff());
        primed = std::max(
            primed, (v_prime(std::tanh(t)).matrix()
                     - stabilizer_generator_degenerate(SF::v, t).matrix.matrix())
                        .cwiseAbs()
                        .maxCoeff());
    }
    c.at_most("U'(tanh t) = U_t, V'(tanh t) = V_t", primed, 1e-10);

    double commutator = 0;
    for (double x : {-0.7, 0.3})
        for (double y : {-0.5, 0.9})
            commutator = std::max(commutator,
                                  ((u_prime(x) * v_prime(y)).matrix()
                                   - (v_prime(y) * u_prime(x)).matrix())
                                      .norm());
    c.at_most("U' and V' commute", commutator, 1e-12);

    double det = 0;
    for (int i = 0; i < kTrials; ++i)
    {
        double const a = rng.uniform(-2, 2);
        double const b = rng.uniform(-2, 2);
        double const cc = rng.uniform(-2, 2);
        double const d = rng.uniform(-2, 2);
        double const direct = invariant_matrix_A(a, b, cc, d).det;
        double const closed = invariant_det_closed_form(a, b, cc, d);
        det = std::max(det, std::abs(direct - closed)
                                / std::max(1.0, std::abs(closed)));
    }
    c.at_most("det A closed form (relative)", det, 1e-9);

    auto const neutral = StabilizerBase::neutral(1, 1);
    auto const degenerate = StabilizerBase::degenerate_orbit();
    auto const wp = w_plus_basis();
    auto const wm = w_minus_basis();
    auto const w0 = w0_basis();
    Bivector const yp = e_plus(2);
    Bivector const ym = e_minus(2);
    struct Expect
    {
        StabilizerBase base;
        std::vector<Bivector> span;
        SubspaceLabel label;
    };
    std::vector<Expect> const cases{
        {neutral, {wp[0], wp[1]}, SubspaceLabel::w_plus},
        {neutral, {wm[0], wm[1]}, SubspaceLabel::w_minus},
        {neutral, {e_plus(2), e_minus(2), e_plus(3), e_minus(3)},
         SubspaceLabel::whole},
        {neutral, {e_plus(2)}, SubspaceLabel::not_invariant},
        {degenerate, {w0[0]}, SubspaceLabel::line_in_w0},
        {degenerate, {w0[0], w0[1]}, SubspaceLabel::w0},
        {degenerate, {w0[0], w0[1], yp}, SubspaceLabel::contains_w0},
        {degenerate, {w0[0], w0[1], yp, ym}, SubspaceLabel::whole},
        {degenerate, {w0[0], yp}, SubspaceLabel::not_invariant},
    };
    double mismatches = 0;
    for (auto const& e : cases)
    {
        for (auto policy : {NegationPolicy::include, NegationPolicy::exclude})
        {
            if (classify_invariant_subspace(e.base, e.span, tol, policy)
                != e.label)
            {
                mismatches += 1;
            }
        }
    }
    c.at_most("invariant subspace labels (mismatches)", mismatches, 0);
}

void slice_suite(Checks& c, std::uint64_t seed, ToleranceConfig const& tol)
{
    double identity = 0;
    double symmetry = 0;
    double monotone = 0;
    double prev = r_min(0, tol);
    for (int i = 0; i < 1000; ++i)
    {
        double const phi = (kPi / 2 - 1e-3) * i / 999;
        double const r = r_min(phi, tol);
        identity = std::max(identity,
                            std::abs(r * r - 2 * std::abs(std::cos(phi))));
        symmetry = std::max(symmetry, std::abs(r_min(kPi - phi, tol) - r));
        if (i > 0 && !(r < prev))
            monotone += 1;
        prev = r;
    }
    c.at_most("r_min^2 = 2|cos phi|", identity, 1e-12);
    c.at_most("r_min(pi - phi) = r_min(phi)", symmetry, 1e-12);
    c.at_most("r_min decreasing on [0, pi/2) (failures)", monotone, 0);

    double oracle_gap = 0;
    for (double phi : {0.0, kPi / 6, kPi / 3})
    {
        double const r0 = r_min(phi, tol);
        double const m
            = empirical_min_radius(reference_point(phi), 2000, seed, tol);
        if (m < r0 - tol.abs_tol)
            oracle_gap = std::max(oracle_gap, 1.0);
        oracle_gap = std::max(oracle_gap, m / r0 - 1);
    }
    c.at_most("empirical minimum within 2% of r0", oracle_gap, 0.02);
    c.at_most("empirical minimum at pi/2",
              empirical_min_radius(reference_point(kPi / 2), 100, seed, tol),
              1e-3);
}

}  // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](CheckResult const& c) { return c.passed; });
}

std::vector<std::string> const& suite_names()
{
    static std::vector<std::string> const names{
        "isometry", "pfaffian", "frames", "stabilizer", "slice"};
    return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed,
                      ToleranceConfig const& tol)
{
    SuiteReport report;
    report.suite = std::string(name);
    Checks checks(report);
    SplitMix64 rng(seed);
    if (name == "isometry")
        isometry_suite(checks, rng);
    else if (name == "pfaffian")
        pfaffian_suite(checks, rng, tol);
    else if (name == "frames")
        frames_suite(checks, tol);
    else if (name == "stabilizer")
        stabilizer_suite(checks, rng, tol);
    else if (name == "slice")
        slice_suite(checks, seed, tol);
    else
        throw std::invalid_argument("unknown suite: " + std::string(name));
    return report;
}

}  // namespace lbo
