// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "lbo/errors.hpp"

namespace lbo {
namespace {

constexpr double kPi = std::numbers::pi;

void require_light_cone(Bivector const& omega, ToleranceConfig const& tol)
{
    if (!in_light_cone(omega, tol))
    {
        auto const [a, b] = quantities_AB(omega);
        throw NotInLightConeError("bivector is not on the light cone (A = "
                                  + std::to_string(a) + ", B = "
                                  + std::to_string(b) + ")");
    }
}

// Right-handed orthonormal (u1, u2, u3) with u3 = b/|b| and u1 along the
// part of a orthogonal to b, so that <u2, a> = 0 and <u1, a> >= 0.
Eigen::Matrix3d adapted_rotation(Vec3 const& a, Vec3 const& b)
{
    auto const orthogonal_part = [](Vec3 v, Vec3 const& axis) {
        // Two passes keep v orthogonal to axis when it nearly cancels.
        v -= v.dot(axis) * axis;
        v -= v.dot(axis) * axis;
        return v;
    };
    Vec3 const u3 = b.normalized();
    Vec3 const a_perp = orthogonal_part(a, u3);
    Vec3 u1;
    if (a_perp.norm() > 64 * std::numeric_limits<double>::epsilon() * a.norm())
    {
        u1 = a_perp.normalized();
    }
    else
    {
        // a parallel to b: take the first coordinate axis well away from b,
        // so that b = e3 gives the identity.
        int k = 0;
        while (std::abs(u3[k]) > std::numbers::sqrt2 / 2)
            ++k;
        u1 = orthogonal_part(Vec3::Unit(k), u3).normalized();
    }
    Eigen::Matrix3d u;
    u.col(0) = u1;
    u.col(1) = u3.cross(u1);
    u.col(2) = u3;
    return u;
}

Bivector apply(Mat6 const& m, Bivector const& omega)
{
    return Bivector(m * omega.c);
}

// Solves G alpha = rhs and returns the ambient vector sum alpha_k F_k.
Bivector tangential_part(Mat4 const& gram_inverse,
                         std::array<Bivector, 4> const& frame,
                         Bivector const& v)
{
    Vec4 rhs;
    for (int k = 0; k < 4; ++k)
        rhs[k] = hat_inner(v, frame[k]);
    Vec4 const alpha = gram_inverse * rhs;
    Bivector result;
    for (int k = 0; k < 4; ++k)
        result += alpha[k] * frame[k];
    return result;
}

double wrap_angle(double theta)
{
    double w = std::fmod(theta + kPi, 2 * kPi);
    if (w < 0)
        w += 2 * kPi;
    return w - kPi;
}

}  // namespace

//---------------------------------------------------------------------------//
SplitAB split_ab(Bivector const& omega)
{
    SplitAB result;
    result.a = Vec3(omega.c23(), -omega.c13(), omega.c12());
    result.b = Vec3(omega.c14(), omega.c24(), omega.c34());
    return result;
}

Bivector normal_form(double r, double phi)
{
    return r
           * (std::cos(phi) * Bivector::omega(1, 2)
              + std::sin(phi) * Bivector::omega(2, 3)
              + Bivector::omega(3, 4));
}

Bivector reference_point(double phi)
{
    return normal_form(std::numbers::sqrt2, phi);
}

LorentzMatrix CanonicalForm::witness_matrix() const
{
    Mat4 m;
    for (int j = 0; j < 4; ++j)
        m.col(j) = basis_witness[j];
    return {m, LorentzMatrix::Unchecked{}};
}

Bivector CanonicalForm::reconstruct() const
{
    return pushforward(witness_matrix(), normal_form(r, phi));
}

CanonicalForm canonical_form(Bivector const& omega, ToleranceConfig const& tol)
{
    require_light_cone(omega, tol);
    auto const [a, b] = split_ab(omega);
    Eigen::Matrix3d const u = adapted_rotation(a, b);

    CanonicalForm result;
    result.r = a.norm();
    // <u1, a> = |a sin phi| >= 0 and <u3, a> = |a| cos phi.
    result.phi = std::atan2(std::max(u.col(0).dot(a), 0.0), u.col(2).dot(a));
    for (int j = 0; j < 3; ++j)
    {
        result.basis_witness[j] = Vec4::Zero();
        result.basis_witness[j].head<3>() = u.col(j);
    }
    result.basis_witness[3] = Vec4::Unit(3);
    return result;
}

//---------------------------------------------------------------------------//
char const* to_string(OrbitKind kind)
{
    switch (kind)
    {
        case OrbitKind::neutral_plus: return "NeutralPlus";
        case OrbitKind::neutral_minus: return "NeutralMinus";
        case OrbitKind::degenerate: return "Degenerate";
    }
    return "?";
}

OrbitClass orbit_class(Bivector const& omega, ToleranceConfig const& tol)
{
    require_light_cone(omega, tol);
    double const pf = pfaffian(omega);
    double const a = quantities_AB(omega).A;
    OrbitClass result;
    if (std::abs(pf) <= tol.abs_tol * std::max(a, 1.0))
        return result;
    result.kind = pf > 0 ? OrbitKind::neutral_plus : OrbitKind::neutral_minus;
    result.r0 = std::sqrt(std::abs(pf));
    result.epsilon = pf > 0 ? +1 : -1;
    return result;
}

CanonicalRepresentative
canonical_representative(Bivector const& omega, ToleranceConfig const& tol)
{
    OrbitClass const cls = orbit_class(omega, tol);
    if (!cls.is_neutral())
    {
        throw DegenerateOrbitError(
            "the degenerate orbit has no element r(w12 + eps w34)");
    }
    CanonicalForm const cf = canonical_form(omega, tol);
    double const half = cf.phi / 2;

    CanonicalRepresentative result;
    result.r0 = cls.r0;
    result.epsilon = cls.epsilon;
    if (cls.epsilon > 0)
    {
        result.theta = half;
        result.rapidity = std::atanh(std::tan(half));
    }
    else
    {
        result.theta = half + kPi / 2;
        result.rapidity = std::atanh(1 / std::tan(half));
    }
    result.witness = surface_map(result.theta, result.rapidity)
                     * cf.witness_matrix().inverse();
    result.point = pushforward(result.witness, omega);
    return result;
}

//---------------------------------------------------------------------------//
std::array<Bivector, 6> orbit_tangent_generators(Bivector const& base)
{
    std::array<Bivector, 6> result;
    int n = 0;
    for (int axis = 1; axis <= 3; ++axis)
    {
        for (Family family : {Family::rotation, Family::boost})
        {
            result[n++] = apply(
                pushforward_differential(lie_generator(axis, family)), base);
        }
    }
    return result;
}

TangentFrame tangent_frame(double phi)
{
    double const c = std::cos(phi);
    double const s = std::sin(phi);
    TangentFrame f;
    f.x_plus = s * e_plus(1) - c * e_plus(3) - e_minus(3);
    f.x_minus = s * e_minus(1) + c * e_minus(3) - e_plus(3);
    f.y_plus = e_plus(2);
    f.y_minus = e_minus(2);
    f.base_point = reference_point(phi);
    return f;
}

std::array<Bivector, 2> normal_vectors(double phi)
{
    double const c = std::cos(phi);
    double const s = std::sin(phi);
    return {-c * e_plus(1) - s * e_plus(3) + e_minus(1),
            -c * e_minus(1) + s * e_minus(3) - e_plus(1)};
}

Mat4 tangent_gram(double phi)
{
    auto const v = tangent_frame(phi).vectors();
    Mat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            g(i, j) = hat_inner(v[i], v[j]);
    return g;
}

Signature signature(Mat4 const& symmetric, double tol)
{
    Eigen::SelfAdjointEigenSolver<Mat4> solver(symmetric,
                                               Eigen::EigenvaluesOnly);
    Vec4 const ev = solver.eigenvalues();
    double const scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    Signature s;
    for (int i = 0; i < 4; ++i)
    {
        if (std::abs(ev[i]) <= tol * scale)
            ++s.zero;
        else if (ev[i] > 0)
            ++s.positive;
        else
            ++s.negative;
    }
    return s;
}

OrthonormalFrame
orthonormal_tangent_frame(double phi, ToleranceConfig const& tol)
{
    double const c = std::cos(phi);
    double const s = std::sin(phi);
    if (std::abs(c) <= tol.abs_tol)
    {
        throw std::domain_error(
            "no pseudo-orthonormal tangent frame at phi = pi/2");
    }
    auto const w = [](int i, int j) { return Bivector::omega(i, j); };
    double const k = 1 / (2 * c);
    OrthonormalFrame f;
    f.x1 = k * (c * s * w(1, 2) - (1 + c * c) * w(2, 3) - s * w(3, 4));
    f.x2 = k
           * (c * s * w(1, 2) - 2 * c * w(1, 4) + s * s * w(2, 3)
              + s * w(3, 4));
    f.y1 = w(1, 3);
    f.y2 = w(4, 2);
    return f;
}

//---------------------------------------------------------------------------//
LorentzMatrix surface_map(double theta, double t)
{
    return generator({2, Family::rotation, theta})
           * generator({2, Family::boost, t});
}

Bivector surface_point(double phi, double theta, double t)
{
    return pushforward(surface_map(theta, t), reference_point(phi));
}

bool FrameCheckReport::passed(double fd_tol, double null_tol) const
{
    if (degenerate)
    {
        return null_residual <= null_tol && span_residual <= fd_tol
               && tangential_residual <= fd_tol && y_derivative <= null_tol;
    }
    return tangential_residual <= fd_tol && normal_mismatch <= fd_tol
           && y_derivative <= null_tol;
}

FrameCheckReport parallel_frame_check(double phi, double theta, double t,
                                      ToleranceConfig const& tol)
{
    double const h = tol.fd_step;
    auto const frame0 = tangent_frame(phi).vectors();
    auto const transport = [&](double th, double tt) {
        Mat6 const m = pushforward_matrix(surface_map(th, tt));
        std::array<Bivector, 4> out;
        for (int k = 0; k < 4; ++k)
            out[k] = apply(m, frame0[k]);
        return out;
    };

    auto const frame = transport(theta, t);
    auto const th_hi = transport(theta + h, t);
    auto const th_lo = transport(theta - h, t);
    auto const t_hi = transport(theta, t + h);
    auto const t_lo = transport(theta, t - h);

    // d_theta and d_t of X~+, X~-, Y~+, Y~-.
    std::array<Bivector, 4> d_theta;
    std::array<Bivector, 4> d_t;
    for (int k = 0; k < 4; ++k)
    {
        d_theta[k] = (1 / (2 * h)) * (th_hi[k] - th_lo[k]);
        d_t[k] = (1 / (2 * h)) * (t_hi[k] - t_lo[k]);
    }

    FrameCheckReport report;
    for (int k = 2; k < 4; ++k)
    {
        report.y_derivative = std::max(
            {report.y_derivative, d_theta[k].norm(), d_t[k].norm()});
    }

    report.degenerate = std::abs(std::cos(phi)) <= tol.abs_tol;
    if (!report.degenerate)
    {
        Mat4 gram;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                gram(i, j) = hat_inner(frame[i], frame[j]);
        Mat4 const gram_inverse = gram.inverse();
        for (int k = 0; k < 4; ++k)
        {
            for (auto const* d : {&d_theta[k], &d_t[k]})
            {
                report.tangential_residual
                    = std::max(report.tangential_residual,
                               tangential_part(gram_inverse, frame, *d).norm());
            }
        }

        Mat6 const q = pushforward_matrix(surface_map(theta, t));
        auto const [n_plus, n_minus] = normal_vectors(phi);
        std::array<Bivector, 2> const expect_theta{apply(q, n_plus),
                                                   apply(q, n_minus)};
        std::array<Bivector, 2> const expect_t{apply(q, n_minus),
                                               apply(q, -n_plus)};
        for (int k = 0; k < 2; ++k)
        {
            report.normal_mismatch
                = std::max({report.normal_mismatch,
                            (d_theta[k] - expect_theta[k]).norm(),
                            (d_t[k] - expect_t[k]).norm()});
        }
        return report;
    }

    Eigen::Matrix<double, 6, 2> x_span;
    x_span.col(0) = frame[0].c;
    x_span.col(1) = frame[1].c;
    auto const qr = x_span.colPivHouseholderQr();
    for (int k = 0; k < 2; ++k)
    {
        for (auto const* d : {&d_theta[k], &d_t[k]})
        {
            report.null_residual
                = std::max(report.null_residual, std::abs(hat_inner(*d, *d)));
            Eigen::Vector2d const coeff = qr.solve(d->c);
            report.span_residual = std::max(
                report.span_residual, (x_span * coeff - d->c).norm());
            // Y-block part: the Gram of (Y~+, Y~-) is [[0, 1], [1, 0]].
            Bivector const y_part = hat_inner(*d, frame[3]) * frame[2]
                                    + hat_inner(*d, frame[2]) * frame[3];
            report.tangential_residual
                = std::max(report.tangential_residual, y_part.norm());
        }
    }
    return report;
}

//---------------------------------------------------------------------------//
std::vector<NormalFormHit>
scan_normal_form_elements(double phi, int grid, double t_max)
{
    if (grid < 2 || !(t_max > 0))
        throw std::invalid_argument("scan needs grid >= 2 and t_max > 0");

    Bivector const base = reference_point(phi);
    Mat6 const d_theta = pushforward_differential(
        lie_generator(2, Family::rotation));
    Mat6 const d_t = pushforward_differential(lie_generator(2, Family::boost));
    constexpr int i14 = 2;
    constexpr int i23 = 3;
    constexpr double kTol = 1e-13;
    constexpr int kMaxIter = 60;

    std::vector<NormalFormHit> hits;
    for (int i = 0; i < grid; ++i)
    {
        for (int j = 0; j < grid; ++j)
        {
            double theta = -kPi + 2 * kPi * i / grid;
            double t = -t_max + 2 * t_max * j / (grid - 1);
            bool converged = false;
            Bivector p;
            for (int iter = 0; iter < kMaxIter; ++iter)
            {
                p = pushforward(surface_map(theta, t), base);
                Eigen::Vector2d const f(p.c[i14], p.c[i23]);
                double const scale = std::max(1.0, p.norm());
                if (f.norm() <= kTol * scale)
                {
                    converged = true;
                    break;
                }
                Coeffs6 const pt = d_theta * p.c;
                Coeffs6 const pu = d_t * p.c;
                Eigen::Matrix2d jac;
                jac << pt[i14], pu[i14], pt[i23], pu[i23];
                if (std::abs(jac.determinant())
                    < 1e-14 * scale * scale)
                    break;
                Eigen::Vector2d step = jac.partialPivLu().solve(-f);
                double const len = step.norm();
                if (len > 0.5)
                    step *= 0.5 / len;
                theta = wrap_angle(theta + step[0]);
                t += step[1];
                if (std::abs(t) > 2 * t_max)
                    break;
            }
            if (!converged || std::abs(t) > t_max)
                continue;

            bool duplicate = false;
            for (auto const& hit : hits)
            {
                if (std::abs(wrap_angle(hit.theta - theta)) < 1e-7
                    && std::abs(hit.t - t) < 1e-7)
                {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate)
                continue;
            NormalFormHit hit;
            hit.theta = theta;
            hit.t = t;
            hit.coefficient = p.c12();
            hit.epsilon = p.c12() * p.c34() > 0 ? +1 : -1;
            hits.push_back(hit);
        }
    }
    return hits;
}

}  // namespace lbo
