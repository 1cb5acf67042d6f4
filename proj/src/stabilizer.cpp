// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "lbo/errors.hpp"

namespace lbo {
namespace {

constexpr std::array<double, 4> kSampleParameters{-0.9, -0.3, 0.3, 0.9};

using Basis = Eigen::Matrix<double, 6, Eigen::Dynamic>;

// Largest distance of the columns of `vectors` from span(q), q orthonormal.
double distance_from_span(Basis const& q, Basis const& vectors)
{
    Basis const r = vectors - q * (q.transpose() * vectors);
    return r.colwise().norm().maxCoeff();
}

Basis to_columns(std::span<Bivector const> vectors)
{
    Basis m(6, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)) = vectors[k].c;
    return m;
}

template<std::size_t N>
Basis orthonormal(std::array<Bivector, N> const& vectors)
{
    Basis m = to_columns(vectors);
    Eigen::HouseholderQR<Basis> qr(m);
    return qr.householderQ() * Basis::Identity(6, N);
}

}  // namespace

char const* to_string(StabilizerFamily family)
{
    switch (family)
    {
        case StabilizerFamily::rot12: return "Rot12";
        case StabilizerFamily::boost34: return "Boost34";
        case StabilizerFamily::neg_boost34: return "NegBoost34";
        case StabilizerFamily::u: return "U";
        case StabilizerFamily::v: return "V";
        case StabilizerFamily::u_prime: return "UPrime";
        case StabilizerFamily::v_prime: return "VPrime";
    }
    return "?";
}

char const* to_string(SubspaceLabel label)
{
    switch (label)
    {
        case SubspaceLabel::whole: return "Whole";
        case SubspaceLabel::w_plus: return "WPlus";
        case SubspaceLabel::w_minus: return "WMinus";
        case SubspaceLabel::w0: return "W0";
        case SubspaceLabel::contains_w0: return "ContainsW0";
        case SubspaceLabel::line_in_w0: return "LineInW0";
        case SubspaceLabel::not_invariant: return "NotInvariant";
    }
    return "?";
}

//---------------------------------------------------------------------------//
StabilizerBase StabilizerBase::neutral(double r, int epsilon)
{
    if (!(r > 0) || (epsilon != 1 && epsilon != -1))
    {
        throw std::invalid_argument(
            "neutral base needs r > 0 and epsilon = +1 or -1");
    }
    StabilizerBase base;
    base.r = r;
    base.epsilon = epsilon;
    return base;
}

StabilizerBase StabilizerBase::degenerate_orbit()
{
    StabilizerBase base;
    base.degenerate = true;
    base.r = std::numbers::sqrt2;
    base.epsilon = 0;
    return base;
}

Bivector StabilizerBase::point() const
{
    if (degenerate)
    {
        return std::numbers::sqrt2
               * (Bivector::omega(2, 3) + Bivector::omega(3, 4));
    }
    return r * (Bivector::omega(1, 2) + epsilon * Bivector::omega(3, 4));
}

std::array<Bivector, 4> StabilizerBase::tangent_basis() const
{
    if (degenerate)
    {
        return {e_plus(1) - e_minus(3), e_minus(1) - e_plus(3), e_plus(2),
                e_minus(2)};
    }
    return {e_plus(2), e_minus(2), e_plus(3), e_minus(3)};
}

double StabilizerElement::fixing_residual() const
{
    return (pushforward(matrix, base_point) - base_point).norm();
}

//---------------------------------------------------------------------------//
StabilizerElement stabilizer_generator_neutral(StabilizerFamily family,
                                               double parameter, double r,
                                               int epsilon)
{
    StabilizerElement e;
    e.family = family;
    e.parameter = parameter;
    e.base_point = StabilizerBase::neutral(r, epsilon).point();
    switch (family)
    {
        case StabilizerFamily::rot12:
            e.matrix = generator({1, Family::rotation, parameter});
            break;
        case StabilizerFamily::boost34:
            e.matrix = generator({1, Family::boost, parameter});
            break;
        case StabilizerFamily::neg_boost34:
            e.matrix = -generator({1, Family::boost, parameter});
            break;
        default:
            throw std::invalid_argument(
                "neutral stabilizer families are Rot12, Boost34, "
                "NegBoost34");
    }
    return e;
}

ThetaS theta_s(double t)
{
    double const at = std::abs(t);
    // log cosh t without overflow for large |t|.
    double const log_cosh
        = at + std::log1p(std::exp(-2 * at)) - std::numbers::ln2;
    // asin(tanh t) == atan(sinh t); the latter keeps cos theta = 1/cosh t
    // accurate once tanh t rounds to 1.
    return {std::atan(std::sinh(t)), -log_cosh};
}

StabilizerElement stabilizer_generator_degenerate(StabilizerFamily family,
                                                  double t)
{
    auto const [theta, s] = theta_s(t);
    StabilizerElement e;
    e.family = family;
    e.parameter = t;
    e.base_point = StabilizerBase::degenerate_orbit().point();
    switch (family)
    {
        case StabilizerFamily::u:
            e.matrix = generator({3, Family::boost, t})
                       * generator({1, Family::rotation, -theta})
                       * generator({2, Family::boost, s});
            break;
        case StabilizerFamily::v:
            e.matrix = generator({1, Family::boost, t})
                       * generator({3, Family::rotation, theta})
                       * generator({2, Family::boost, s});
            break;
        case StabilizerFamily::u_prime:
            e.matrix = u_prime(t);
            break;
        case StabilizerFamily::v_prime:
            e.matrix = v_prime(t);
            break;
        default:
            throw std::invalid_argument(
                "degenerate stabilizer families are U, V, UPrime, VPrime");
    }
    return e;
}

LorentzMatrix u_prime(double x)
{
    double const q = x * x / 2;
    Mat4 m;
    m << 1, x, 0, x,  //
        -x, 1 - q, 0, -q,  //
        0, 0, 1, 0,  //
        x, q, 0, 1 + q;
    return {m, LorentzMatrix::Unchecked{}};
}

LorentzMatrix v_prime(double x)
{
    double const q = x * x / 2;
    Mat4 m;
    m << 1, 0, 0, 0,  //
        0, 1 - q, -x, -q,  //
        0, x, 1, x,  //
        0, q, x, 1 + q;
    return {m, LorentzMatrix::Unchecked{}};
}

Mat4 u_prime_generator()
{
    Mat4 m;
    m << 0, 1, 0, 1,  //
        -1, 0, 0, 0,  //
        0, 0, 0, 0,  //
        1, 0, 0, 0;
    return m;
}

Mat4 v_prime_generator()
{
    Mat4 m;
    m << 0, 0, 0, 0,  //
        0, 0, -1, 0,  //
        0, 1, 0, 1,  //
        0, 0, 1, 0;
    return m;
}

Bivector degenerate_companion()
{
    return e_plus(1) + e_minus(1) - e_plus(3) - e_minus(3);
}

//---------------------------------------------------------------------------//
InvariantMatrix invariant_matrix_A(double a, double b, double c, double d)
{
    InvariantMatrix result;
    result.matrix.col(0) << a, b, c, d;
    result.matrix.col(1) << d, c, b, a;
    result.matrix.col(2) << -c, d, a, -b;
    result.matrix.col(3) << -b, a, d, -c;
    result.det = result.matrix.partialPivLu().determinant();
    return result;
}

double invariant_det_closed_form(double a, double b, double c, double d)
{
    double const m = (a - d) * (a - d) + (b - c) * (b - c);
    double const p = (a + d) * (a + d) + (b + c) * (b + c);
    return -m * p;
}

std::array<Bivector, 2> w_plus_basis()
{
    return {e_plus(2) + e_minus(3), e_minus(2) + e_plus(3)};
}

std::array<Bivector, 2> w_minus_basis()
{
    return {e_plus(2) - e_minus(3), e_minus(2) - e_plus(3)};
}

std::array<Bivector, 2> w0_basis()
{
    auto const t = StabilizerBase::degenerate_orbit().tangent_basis();
    return {t[0], t[1]};
}

std::vector<StabilizerElement>
sampled_stabilizer(StabilizerBase const& base, NegationPolicy policy)
{
    std::vector<StabilizerElement> out;
    for (double p : kSampleParameters)
    {
        if (base.degenerate)
        {
            out.push_back(
                stabilizer_generator_degenerate(StabilizerFamily::u, p));
            out.push_back(
                stabilizer_generator_degenerate(StabilizerFamily::v, p));
            continue;
        }
        out.push_back(stabilizer_generator_neutral(
            StabilizerFamily::rot12, p, base.r, base.epsilon));
        out.push_back(stabilizer_generator_neutral(
            StabilizerFamily::boost34, p, base.r, base.epsilon));
        if (policy == NegationPolicy::include)
        {
            out.push_back(stabilizer_generator_neutral(
                StabilizerFamily::neg_boost34, p, base.r, base.epsilon));
        }
    }
    return out;
}

std::array<Mat4, 2> stabilizer_lie_algebra(StabilizerBase const& base)
{
    if (base.degenerate)
        return {u_prime_generator(), v_prime_generator()};
    return {lie_generator(1, Family::rotation),
            lie_generator(1, Family::boost)};
}

SubspaceLabel classify_invariant_subspace(StabilizerBase const& base,
                                          std::span<Bivector const> span,
                                          ToleranceConfig const& tol,
                                          NegationPolicy policy)
{
    if (span.empty())
        throw std::invalid_argument("empty span");
    double const eps = 10 * tol.rel_tol;

    Basis const vectors = to_columns(span);
    Basis const tangent = orthonormal(base.tangent_basis());
    for (Eigen::Index k = 0; k < vectors.cols(); ++k)
    {
        double const n = vectors.col(k).norm();
        Basis const v = vectors.col(k);
        if (distance_from_span(tangent, v) > eps * std::max(n, 1.0))
        {
            throw std::invalid_argument(
                "span vector is not tangent to the orbit at the base point");
        }
    }

    Eigen::JacobiSVD<Basis> svd(vectors, Eigen::ComputeThinU);
    auto const& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0)
        throw std::invalid_argument("zero-dimensional span");
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > eps * sv[0])
        ++rank;
    Basis const q = svd.matrixU().leftCols(rank);

    auto const invariant_under = [&](Mat6 const& m) {
        Basis const image = m * q;
        double const scale = std::max(1.0, image.norm());
        Basis const r = image - q * (q.transpose() * image);
        return r.norm() <= eps * scale;
    };
    for (auto const& g : sampled_stabilizer(base, policy))
    {
        if (!invariant_under(pushforward_matrix(g.matrix)))
            return SubspaceLabel::not_invariant;
    }
    for (auto const& x : stabilizer_lie_algebra(base))
    {
        if (!invariant_under(pushforward_differential(x)))
            return SubspaceLabel::not_invariant;
    }

    if (rank == 4)
        return SubspaceLabel::whole;

    auto const matches = [&](std::array<Bivector, 2> const& w) {
        return distance_from_span(q, orthonormal(w)) <= eps;
    };
    if (!base.degenerate)
    {
        if (rank == 2 && matches(w_plus_basis()))
            return SubspaceLabel::w_plus;
        if (rank == 2 && matches(w_minus_basis()))
            return SubspaceLabel::w_minus;
    }
    else
    {
        Basis const w0 = orthonormal(w0_basis());
        if (rank == 1 && distance_from_span(w0, q) <= eps)
            return SubspaceLabel::line_in_w0;
        if (rank == 2 && matches(w0_basis()))
            return SubspaceLabel::w0;
        if (rank == 3 && distance_from_span(q, w0) <= eps)
            return SubspaceLabel::contains_w0;
    }
    throw InvariantViolation("invariant subspace of dimension "
                             + std::to_string(rank)
                             + " outside the known lattice");
}

}  // namespace lbo
