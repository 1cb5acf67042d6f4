// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/minkowski.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

#include "lbo/errors.hpp"

namespace lbo {
namespace {

// (row, col) plane of each generator, 0-based.
struct Plane
{
    int i;
    int j;
};

constexpr Plane rotation_plane(int axis)
{
    switch (axis)
    {
        case 1: return {0, 1};
        case 2: return {0, 2};
        default: return {1, 2};
    }
}

constexpr Plane boost_plane(int axis)
{
    switch (axis)
    {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {0, 3};
    }
}

void check_axis(int axis)
{
    if (axis < 1 || axis > 3)
    {
        throw std::invalid_argument("generator axis must be 1, 2 or 3, got "
                                    + std::to_string(axis));
    }
}

}  // namespace

Mat4 const& minkowski_metric()
{
    static Mat4 const eta = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
    return eta;
}

Vec4 basis_vector(int i)
{
    if (i < 1 || i > 4)
    {
        throw std::invalid_argument("basis index must be in 1..4");
    }
    Vec4 e = Vec4::Zero();
    e[i - 1] = 1;
    return e;
}

double minkowski_inner(Vec4 const& x, Vec4 const& y)
{
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3];
}

//---------------------------------------------------------------------------//
LorentzMatrix LorentzMatrix::checked(Mat4 const& m, ToleranceConfig const& tol)
{
    if (!is_proper_lorentz(m, tol))
    {
        throw NotLorentzError(
            "matrix is not a proper Lorentz transformation (metric defect "
            + std::to_string(lorentz_defect(m)) + ", det "
            + std::to_string(m.determinant()) + ")");
    }
    return {m, Unchecked{}};
}

LorentzMatrix LorentzMatrix::inverse() const
{
    Mat4 const& eta = minkowski_metric();
    return {eta * m_.transpose() * eta, Unchecked{}};
}

GeneratorKind::GeneratorKind(int axis, Family family, double parameter)
    : axis(axis), family(family), parameter(parameter)
{
    check_axis(axis);
}

LorentzMatrix generator(GeneratorKind const& g)
{
    check_axis(g.axis);
    Mat4 p = Mat4::Identity();
    double const s = g.parameter;
    if (g.family == Family::rotation)
    {
        auto [i, j] = rotation_plane(g.axis);
        p(i, i) = std::cos(s);
        p(i, j) = -std::sin(s);
        p(j, i) = std::sin(s);
        p(j, j) = std::cos(s);
    }
    else
    {
        auto [i, j] = boost_plane(g.axis);
        p(i, i) = std::cosh(s);
        p(i, j) = std::sinh(s);
        p(j, i) = std::sinh(s);
        p(j, j) = std::cosh(s);
    }
    return {p, LorentzMatrix::Unchecked{}};
}

double lorentz_defect(Mat4 const& p)
{
    Mat4 const& eta = minkowski_metric();
    return (p.transpose() * eta * p - eta).cwiseAbs().maxCoeff();
}

bool is_proper_lorentz(Mat4 const& p, ToleranceConfig const& tol)
{
    if (!p.allFinite())
        return false;
    return lorentz_defect(p) <= tol.abs_tol
           && std::abs(p.determinant() - 1) <= tol.abs_tol;
}

Mat4 lie_generator(int axis, Family family)
{
    check_axis(axis);
    Mat4 x = Mat4::Zero();
    if (family == Family::rotation)
    {
        auto [i, j] = rotation_plane(axis);
        x(i, j) = -1;
        x(j, i) = 1;
    }
    else
    {
        auto [i, j] = boost_plane(axis);
        x(i, j) = 1;
        x(j, i) = 1;
    }
    return x;
}

//---------------------------------------------------------------------------//
std::vector<GeneratorKind> random_word(SplitMix64& rng, int word_length)
{
    if (word_length < 1)
    {
        throw std::invalid_argument("word length must be at least 1");
    }
    std::vector<GeneratorKind> word;
    word.reserve(word_length);
    for (int n = 0; n < word_length; ++n)
    {
        int const axis = 1 + static_cast<int>(rng.below(3));
        Family const family = rng.below(2) == 0 ? Family::rotation
                                                : Family::boost;
        double const parameter
            = family == Family::rotation
                  ? rng.uniform(-std::numbers::pi, std::numbers::pi)
                  : rng.uniform(-1.0, 1.0);
        word.emplace_back(axis, family, parameter);
    }
    return word;
}

LorentzMatrix compose(std::span<GeneratorKind const> word)
{
    LorentzMatrix result;
    for (auto const& g : word)
        result = result * generator(g);
    return result;
}

LorentzMatrix random_proper_lorentz(SplitMix64& rng, int word_length)
{
    auto const word = random_word(rng, word_length);
    return compose(word);
}

LorentzMatrix random_spatial_rotation(SplitMix64& rng, int word_length)
{
    LorentzMatrix result;
    for (int n = 0; n < word_length; ++n)
    {
        int const axis = 1 + static_cast<int>(rng.below(3));
        double const angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
        result = result * generator({axis, Family::rotation, angle});
    }
    return result;
}

}  // namespace lbo
