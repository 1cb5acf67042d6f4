// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "lbo/wedge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lbo/errors.hpp"

namespace lbo {
namespace {

struct Pair
{
    int i;
    int j;
};

// 0-based index pairs in storage order.
constexpr std::array<Pair, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int pair_index(int i, int j)
{
    // i < j, 0-based
    for (int k = 0; k < 6; ++k)
    {
        if (kPairs[k].i == i && kPairs[k].j == j)
            return k;
    }
    return -1;
}

void check_index(int i)
{
    if (i < 1 || i > 4)
        throw std::invalid_argument("omega index must be in 1..4");
}

}  // namespace

Bivector Bivector::omega(int i, int j)
{
    check_index(i);
    check_index(j);
    Bivector result;
    if (i == j)
        return result;
    if (i < j)
        result.c[pair_index(i - 1, j - 1)] = 1;
    else
        result.c[pair_index(j - 1, i - 1)] = -1;
    return result;
}

double Bivector::coeff(int i, int j) const
{
    check_index(i);
    check_index(j);
    if (i == j)
        return 0;
    return i < j ? c[pair_index(i - 1, j - 1)] : -c[pair_index(j - 1, i - 1)];
}

Bivector e_basis(Duality sign, int i)
{
    if (i < 1 || i > 3)
        throw std::invalid_argument("E-basis index must be in 1..3");
    double const s = static_cast<double>(static_cast<int>(sign));
    double const k = 1 / std::numbers::sqrt2;
    switch (i)
    {
        case 1:
            return k * (Bivector::omega(1, 2) + s * Bivector::omega(3, 4));
        case 2:
            return k * (Bivector::omega(1, 3) + s * Bivector::omega(4, 2));
        default:
            return k * (Bivector::omega(1, 4) + s * Bivector::omega(2, 3));
    }
}

Bivector e_plus(int i) { return e_basis(Duality::plus, i); }
Bivector e_minus(int i) { return e_basis(Duality::minus, i); }

//---------------------------------------------------------------------------//
Bivector wedge(Vec4 const& x, Vec4 const& y)
{
    Bivector result;
    for (int k = 0; k < 6; ++k)
    {
        auto [i, j] = kPairs[k];
        result.c[k] = x[i] * y[j] - x[j] * y[i];
    }
    return result;
}

Coeffs6 const& hat_signs()
{
    static Coeffs6 const signs = [] {
        Coeffs6 s;
        s << 1, 1, -1, 1, -1, -1;
        return s;
    }();
    return signs;
}

double hat_inner(Bivector const& lhs, Bivector const& rhs)
{
    return (lhs.c.array() * hat_signs().array() * rhs.c.array()).sum();
}

LightConeQuantities quantities_AB(Bivector const& omega)
{
    auto const& c = omega.c;
    return {c[0] * c[0] + c[1] * c[1] + c[3] * c[3],
            c[2] * c[2] + c[4] * c[4] + c[5] * c[5]};
}

bool in_light_cone(Bivector const& omega, ToleranceConfig const& tol)
{
    if (!omega.c.allFinite())
        return false;
    auto const [a, b] = quantities_AB(omega);
    return std::abs(a - b) <= tol.rel_tol * std::max({a, b, 1.0})
           && a > tol.abs_tol;
}

double pfaffian(Bivector const& omega)
{
    return omega.c12() * omega.c34() - omega.c13() * omega.c24()
           + omega.c14() * omega.c23();
}

//---------------------------------------------------------------------------//
Mat6 pushforward_matrix(LorentzMatrix const& p)
{
    Mat6 m;
    for (int row = 0; row < 6; ++row)
    {
        auto [i, j] = kPairs[row];
        for (int col = 0; col < 6; ++col)
        {
            auto [k, l] = kPairs[col];
            m(row, col) = p(i, k) * p(j, l) - p(i, l) * p(j, k);
        }
    }
    return m;
}

Bivector pushforward(LorentzMatrix const& p, Bivector const& omega)
{
    return Bivector(pushforward_matrix(p) * omega.c);
}

Bivector pushforward(Mat4 const& p, Bivector const& omega,
                     ToleranceConfig const& tol)
{
    return pushforward(LorentzMatrix::checked(p, tol), omega);
}

Mat6 pushforward_differential(Mat4 const& x)
{
    Mat6 m;
    for (int col = 0; col < 6; ++col)
    {
        auto [k, l] = kPairs[col];
        Vec4 const ek = Vec4::Unit(k);
        Vec4 const el = Vec4::Unit(l);
        m.col(col) = (wedge(x.col(k), el) + wedge(ek, x.col(l))).c;
    }
    return m;
}

//---------------------------------------------------------------------------//
Mat6 const& e_basis_matrix()
{
    static Mat6 const m = [] {
        Mat6 result;
        for (int i = 1; i <= 3; ++i)
        {
            result.col(i - 1) = e_plus(i).c;
            result.col(i + 2) = e_minus(i).c;
        }
        return result;
    }();
    return m;
}

EBivector to_e_basis(Bivector const& omega)
{
    // The change of basis is orthogonal, so its inverse is its transpose.
    EBivector e;
    e.c = e_basis_matrix().transpose() * omega.c;
    return e;
}

Bivector from_e_basis(EBivector const& e)
{
    return Bivector(e_basis_matrix() * e.c);
}

}  // namespace lbo
