// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "lbo/minkowski.hpp"

namespace lbo {

using Coeffs6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

//---------------------------------------------------------------------------//
/*!
 * An element of the exterior square of Minkowski 4-space.
 *
 * Coefficients are stored in lexicographic order over omega_ij = e_i ^ e_j:
 * (c12, c13, c14, c23, c24, c34).
 */
struct Bivector
{
    Coeffs6 c = Coeffs6::Zero();

    Bivector() = default;
    explicit Bivector(Coeffs6 const& coeffs) : c(coeffs) {}
    Bivector(double c12, double c13, double c14, double c23, double c24,
             double c34)
    {
        c << c12, c13, c14, c23, c24, c34;
    }

    //! omega_ij for i, j in 1..4; omega_ji = -omega_ij, omega_ii = 0.
    static Bivector omega(int i, int j);

    //! Coefficient of omega_ij with the same sign convention.
    double coeff(int i, int j) const;

    double c12() const { return c[0]; }
    double c13() const { return c[1]; }
    double c14() const { return c[2]; }
    double c23() const { return c[3]; }
    double c24() const { return c[4]; }
    double c34() const { return c[5]; }

    //! Euclidean norm of the coefficient vector.
    double norm() const { return c.norm(); }

    Bivector& operator+=(Bivector const& o)
    {
        c += o.c;
        return *this;
    }
    Bivector& operator-=(Bivector const& o)
    {
        c -= o.c;
        return *this;
    }
    Bivector& operator*=(double s)
    {
        c *= s;
        return *this;
    }
};

inline Bivector operator+(Bivector a, Bivector const& b) { return a += b; }
inline Bivector operator-(Bivector a, Bivector const& b) { return a -= b; }
inline Bivector operator-(Bivector a) { return a *= -1.0; }
inline Bivector operator*(double s, Bivector a) { return a *= s; }
inline Bivector operator*(Bivector a, double s) { return a *= s; }

//---------------------------------------------------------------------------//
/*!
 * Coefficients over the null basis
 * (E+1, E+2, E+3, E-1, E-2, E-3), where
 * E±1 = (w12 ± w34)/√2, E±2 = (w13 ± w42)/√2, E±3 = (w14 ± w23)/√2.
 */
struct EBivector
{
    Coeffs6 c = Coeffs6::Zero();

    double plus(int i) const { return c[i - 1]; }
    double minus(int i) const { return c[2 + i]; }
};

enum class Duality
{
    plus = +1,
    minus = -1,
};

//! E_{±,i} (i in 1..3) expressed in the omega basis.
Bivector e_basis(Duality sign, int i);

//! Shorthands for e_basis(Duality::plus, i) / e_basis(Duality::minus, i).
Bivector e_plus(int i);
Bivector e_minus(int i);

//---------------------------------------------------------------------------//
// Metric and invariants
//---------------------------------------------------------------------------//

//! x ^ y: c_ij = x_i y_j - x_j y_i.
Bivector wedge(Vec4 const& x, Vec4 const& y);

//! Diagonal of the induced metric on omega_ij: (+, +, -, +, -, -).
Coeffs6 const& hat_signs();

//! Induced metric: h^(x^y, u^v) = h(x,u) h(y,v) - h(x,v) h(y,u).
double hat_inner(Bivector const& lhs, Bivector const& rhs);

struct LightConeQuantities
{
    double A = 0;  //!< c12^2 + c13^2 + c23^2
    double B = 0;  //!< c14^2 + c24^2 + c34^2
};

LightConeQuantities quantities_AB(Bivector const& omega);

//! |A - B| <= rel_tol * max(A, B, 1) and A > abs_tol.
bool in_light_cone(Bivector const& omega, ToleranceConfig const& tol);

//! c12 c34 - c13 c24 + c14 c23; invariant under SO(3,1).
double pfaffian(Bivector const& omega);

//---------------------------------------------------------------------------//
// Group action
//---------------------------------------------------------------------------//

/*!
 * Matrix of the induced action on coefficient vectors: column (kl) holds
 * P e_k ^ P e_l, i.e. the 2x2 minors of P.
 */
Mat6 pushforward_matrix(LorentzMatrix const& p);

//! T_P(omega) = sum c_ij P e_i ^ P e_j.
Bivector pushforward(LorentzMatrix const& p, Bivector const& omega);

//! As above for a raw matrix; throws NotLorentzError if p is not proper.
Bivector pushforward(Mat4 const& p, Bivector const& omega,
                     ToleranceConfig const& tol);

/*!
 * Derivative of pushforward_matrix along a Lie-algebra element:
 * x ^ y -> X x ^ y + x ^ X y.
 */
Mat6 pushforward_differential(Mat4 const& x);

//---------------------------------------------------------------------------//
// Null basis
//---------------------------------------------------------------------------//

//! Columns are E+1, E+2, E+3, E-1, E-2, E-3 in omega coordinates.
Mat6 const& e_basis_matrix();

EBivector to_e_basis(Bivector const& omega);
Bivector from_e_basis(EBivector const& e);

}  // namespace lbo
