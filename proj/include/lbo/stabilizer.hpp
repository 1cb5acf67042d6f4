// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <vector>

#include "lbo/orbit.hpp"

namespace lbo {

enum class StabilizerFamily
{
    rot12,  //!< P_{1,1}(theta)
    boost34,  //!< P_{1,2}(t)
    neg_boost34,  //!< -P_{1,2}(t), outside the identity component
    u,  //!< U_t = P_{3,2}(t) P_{1,1}(-theta(t)) P_{2,2}(s(t))
    v,  //!< V_t = P_{1,2}(t) P_{3,1}(theta(t)) P_{2,2}(s(t))
    u_prime,  //!< U'_x, with U'_{tanh t} = U_t
    v_prime,  //!< V'_x, with V'_{tanh t} = V_t
};

char const* to_string(StabilizerFamily family);

/*!
 * The point whose stabilizer is studied: r (w12 + epsilon w34) on a
 * neutral orbit, or sqrt(2)(w23 + w34) (phi = pi/2) on the degenerate one.
 */
struct StabilizerBase
{
    bool degenerate = false;
    double r = 1;
    int epsilon = +1;

    static StabilizerBase neutral(double r, int epsilon);
    static StabilizerBase degenerate_orbit();

    Bivector point() const;
    //! E±2, E±3 (neutral) or X+, X-, Y+, Y- at phi = pi/2 (degenerate).
    std::array<Bivector, 4> tangent_basis() const;
};

struct StabilizerElement
{
    LorentzMatrix matrix;
    StabilizerFamily family = StabilizerFamily::rot12;
    double parameter = 0;
    Bivector base_point;

    //! |T_matrix(base_point) - base_point|.
    double fixing_residual() const;
};

//! Rot12, Boost34 or NegBoost34 at r (w12 + epsilon w34).
StabilizerElement stabilizer_generator_neutral(StabilizerFamily family,
                                               double parameter, double r = 1,
                                               int epsilon = +1);

struct ThetaS
{
    double theta = 0;  //!< asin(tanh t)
    double s = 0;  //!< -log(cosh t)
};

ThetaS theta_s(double t);

//! U_t or V_t at the degenerate base point.
StabilizerElement stabilizer_generator_degenerate(StabilizerFamily family,
                                                  double t);

LorentzMatrix u_prime(double x);
LorentzMatrix v_prime(double x);

//! d/dx|_0 U'_x and V'_x; nilpotent of order three.
Mat4 u_prime_generator();
Mat4 v_prime_generator();

//! Omega' = E+1 + E-1 - E+3 - E-3; with the base point it spans W0.
Bivector degenerate_companion();

//---------------------------------------------------------------------------//
// Invariant subspaces
//---------------------------------------------------------------------------//

/*!
 * Columns (a,b,c,d), (d,c,b,a), (-c,d,a,-b), (-b,a,d,-c): the coefficients
 * of T_{P11(theta) P12(t)}(a E+2 + b E-2 + c E+3 + d E-3) against
 * cos theta cosh t, cos theta sinh t, sin theta cosh t, sin theta sinh t.
 */
struct InvariantMatrix
{
    Mat4 matrix;
    double det = 0;  //!< computed by LU factorization
};

InvariantMatrix invariant_matrix_A(double a, double b, double c, double d);

//! -((a-d)^2 + (b-c)^2)((a+d)^2 + (b+c)^2).
double invariant_det_closed_form(double a, double b, double c, double d);

enum class SubspaceLabel
{
    whole,
    w_plus,
    w_minus,
    w0,
    contains_w0,
    line_in_w0,
    not_invariant,
};

char const* to_string(SubspaceLabel label);

enum class NegationPolicy
{
    include,  //!< sample -P_{1,2} alongside P_{1,2}
    exclude,
};

//! W+ = span{E+2 + E-3, E-2 + E+3}, W- = span{E+2 - E-3, E-2 - E+3}.
std::array<Bivector, 2> w_plus_basis();
std::array<Bivector, 2> w_minus_basis();
//! W0 = span{X+, X-} at phi = pi/2.
std::array<Bivector, 2> w0_basis();

//! Group elements sampled at parameters {-0.9, -0.3, 0.3, 0.9}.
std::vector<StabilizerElement>
sampled_stabilizer(StabilizerBase const& base,
                   NegationPolicy policy = NegationPolicy::include);

//! Lie-algebra generators of the stabilizer (two per base).
std::array<Mat4, 2> stabilizer_lie_algebra(StabilizerBase const& base);

/*!
 * Label the subspace spanned by the given tangent vectors.
 *
 * Invariance is tested against every sampled element and both Lie-algebra
 * generators using Euclidean projections on coefficient vectors, with
 * residuals compared to 10 * rel_tol. Throws std::invalid_argument for an
 * empty/zero span or vectors not tangent to the orbit at the base point,
 * and InvariantViolation if an invariant subspace falls outside the known
 * lattice.
 */
SubspaceLabel
classify_invariant_subspace(StabilizerBase const& base,
                            std::span<Bivector const> span,
                            ToleranceConfig const& tol,
                            NegationPolicy policy = NegationPolicy::include);

}  // namespace lbo
