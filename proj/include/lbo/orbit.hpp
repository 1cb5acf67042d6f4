// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "lbo/wedge.hpp"

namespace lbo {

using Vec3 = Eigen::Vector3d;

//---------------------------------------------------------------------------//
// Canonical form
//---------------------------------------------------------------------------//

//! Space part a = (c23, -c13, c12) and time part b = (c14, c24, c34).
struct SplitAB
{
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();
};

SplitAB split_ab(Bivector const& omega);

//! r((cos phi) w12 + (sin phi) w23 + w34).
Bivector normal_form(double r, double phi);

//! normal_form(sqrt(2), phi): the base point used for tangent frames.
Bivector reference_point(double phi);

/*!
 * Reduction of a light-cone bivector to r((cos phi) w'12 + (sin phi) w'23
 * + w'34) in an adapted basis e' = basis_witness.
 *
 * basis_witness is diag(U, 1) with U in SO(3), so it is a proper Lorentz
 * matrix and the reconstruction is T_{e'}(normal_form(r, phi)).
 */
struct CanonicalForm
{
    double r = 0;
    double phi = 0;
    std::array<Vec4, 4> basis_witness;

    LorentzMatrix witness_matrix() const;
    Bivector reconstruct() const;
};

//! Throws NotInLightConeError off the light cone.
CanonicalForm canonical_form(Bivector const& omega, ToleranceConfig const& tol);

//---------------------------------------------------------------------------//
// Orbit classification
//---------------------------------------------------------------------------//

enum class OrbitKind
{
    neutral_plus,
    neutral_minus,
    degenerate,
};

char const* to_string(OrbitKind kind);

struct OrbitClass
{
    OrbitKind kind = OrbitKind::degenerate;
    double r0 = 0;  //!< sqrt|pfaffian|; 0 when degenerate
    int epsilon = 0;  //!< +1 / -1 for neutral orbits, 0 when degenerate

    bool is_neutral() const { return kind != OrbitKind::degenerate; }
};

/*!
 * Degenerate iff |pfaffian| <= abs_tol * max(A, 1); otherwise neutral with
 * the sign of the pfaffian. Throws NotInLightConeError off the light cone.
 */
OrbitClass orbit_class(Bivector const& omega, ToleranceConfig const& tol);

struct CanonicalRepresentative
{
    Bivector point;  //!< r0 (w12 + epsilon w34)
    LorentzMatrix witness;  //!< T_witness(omega) == point
    double r0 = 0;
    int epsilon = 0;
    double theta = 0;  //!< rotation angle of P_{2,1} used
    double rapidity = 0;  //!< boost parameter of P_{2,2} used
};

/*!
 * The unique orbit element of the form r0 (w12 + epsilon w34).
 *
 * Throws DegenerateOrbitError on the degenerate orbit, which contains no
 * such element, and NotInLightConeError off the light cone.
 */
CanonicalRepresentative
canonical_representative(Bivector const& omega, ToleranceConfig const& tol);

//---------------------------------------------------------------------------//
// Tangent spaces
//---------------------------------------------------------------------------//

/*!
 * The six derivatives d/ds|_0 T_{P_{k,l}(s)}(base), ordered
 * (1,rot), (1,boost), (2,rot), (2,boost), (3,rot), (3,boost).
 * Their span is the tangent space of the orbit through base.
 */
std::array<Bivector, 6> orbit_tangent_generators(Bivector const& base);

//! Frame X+, X-, Y+, Y- of the orbit tangent space at reference_point(phi).
struct TangentFrame
{
    Bivector x_plus;
    Bivector x_minus;
    Bivector y_plus;
    Bivector y_minus;
    Bivector base_point;

    std::array<Bivector, 4> vectors() const
    {
        return {x_plus, x_minus, y_plus, y_minus};
    }
};

/*!
 * X± = (sin phi) E±1 ∓ (cos phi) E±3 - E∓3, Y± = E±2.
 */
TangentFrame tangent_frame(double phi);

//! N± = -(cos phi) E±1 ∓ (sin phi) E±3 ± E∓1, normal to the orbit.
std::array<Bivector, 2> normal_vectors(double phi);

//! Gram matrix of (X+, X-, Y+, Y-) under the induced metric.
Mat4 tangent_gram(double phi);

struct Signature
{
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(Signature const&, Signature const&) = default;
};

//! Inertia of a symmetric matrix; |eigenvalue| <= tol * max(1, |G|) is zero.
Signature signature(Mat4 const& symmetric, double tol);

struct OrthonormalFrame
{
    Bivector x1;  //!< space-like
    Bivector x2;  //!< time-like
    Bivector y1;  //!< w13, space-like
    Bivector y2;  //!< w42, time-like

    std::array<Bivector, 4> vectors() const { return {x1, x2, y1, y2}; }
};

/*!
 * Pseudo-orthonormal tangent basis at reference_point(phi).
 * Throws std::domain_error when |cos phi| <= abs_tol.
 */
OrthonormalFrame
orthonormal_tangent_frame(double phi, ToleranceConfig const& tol);

//---------------------------------------------------------------------------//
// The surface S = { T_{P21(theta) P22(t)}(reference_point(phi)) }
//---------------------------------------------------------------------------//

//! P_{2,1}(theta) P_{2,2}(t); the two factors commute.
LorentzMatrix surface_map(double theta, double t);

Bivector surface_point(double phi, double theta, double t);

/*!
 * Finite-difference check that the transported frame is parallel along S.
 *
 * Neutral branch (|cos phi| > abs_tol): derivatives of X~±, Y~± must have
 * no tangential component, and the derivatives of X~± must equal the
 * transported normals T(N±) (theta) and T(±N∓) (t).
 *
 * Degenerate branch: derivatives of Y~± vanish, derivatives of X~± are
 * null and lie in span{X~+, X~-}. Only the Y-block is projected since the
 * induced metric is singular on the X-block.
 */
struct FrameCheckReport
{
    bool degenerate = false;
    //! Neutral: max norm of the tangential parts of all 8 derivatives.
    //! Degenerate: max Y-block component of the X~ derivatives.
    double tangential_residual = 0;
    //! Neutral: max |dX~ - T(N)| over the four X~ derivatives.
    double normal_mismatch = 0;
    //! Degenerate: max |h^(dX~, dX~)|.
    double null_residual = 0;
    //! Degenerate: max distance of dX~ from span{X~+, X~-}.
    double span_residual = 0;
    //! Max norm of the Y~ derivatives (zero in both branches).
    double y_derivative = 0;

    //! Thresholds 1e-4 for first-order residuals, 1e-6 for null/vanishing.
    bool passed(double fd_tol = 1e-4, double null_tol = 1e-6) const;
};

FrameCheckReport parallel_frame_check(double phi, double theta, double t,
                                      ToleranceConfig const& tol);

//---------------------------------------------------------------------------//
// Normal-form search on S
//---------------------------------------------------------------------------//

struct NormalFormHit
{
    double theta = 0;  //!< in [-pi, pi)
    double t = 0;
    double coefficient = 0;  //!< signed c12 of the hit
    int epsilon = 0;  //!< sign(c34 / c12)
};

/*!
 * Find every (theta, t) in [-pi, pi) x [-t_max, t_max] where
 * surface_point(phi, theta, t) has vanishing w14 and w23 coefficients.
 *
 * Newton iteration is started from each node of a grid x grid lattice;
 * converged roots are deduplicated. Used to confirm that S meets the
 * pattern r (w12 + epsilon w34) for a single epsilon and |r|.
 */
std::vector<NormalFormHit>
scan_normal_form_elements(double phi, int grid, double t_max);

}  // namespace lbo
