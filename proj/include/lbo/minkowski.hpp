// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "lbo/rng.hpp"
#include "lbo/tolerance.hpp"

namespace lbo {

//! A vector of Minkowski 4-space; components 0..2 space-like, 3 time-like.
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

//! The metric eta = diag(1, 1, 1, -1).
Mat4 const& minkowski_metric();

//! Standard basis vector e_i, i in 1..4.
Vec4 basis_vector(int i);

//! h(x, y) = x1 y1 + x2 y2 + x3 y3 - x4 y4.
double minkowski_inner(Vec4 const& x, Vec4 const& y);

//---------------------------------------------------------------------------//
/*!
 * A 4x4 matrix in the proper Lorentz group SO(3,1).
 *
 * Construction from an arbitrary matrix goes through checked(), which
 * enforces the membership test. Products, negation and inverses of members
 * are members, so they skip the check. The Unchecked tag is for closed-form
 * group elements whose entries overflow the absolute membership tolerance
 * (large boosts).
 */
class LorentzMatrix
{
  public:
    struct Unchecked
    {
    };

    LorentzMatrix() : m_(Mat4::Identity()) {}
    LorentzMatrix(Mat4 const& m, Unchecked) : m_(m) {}

    //! Throws NotLorentzError if m fails is_proper_lorentz.
    static LorentzMatrix checked(Mat4 const& m, ToleranceConfig const& tol);

    static LorentzMatrix identity() { return {}; }

    Mat4 const& matrix() const { return m_; }
    double operator()(int row, int col) const { return m_(row, col); }

    Vec4 operator*(Vec4 const& x) const { return m_ * x; }
    LorentzMatrix operator*(LorentzMatrix const& other) const
    {
        return {m_ * other.m_, Unchecked{}};
    }

    //! -P; still proper since det(-P) = det P in four dimensions.
    LorentzMatrix operator-() const { return {-m_, Unchecked{}}; }

    //! P^{-1} = eta P^T eta.
    LorentzMatrix inverse() const;

  private:
    Mat4 m_;
};

//---------------------------------------------------------------------------//
enum class Family
{
    rotation,  //!< P_{k,1}: rotation by theta
    boost,  //!< P_{k,2}: boost with rapidity t
};

/*!
 * One of the six one-parameter families P_{k,l} with its parameter.
 *
 * Axis k selects the plane: rotations act on (e1,e2), (e1,e3), (e2,e3) for
 * k = 1, 2, 3; boosts mix e4 with e3, e2, e1 for k = 1, 2, 3.
 */
struct GeneratorKind
{
    int axis = 1;
    Family family = Family::rotation;
    double parameter = 0;

    GeneratorKind() = default;
    //! Throws std::invalid_argument unless axis is in 1..3.
    GeneratorKind(int axis, Family family, double parameter);
};

//! The matrix P_{k,l} at the given parameter.
LorentzMatrix generator(GeneratorKind const& g);

//! Membership: |P^T eta P - eta|_max <= abs_tol and |det P - 1| <= abs_tol.
bool is_proper_lorentz(Mat4 const& p, ToleranceConfig const& tol);

//! max |P^T eta P - eta| entry, for diagnostics.
double lorentz_defect(Mat4 const& p);

//! d/ds|_0 of generator(axis, family, s); satisfies X^T eta + eta X = 0.
Mat4 lie_generator(int axis, Family family);

//---------------------------------------------------------------------------//
// Sampling
//---------------------------------------------------------------------------//

/*!
 * Draw word_length generator kinds: (k, l) uniform, rotation angles uniform
 * in [-pi, pi], rapidities uniform in [-1, 1].
 */
std::vector<GeneratorKind> random_word(SplitMix64& rng, int word_length);

//! Ordered product word[0] * word[1] * ... .
LorentzMatrix compose(std::span<GeneratorKind const> word);

//! compose(random_word(rng, word_length)); word_length must be >= 1.
LorentzMatrix random_proper_lorentz(SplitMix64& rng, int word_length);

//! Random rotation diag(U, 1) with U in SO(3), built from rotation words.
LorentzMatrix random_spatial_rotation(SplitMix64& rng, int word_length = 6);

}  // namespace lbo
