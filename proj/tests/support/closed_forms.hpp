// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include <Eigen/Core>

// Displayed closed forms, written out term by term. Vectors are coordinates
// in the null basis (E+1, E+2, E+3, E-1, E-2, E-3) unless stated otherwise.
namespace lbo::closed {

using V6 = Eigen::Matrix<double, 6, 1>;
using M6 = Eigen::Matrix<double, 6, 6>;

V6 ep(int i);
V6 em(int i);

//! Column j holds the image of the j-th null basis vector under P_{k,l}.
M6 generator_action(int axis, bool boost, double parameter);

//! T_{P_{k,l}}(Omega) for Omega = sqrt(2)((cos phi) w12 + (sin phi) w23 + w34).
V6 transported_base(int axis, bool boost, double phi, double parameter);

//! The six derivatives at parameter 0, ordered as the generators.
std::array<V6, 6> base_derivatives(double phi);

//! (1/sqrt(2)) T_{P21} T_{P22}(Omega) in omega coordinates
//! (c12, c13, c14, c23, c24, c34).
V6 surface_omega(double phi, double theta, double t);

//! T_{P21}(X±) and T_{P22}(X±); plus selects X+.
V6 rotated_x(bool plus, double phi, double theta);
V6 boosted_x(bool plus, double phi, double t);

//! T_{U_t}(E±2) and T_{V_t}(E±2) at the degenerate base point.
V6 u_on_e2(bool plus, double t);
V6 v_on_e2(bool plus, double t);

}  // namespace lbo::closed
