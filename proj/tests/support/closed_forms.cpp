// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "closed_forms.hpp"

#include <cmath>
#include <numbers>

namespace lbo::closed {
namespace {

// E+i for plus, E-i otherwise.
V6 e(bool plus, int i)
{
    return plus ? ep(i) : em(i);
}

// Null-basis column index of E±i.
int col(bool plus, int i)
{
    return plus ? i - 1 : i + 2;
}

}  // namespace

V6 ep(int i)
{
    return V6::Unit(i - 1);
}

V6 em(int i)
{
    return V6::Unit(i + 2);
}

M6 generator_action(int axis, bool boost, double s)
{
    double const c = std::cos(s);
    double const sn = std::sin(s);
    double const ch = std::cosh(s);
    double const sh = std::sinh(s);
    M6 m = M6::Identity();
    for (bool plus : {true, false})
    {
        double const pm = plus ? 1 : -1;
        if (axis == 1 && !boost)
        {
            m.col(col(plus, 2)) = c * e(plus, 2) + pm * sn * e(plus, 3);
            m.col(col(plus, 3)) = -pm * sn * e(plus, 2) + c * e(plus, 3);
        }
        else if (axis == 1)
        {
            m.col(col(plus, 2)) = ch * e(plus, 2) + sh * e(!plus, 3);
            m.col(col(!plus, 3)) = sh * e(plus, 2) + ch * e(!plus, 3);
        }
        else if (axis == 2 && !boost)
        {
            m.col(col(plus, 1)) = c * e(plus, 1) - pm * sn * e(plus, 3);
            m.col(col(plus, 3)) = pm * sn * e(plus, 1) + c * e(plus, 3);
        }
        else if (axis == 2)
        {
            m.col(col(plus, 1)) = ch * e(plus, 1) + sh * e(!plus, 3);
            m.col(col(!plus, 3)) = sh * e(plus, 1) + ch * e(!plus, 3);
        }
        else if (!boost)
        {
            m.col(col(plus, 1)) = c * e(plus, 1) + sn * e(plus, 2);
            m.col(col(plus, 2)) = -sn * e(plus, 1) + c * e(plus, 2);
        }
        else
        {
            m.col(col(plus, 1)) = ch * e(plus, 1) - pm * sh * e(!plus, 2);
            m.col(col(!plus, 2)) = -pm * sh * e(plus, 1) + ch * e(!plus, 2);
        }
    }
    return m;
}

V6 transported_base(int axis, bool boost, double phi, double s)
{
    double const cp = std::cos(phi);
    double const sp = std::sin(phi);
    double const c = std::cos(s);
    double const sn = std::sin(s);
    double const ch = std::cosh(s);
    double const sh = std::sinh(s);
    if (axis == 1 && !boost)
    {
        return (cp + 1) * ep(1) + (cp - 1) * em(1) - sp * sn * (ep(2) + em(2))
               + sp * c * (ep(3) - em(3));
    }
    if (axis == 1)
    {
        return (cp + 1) * ep(1) + (cp - 1) * em(1) - sp * sh * (ep(2) - em(2))
               + sp * ch * (ep(3) - em(3));
    }
    if (axis == 2 && !boost)
    {
        double const cd = std::cos(phi - s);
        double const sd = std::sin(phi - s);
        return (cd + c) * ep(1) + (cd - c) * em(1) + (sd - sn) * ep(3)
               - (sd + sn) * em(3);
    }
    if (axis == 2)
    {
        return ((cp + 1) * ch - sp * sh) * ep(1)
               + ((cp - 1) * ch + sp * sh) * em(1)
               + ((cp - 1) * sh + sp * ch) * ep(3)
               + ((cp + 1) * sh - sp * ch) * em(3);
    }
    if (!boost)
    {
        return (cp + 1) * c * ep(1) + (cp - 1) * c * em(1)
               + (cp + 1) * sn * ep(2) + (cp - 1) * sn * em(2)
               + sp * (ep(3) - em(3));
    }
    return (cp + 1) * ch * ep(1) + (cp - 1) * ch * em(1)
           + (cp - 1) * sh * ep(2) - (cp + 1) * sh * em(2)
           + sp * (ep(3) - em(3));
}

std::array<V6, 6> base_derivatives(double phi)
{
    double const cp = std::cos(phi);
    double const sp = std::sin(phi);
    return {
        -sp * (ep(2) + em(2)),
        -sp * (ep(2) - em(2)),
        sp * (ep(1) + em(1)) - (cp + 1) * ep(3) + (cp - 1) * em(3),
        -sp * (ep(1) - em(1)) + (cp - 1) * ep(3) + (cp + 1) * em(3),
        (cp + 1) * ep(2) + (cp - 1) * em(2),
        (cp - 1) * ep(2) - (cp + 1) * em(2),
    };
}

V6 surface_omega(double phi, double theta, double t)
{
    double const cd = std::cos(phi - theta);
    double const sd = std::sin(phi - theta);
    double const c = std::cos(theta);
    double const s = std::sin(theta);
    double const ch = std::cosh(t);
    double const sh = std::sinh(t);
    V6 v = V6::Zero();
    v[0] = cd * ch - s * sh;
    v[5] = -sd * sh + c * ch;
    v[2] = cd * sh - s * ch;
    v[3] = sd * ch - c * sh;
    return v;
}

V6 rotated_x(bool plus, double phi, double theta)
{
    double const pm = plus ? 1 : -1;
    return std::sin(phi - theta) * e(plus, 1)
           - pm * std::cos(phi - theta) * e(plus, 3)
           + pm * std::sin(theta) * e(!plus, 1)
           - std::cos(theta) * e(!plus, 3);
}

V6 boosted_x(bool plus, double phi, double t)
{
    double const pm = plus ? 1 : -1;
    double const cp = std::cos(phi);
    double const sp = std::sin(phi);
    double const ch = std::cosh(t);
    double const sh = std::sinh(t);
    return (sp * ch - sh) * e(plus, 1) - pm * cp * ch * e(plus, 3)
           - pm * cp * sh * e(!plus, 1) + (sp * sh - ch) * e(!plus, 3);
}

namespace {

// Omega(pi/2) and Omega' in null coordinates.
V6 degenerate_base()
{
    return ep(1) - em(1) + ep(3) - em(3);
}

V6 degenerate_companion()
{
    return ep(1) + em(1) - ep(3) - em(3);
}

}  // namespace

V6 u_on_e2(bool plus, double t)
{
    double const h = std::tanh(t) / 2;
    V6 const w = plus ? V6(degenerate_base() - degenerate_companion())
                      : V6(degenerate_base() + degenerate_companion());
    return e(plus, 2) - h * w;
}

V6 v_on_e2(bool plus, double t)
{
    double const h = std::tanh(t) / 2;
    if (plus)
        return ep(2) - h * (degenerate_base() + degenerate_companion());
    return em(2) + h * (degenerate_base() - degenerate_companion());
}

}  // namespace lbo::closed
