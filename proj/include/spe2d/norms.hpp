#pragma once

#include "spe2d/field.hpp"

namespace spe2d {

/// Trapezoid L2 inner product over the domain.
double inner_L2(const ScalarField& f, const ScalarField& g);
double l2_norm(const ScalarField& f);

/// Edge-midpoint gradient inner products: the x (resp. z) difference lives on
/// cell edges with midpoint weights, the cross direction keeps trapezoid
/// weights.  These are exactly the quadratic forms assembled into the
/// Stokes-type operator.
double grad_x_inner(const ScalarField& f, const ScalarField& g);
double grad_z_inner(const ScalarField& f, const ScalarField& g);

/// Trapezoid line integral over the surface Gamma_i (z = 0).
double surface_inner(const ScalarField& f, const ScalarField& g);

/// |grad f|_{L2} via the edge-midpoint forms (the paper's ||f|| for a single
/// component).
double h1_seminorm(const ScalarField& f);

/// H inner product: (U,U#) = int v.v# + int T T#  (kappa = 1).
double inner_H(const StateField& a, const StateField& b);
double norm_H(const StateField& a);

/// V inner product: nu*((.,.))_1 + mu*((.,.))_2, each block being the
/// gradient quadrature plus the Robin surface integral (alpha_v for the
/// velocity pair, alpha_T for temperature).
double inner_V(const StateField& a, const StateField& b, double nu, double mu);
double norm_V(const StateField& a, double nu, double mu);

/// Squared H2 norm of a component: |f|^2 + |grad f|^2 + all second
/// derivatives (mixed counted twice).
double h2_norm2(const ScalarField& f);
/// H2 norm of the triple.
double norm_H2(const StateField& a);

} // namespace spe2d
