#pragma once

#include "spe2d/field.hpp"

namespace spe2d {

enum class Axis { X, Z };

/// First derivative with the plain summation-by-parts closure: centered in
/// the interior, one-sided (f1-f0)/dx at the two end nodes, independent of
/// the field's bc tag.  Together with the trapezoid quadrature this operator
/// satisfies <Df,g> + <f,Dg> = [fg] at the ends exactly; it is the advective
/// derivative used inside the nonlinearity and the diagnostic w.
ScalarField ddx_sbp(const ScalarField& f);
ScalarField ddz_sbp(const ScalarField& f);

/// BC-aware first derivatives.  Boundary rows substitute the closure implied
/// by the field's tag: Dirichlet ends keep the SBP one-sided row, Neumann
/// ends return 0, the Robin surface returns -alpha * f.  Unconstrained tags
/// fall back to the plain SBP rows.
ScalarField ddx(const ScalarField& f);
ScalarField ddz(const ScalarField& f);

/// Second derivatives with one-sided second-order closures (tag ignored;
/// diagnostics only).
ScalarField d2x(const ScalarField& f);
ScalarField d2z(const ScalarField& f);
ScalarField dxz(const ScalarField& f);

/// BC-honoring Laplacian: the variational (ghost-eliminated) narrow stencil
/// whose quadratic form is exactly the V inner product.  For velocity tags
/// the output is zero on the Dirichlet part of the boundary.  Throws on
/// unconstrained input.
ScalarField laplacian(const ScalarField& f);

/// Exact value of <D f, g> + <f, D g> for the tag-aware first derivative
/// along `axis`, assembled from near-boundary node values only.  The SBP
/// residual of the global quadrature sums equals this expression to machine
/// precision.
double sbp_boundary_term(const ScalarField& f, const ScalarField& g, Axis axis);

/// Columnwise trapezoid integral of f over z, one value per x column.
std::vector<double> column_integral(const ScalarField& f);

/// P phi: vertical average (1/h) * int_{-h}^0 phi dz, broadcast back to the
/// grid as a z-constant field.
ScalarField vertical_average(const ScalarField& phi);

/// Q phi = phi - P phi.
ScalarField fluctuation(const ScalarField& phi);

/// Projection onto H: U = (u,v,T) -> (Qu, v, T).  The result satisfies the
/// vertical-mean constraint exactly.
StateField project_H(const ScalarField& u, const ScalarField& v, const ScalarField& T);

/// int_z^0 f dzbar, cumulative trapezoid from the surface down; zero on the
/// surface row by construction.
ScalarField surface_cumulative_integral(const ScalarField& f);

} // namespace spe2d
