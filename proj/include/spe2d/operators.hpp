#pragma once

#include "spe2d/calculus.hpp"
#include "spe2d/linalg.hpp"
#include "spe2d/norms.hpp"

namespace spe2d {

struct PhysicalParams {
    double nu = 1e-2;     ///< viscosity
    double mu = 1e-2;     ///< heat diffusivity
    double f = 1.0;       ///< Coriolis parameter (constant)
    double beta_T = 2e-4; ///< thermal expansion coefficient
    double g = 9.81;      ///< gravity
    double rho0 = 1e3;    ///< reference density
    double T0 = 0.0;      ///< reference temperature

    void validate() const;
};

/// Diagnostic vertical velocity w(u) = int_z^0 d_x u dzbar.  Exactly zero on
/// the surface; zero at the bottom to round-off whenever u has zero vertical
/// mean (the discrete d_x commutes with the column quadrature).  Throws on
/// constraint violation.
ScalarField w_diagnostic(const ScalarField& u);

/// Discrete realizations of the governing operators on a fixed domain and
/// parameter set.  The Stokes-type blocks are assembled variationally from
/// the edge-difference stiffness plus the Robin surface quadrature, so
/// <A U, U#>_H = ((U, U#)) holds to round-off and each block is symmetric in
/// the weighted inner product.
class OperatorBench {
  public:
    OperatorBench(const DomainSpec& dom, const PhysicalParams& par);

    const DomainSpec& domain() const { return dom_; }
    const PhysicalParams& params() const { return par_; }

    /// AU = (-nu Q Lap u, -nu Lap v, -mu Lap T), BC-honoring stencils.
    StateField apply_A(const StateField& U) const;
    /// Same operator through the assembled CSR blocks (agreement is a tested
    /// invariant).
    StateField apply_A_assembled(const StateField& U) const;

    /// A_p U = (-beta_T g rho0 Q int_z^0 d_x T dzbar, 0, 0).
    StateField apply_Ap(const StateField& U) const;

    /// E U = (-Q f v, f u, 0).
    StateField apply_E(const StateField& U) const;

    /// Skew-symmetric advection B(U, U#) = B1 + B2; bilinear, and
    /// <B(U,U#),U#>_H = 0 to round-off for constrained U.
    StateField apply_B(const StateField& U, const StateField& Us) const;

    /// First components of the two advection parts (probe bench hooks).
    ScalarField apply_B1_first(const ScalarField& u, const ScalarField& us) const;
    ScalarField apply_B2_first(const ScalarField& u, const ScalarField& us) const;

    /// N(U) = A_p U + B(U,U) + E U.
    StateField apply_N(const StateField& U) const;

    struct Diagnostics {
        ScalarField w, rho, p_anomaly;
    };
    /// w from the divergence constraint, rho from the equation of state,
    /// p_anomaly(x,z) = -g rho0 int_z^0 (1 - beta_T (T - T0)) dzbar (the
    /// unknown surface pressure is not recovered).
    Diagnostics recover_diagnostics(const StateField& U) const;

    // Assembled geometric stiffness (no nu/mu factor) over free nodes.
    const CsrMatrix& stiffness_velocity() const { return K_vel_; }
    const CsrMatrix& stiffness_temperature() const { return K_tmp_; }

    /// Free-node index for velocity components (-1 on the Dirichlet part of
    /// the boundary: lateral columns and the bottom row).
    int velocity_free_index(int i, int j) const { return vel_free_[dom_.idx(i, j)]; }
    int velocity_free_count() const { return nvel_; }
    /// Inverse map: free index -> grid index.
    std::size_t velocity_grid_index(int f) const { return vel_grid_[static_cast<std::size_t>(f)]; }

  private:
    DomainSpec dom_;
    PhysicalParams par_;
    CsrMatrix K_vel_, K_tmp_;
    std::vector<int> vel_free_;
    std::vector<std::size_t> vel_grid_;
    int nvel_ = 0;

    ScalarField advect(const ScalarField& u, const ScalarField& w,
                       const ScalarField& phi) const;
};

} // namespace spe2d
