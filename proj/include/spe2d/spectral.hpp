#pragma once

#include "spe2d/operators.hpp"

#include <string>

namespace spe2d {

enum class Component : uint8_t { U = 0, V = 1, T = 2 };

/// Discrete eigenbasis of the Stokes-type operator on the constrained space.
/// Modes are single-component (the operator is block diagonal over (u,v,T)),
/// H-orthonormal, sorted by nondecreasing eigenvalue after merging the three
/// blocks.  u-block modes satisfy the vertical-mean constraint.
class EigenBasis {
  public:
    EigenBasis() = default;

    int size() const { return static_cast<int>(lambda_.size()); }
    const DomainSpec& domain() const { return dom_; }
    double lambda(int k) const { return lambda_[static_cast<std::size_t>(k)]; }
    Component component(int k) const { return comp_[static_cast<std::size_t>(k)]; }
    /// Mode k as a full state (two components zero).
    StateField mode(int k) const;
    const std::vector<double>& mode_values(int k) const { return vals_[static_cast<std::size_t>(k)]; }
    double gram_tolerance() const { return gram_tol_; }

    /// Analysis: c_k = <U, Phi_k>_H for k < n.
    std::vector<double> project(const StateField& U, int n) const;
    /// Coefficients of one scalar field against all modes of a component.
    double project_component(const ScalarField& f, int k) const;
    /// Synthesis of sum_{k < c.size()} c_k Phi_k.
    StateField synthesize(const std::vector<double>& c) const;
    /// Add sum c_k Phi_k into an existing state.
    void accumulate(const std::vector<double>& c, StateField& out) const;

    /// Coefficient slice (n, m]: P_m^n = P_m - P_n.
    static std::vector<double> band(const std::vector<double>& c, int n, int m);

    void save(const std::string& path) const;
    static EigenBasis load(const std::string& path);

    friend EigenBasis build_eigenbasis(const OperatorBench& bench, int n_max);

  private:
    DomainSpec dom_;
    std::vector<double> lambda_;
    std::vector<Component> comp_;
    std::vector<std::vector<double>> vals_;  ///< mode grid values
    std::vector<std::vector<double>> wvals_; ///< quadrature-weighted values
    double gram_tol_ = 0.0;

    void finish_init();
};

/// Numerical eigendecomposition of the discrete A, block by block; the
/// u-block is conjugated by the constraint projector first and the null
/// modes of the complement are discarded (threshold 1e-8 * block lambda_max).
/// Throws with solver diagnostics if the factorization fails.
EigenBasis build_eigenbasis(const OperatorBench& bench, int n_max);

/// W-orthogonal projection of a state onto the discrete V subspace: zeros the
/// Dirichlet part of the velocity boundary and removes the per-column mean of
/// u over the free nodes, making the constraint exact.
StateField discrete_V_projection(const StateField& U, const OperatorBench& bench);

struct PoincareReport {
    int n = 0;
    int samples = 0;
    int violations = 0;
    double max_ratio = 0.0; ///< max over samples of ||Q_n U||^2 * lambda_{n+1} / |AU|^2
    double lambda_tail = 0.0;
};

/// Checks ||Q_n U||^2 <= (1/lambda_{n+1}) |A U|^2 on every sample.
PoincareReport poincare_qn_check(const EigenBasis& basis, const OperatorBench& bench,
                                 int n, const std::vector<StateField>& samples);

} // namespace spe2d
