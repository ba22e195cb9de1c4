#pragma once

#include "spe2d/grid.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace spe2d {

/// Selects which boundary closure a field's derivative stencils honor.
/// Velocity: phi = 0 on the lateral and bottom boundary, d_z phi + alpha_v phi = 0
/// on the surface.  Temperature: d_x phi = 0 laterally, d_z phi = 0 at the
/// bottom, d_z phi + alpha_T phi = 0 on the surface.  Unconstrained fields use
/// plain one-sided closures and may not be fed to BC-aware operators.
enum class BcTag { Velocity, Temperature, Unconstrained };

/// A scalar sampled on the tensor grid of its DomainSpec.
class ScalarField {
  public:
    ScalarField() = default;
    ScalarField(const DomainSpec& dom, BcTag tag, double fill = 0.0)
        : dom_(dom), tag_(tag), v_(dom.size(), fill) {}

    const DomainSpec& domain() const { return dom_; }
    BcTag tag() const { return tag_; }
    void set_tag(BcTag t) { tag_ = t; }

    double& operator()(int i, int j) { return v_[dom_.idx(i, j)]; }
    double operator()(int i, int j) const { return v_[dom_.idx(i, j)]; }
    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    bool is_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    ScalarField& operator+=(const ScalarField& o) {
        require_same_domain(dom_, o.dom_, "field +=");
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        require_same_domain(dom_, o.dom_, "field -=");
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
        return *this;
    }
    ScalarField& operator*=(double a) {
        for (double& x : v_) x *= a;
        return *this;
    }

    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double a, ScalarField f) { return f *= a; }

    /// Pointwise product, tag of the left operand is dropped (products are
    /// generic grid data).
    friend ScalarField hadamard(const ScalarField& a, const ScalarField& b) {
        require_same_domain(a.dom_, b.dom_, "hadamard");
        ScalarField out(a.dom_, BcTag::Unconstrained);
        for (std::size_t k = 0; k < a.v_.size(); ++k) out.v_[k] = a.v_[k] * b.v_[k];
        return out;
    }

    /// Fill from a function of (x, z).
    void sample(const std::function<double(double, double)>& f) {
        for (int i = 0; i < dom_.nx; ++i)
            for (int j = 0; j < dom_.nz; ++j)
                (*this)(i, j) = f(dom_.x(i), dom_.z(j));
    }

  private:
    DomainSpec dom_;
    BcTag tag_ = BcTag::Unconstrained;
    std::vector<double> v_;
};

/// The prognostic triple U = (u, v, T).  u is the component subject to the
/// zero-vertical-mean constraint; velocity tags on (u, v), temperature on T.
struct StateField {
    ScalarField u, v, T;

    StateField() = default;
    explicit StateField(const DomainSpec& dom)
        : u(dom, BcTag::Velocity), v(dom, BcTag::Velocity), T(dom, BcTag::Temperature) {}
    StateField(ScalarField u_, ScalarField v_, ScalarField T_)
        : u(std::move(u_)), v(std::move(v_)), T(std::move(T_)) {
        require_same_domain(u.domain(), v.domain(), "StateField");
        require_same_domain(u.domain(), T.domain(), "StateField");
    }

    const DomainSpec& domain() const { return u.domain(); }

    bool is_finite() const { return u.is_finite() && v.is_finite() && T.is_finite(); }
    double max_abs() const {
        return std::max({u.max_abs(), v.max_abs(), T.max_abs()});
    }

    StateField& operator+=(const StateField& o) {
        u += o.u; v += o.v; T += o.T;
        return *this;
    }
    StateField& operator-=(const StateField& o) {
        u -= o.u; v -= o.v; T -= o.T;
        return *this;
    }
    StateField& operator*=(double a) {
        u *= a; v *= a; T *= a;
        return *this;
    }
    friend StateField operator+(StateField a, const StateField& b) { return a += b; }
    friend StateField operator-(StateField a, const StateField& b) { return a -= b; }
    friend StateField operator*(double a, StateField f) { return f *= a; }

    /// Largest columnwise |trapezoid integral of u over z|.
    double constraint_residual() const;
    /// Throws contract_error if the vertical-mean constraint on u is violated
    /// beyond tol_rel * (h * max|u|).
    void require_constraint(double tol_rel = 1e-12) const;
};

} // namespace spe2d
