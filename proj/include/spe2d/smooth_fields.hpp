#pragma once

#include "spe2d/field.hpp"
#include "spe2d/rng.hpp"

#include <cstdint>
#include <vector>

namespace spe2d {

/// One separable analytic term amp * X_m(x) * P(z), X = sin(m pi x / L) or
/// cos(m pi x / L), P a polynomial stored by ascending degree.
struct TrigPolyTerm {
    double amp = 0.0;
    int m = 1;
    bool cosine = false;
    std::vector<double> pz;
};

/// A closed-form field built from trig-polynomial terms.  Supports exact
/// derivatives and vertical antiderivatives, so it can serve as an oracle on
/// any grid.
class AnalyticComponent {
  public:
    AnalyticComponent() = default;
    AnalyticComponent(double L, std::vector<TrigPolyTerm> terms)
        : L_(L), terms_(std::move(terms)) {}

    double eval(double x, double z) const;
    double dx(double x, double z) const;
    double dz(double x, double z) const;
    double dxx(double x, double z) const;
    double dzz(double x, double z) const;
    double dxz(double x, double z) const;
    /// int_z^0 of the component along the vertical.
    double int_z_to_0(double x, double z) const;

    /// Sample onto a grid with separable caching.
    ScalarField to_grid(const DomainSpec& dom, BcTag tag) const;

    const std::vector<TrigPolyTerm>& terms() const { return terms_; }
    double L() const { return L_; }
    AnalyticComponent& scale(double a) {
        for (auto& t : terms_) t.amp *= a;
        return *this;
    }

  private:
    double L_ = 1.0;
    std::vector<TrigPolyTerm> terms_;
};

struct AnalyticState {
    AnalyticComponent u, v, T;
    StateField to_grid(const DomainSpec& dom) const {
        return StateField(u.to_grid(dom, BcTag::Velocity), v.to_grid(dom, BcTag::Velocity),
                          T.to_grid(dom, BcTag::Temperature));
    }
    AnalyticState& scale(double a) {
        u.scale(a); v.scale(a); T.scale(a);
        return *this;
    }
};

enum class ComponentKind { U, V, T };

/// Draws BC-exact random smooth fields: truncated trigonometric series in x
/// with polynomial vertical profiles that satisfy the boundary conditions of
/// their component exactly (and, for u, the zero-vertical-mean constraint
/// analytically).  Term coefficients are uniform in [-1,1], fully determined
/// by (seed, sample index, channel).
class SmoothSampler {
  public:
    explicit SmoothSampler(const DomainSpec& dom, int x_modes = 3);

    AnalyticComponent sample_component(ComponentKind kind, uint64_t seed,
                                       uint32_t sample, uint32_t channel) const;
    AnalyticState sample_state(uint64_t seed, uint32_t sample) const;

    /// Deterministic (non-random) profile for noise mode k with amplitude
    /// (k+1)^(-gamma); all three components are populated.
    AnalyticState envelope(int k, double gamma) const;

    const DomainSpec& domain() const { return dom_; }
    int x_modes() const { return x_modes_; }
    const std::vector<std::vector<double>>& profiles(ComponentKind kind) const;

  private:
    DomainSpec dom_;
    int x_modes_;
    std::vector<std::vector<double>> u_profiles_, v_profiles_, T_profiles_;
};

} // namespace spe2d
