#include "spe2d/operators.hpp"

#include <cmath>
#include <tuple>

namespace spe2d {

void PhysicalParams::validate() const {
    if (!(nu > 0.0)) throw contract_error("PhysicalParams: nu must be > 0");
    if (!(mu > 0.0)) throw contract_error("PhysicalParams: mu must be > 0");
    if (!(rho0 > 0.0)) throw contract_error("PhysicalParams: rho0 must be > 0");
    for (double v : {nu, mu, f, beta_T, g, rho0, T0})
        if (!std::isfinite(v)) throw contract_error("PhysicalParams: non-finite value");
}

ScalarField w_diagnostic(const ScalarField& u) {
    const DomainSpec& d = u.domain();
    double scale = d.h * u.max_abs();
    if (scale > 0.0) {
        std::vector<double> col = column_integral(u);
        for (double c : col)
            if (std::abs(c) > 1e-12 * scale)
                throw contract_error("w_diagnostic: u violates the vertical-mean constraint");
    }
    return surface_cumulative_integral(ddx_sbp(u));
}

namespace {

// Edge-based stiffness of the variational Laplacian plus the Robin surface
// term, restricted to the free nodes given by `free_of` (-1 = Dirichlet).
CsrMatrix assemble_stiffness(const DomainSpec& d, const std::vector<int>& free_of,
                             int nfree, double alpha) {
    std::vector<std::tuple<int, int, double>> trips;
    auto add_edge = [&](std::size_t a, std::size_t b, double c) {
        int fa = free_of[a], fb = free_of[b];
        if (fa >= 0) trips.emplace_back(fa, fa, c);
        if (fb >= 0) trips.emplace_back(fb, fb, c);
        if (fa >= 0 && fb >= 0) {
            trips.emplace_back(fa, fb, -c);
            trips.emplace_back(fb, fa, -c);
        }
    };
    for (int j = 0; j < d.nz; ++j)
        for (int i = 0; i < d.nx - 1; ++i)
            add_edge(d.idx(i, j), d.idx(i + 1, j), d.wz(j) / d.dx());
    for (int i = 0; i < d.nx; ++i)
        for (int j = 0; j < d.nz - 1; ++j)
            add_edge(d.idx(i, j), d.idx(i, j + 1), d.wx(i) / d.dz());
    for (int i = 0; i < d.nx; ++i) {
        int fa = free_of[d.idx(i, d.nz - 1)];
        if (fa >= 0 && alpha != 0.0) trips.emplace_back(fa, fa, alpha * d.wx(i));
    }
    return CsrMatrix::from_triplets(nfree, std::move(trips));
}

} // namespace

OperatorBench::OperatorBench(const DomainSpec& dom, const PhysicalParams& par)
    : dom_(dom), par_(par) {
    dom_.validate();
    par_.validate();

    vel_free_.assign(dom_.size(), -1);
    for (int i = 1; i < dom_.nx - 1; ++i)
        for (int j = 1; j < dom_.nz; ++j) {
            vel_free_[dom_.idx(i, j)] = nvel_++;
            vel_grid_.push_back(dom_.idx(i, j));
        }
    K_vel_ = assemble_stiffness(dom_, vel_free_, nvel_, dom_.alpha_v);

    std::vector<int> all(dom_.size());
    for (std::size_t k = 0; k < dom_.size(); ++k) all[k] = static_cast<int>(k);
    K_tmp_ = assemble_stiffness(dom_, all, static_cast<int>(dom_.size()), dom_.alpha_T);
}

StateField OperatorBench::apply_A(const StateField& U) const {
    require_same_domain(dom_, U.domain(), "apply_A");
    StateField out(dom_);
    ScalarField lu = laplacian(U.u);
    lu *= -par_.nu;
    out.u = fluctuation(lu);
    out.u.set_tag(BcTag::Velocity);
    out.v = laplacian(U.v);
    out.v *= -par_.nu;
    out.v.set_tag(BcTag::Velocity);
    out.T = laplacian(U.T);
    out.T *= -par_.mu;
    out.T.set_tag(BcTag::Temperature);
    return out;
}

StateField OperatorBench::apply_A_assembled(const StateField& U) const {
    require_same_domain(dom_, U.domain(), "apply_A_assembled");
    StateField out(dom_);
    std::vector<double> x(static_cast<std::size_t>(nvel_)), y(static_cast<std::size_t>(nvel_));

    auto velocity_block = [&](const ScalarField& f, ScalarField& g, double coeff) {
        for (int k = 0; k < nvel_; ++k) x[static_cast<std::size_t>(k)] = f.data()[vel_grid_[static_cast<std::size_t>(k)]];
        K_vel_.multiply(x.data(), y.data());
        for (int k = 0; k < nvel_; ++k) {
            std::size_t gi = vel_grid_[static_cast<std::size_t>(k)];
            int i = static_cast<int>(gi) / dom_.nz, j = static_cast<int>(gi) % dom_.nz;
            g.data()[gi] = coeff * y[static_cast<std::size_t>(k)] / dom_.w(i, j);
        }
    };
    velocity_block(U.u, out.u, par_.nu);
    out.u = fluctuation(out.u);
    out.u.set_tag(BcTag::Velocity);
    velocity_block(U.v, out.v, par_.nu);

    std::vector<double> yt(dom_.size());
    K_tmp_.multiply(U.T.data().data(), yt.data());
    for (int i = 0; i < dom_.nx; ++i)
        for (int j = 0; j < dom_.nz; ++j)
            out.T(i, j) = par_.mu * yt[dom_.idx(i, j)] / dom_.w(i, j);
    return out;
}

StateField OperatorBench::apply_Ap(const StateField& U) const {
    require_same_domain(dom_, U.domain(), "apply_Ap");
    StateField out(dom_);
    ScalarField integ = surface_cumulative_integral(ddx(U.T));
    integ *= -par_.beta_T * par_.g * par_.rho0;
    out.u = fluctuation(integ);
    out.u.set_tag(BcTag::Velocity);
    return out;
}

StateField OperatorBench::apply_E(const StateField& U) const {
    require_same_domain(dom_, U.domain(), "apply_E");
    StateField out(dom_);
    ScalarField qv = fluctuation(U.v);
    qv *= -par_.f;
    out.u = qv;
    out.u.set_tag(BcTag::Velocity);
    out.v = U.u;
    out.v *= par_.f;
    out.v.set_tag(BcTag::Velocity);
    return out;
}

ScalarField OperatorBench::advect(const ScalarField& u, const ScalarField& w,
                                  const ScalarField& phi) const {
    // Half advective + half divergence form; the SBP pairing makes the
    // boundary flux vanish because u = 0 laterally and w = 0 top/bottom.
    ScalarField dxp = ddx_sbp(phi);
    ScalarField dzp = ddz_sbp(phi);
    ScalarField div_x = ddx_sbp(hadamard(u, phi));
    ScalarField div_z = ddz_sbp(hadamard(w, phi));
    ScalarField out(dom_, BcTag::Unconstrained);
    const std::size_t n = dom_.size();
    for (std::size_t k = 0; k < n; ++k)
        out.data()[k] = 0.5 * (u.data()[k] * dxp.data()[k] + div_x.data()[k]
                               + w.data()[k] * dzp.data()[k] + div_z.data()[k]);
    return out;
}

StateField OperatorBench::apply_B(const StateField& U, const StateField& Us) const {
    require_same_domain(dom_, U.domain(), "apply_B");
    require_same_domain(dom_, Us.domain(), "apply_B");
    ScalarField w = w_diagnostic(U.u);
    StateField out(dom_);
    out.u = fluctuation(advect(U.u, w, Us.u));
    out.u.set_tag(BcTag::Velocity);
    out.v = advect(U.u, w, Us.v);
    out.v.set_tag(BcTag::Velocity);
    out.T = advect(U.u, w, Us.T);
    out.T.set_tag(BcTag::Temperature);
    return out;
}

ScalarField OperatorBench::apply_B1_first(const ScalarField& u, const ScalarField& us) const {
    ScalarField dxp = ddx_sbp(us);
    ScalarField div_x = ddx_sbp(hadamard(u, us));
    ScalarField out(dom_, BcTag::Unconstrained);
    for (std::size_t k = 0; k < dom_.size(); ++k)
        out.data()[k] = 0.5 * (u.data()[k] * dxp.data()[k] + div_x.data()[k]);
    return fluctuation(out);
}

ScalarField OperatorBench::apply_B2_first(const ScalarField& u, const ScalarField& us) const {
    ScalarField w = w_diagnostic(u);
    ScalarField dzp = ddz_sbp(us);
    ScalarField div_z = ddz_sbp(hadamard(w, us));
    ScalarField out(dom_, BcTag::Unconstrained);
    for (std::size_t k = 0; k < dom_.size(); ++k)
        out.data()[k] = 0.5 * (w.data()[k] * dzp.data()[k] + div_z.data()[k]);
    return fluctuation(out);
}

StateField OperatorBench::apply_N(const StateField& U) const {
    StateField out = apply_Ap(U);
    out += apply_B(U, U);
    out += apply_E(U);
    return out;
}

OperatorBench::Diagnostics OperatorBench::recover_diagnostics(const StateField& U) const {
    require_same_domain(dom_, U.domain(), "recover_diagnostics");
    Diagnostics d;
    d.w = w_diagnostic(U.u);
    d.rho = ScalarField(dom_, BcTag::Unconstrained);
    ScalarField integrand(dom_, BcTag::Unconstrained);
    for (int i = 0; i < dom_.nx; ++i)
        for (int j = 0; j < dom_.nz; ++j) {
            double r = par_.rho0 * (1.0 - par_.beta_T * (U.T(i, j) - par_.T0));
            d.rho(i, j) = r;
            integrand(i, j) = 1.0 - par_.beta_T * (U.T(i, j) - par_.T0);
        }
    d.p_anomaly = surface_cumulative_integral(integrand);
    d.p_anomaly *= -par_.g * par_.rho0;
    return d;
}

} // namespace spe2d
