#include "spe2d/norms.hpp"

#include "spe2d/calculus.hpp"

#include <cmath>

namespace spe2d {

double inner_L2(const ScalarField& f, const ScalarField& g) {
    require_same_domain(f.domain(), g.domain(), "inner_L2");
    const DomainSpec& d = f.domain();
    double s = 0.0;
    for (int i = 0; i < d.nx; ++i) {
        double col = 0.0;
        for (int j = 0; j < d.nz; ++j) col += d.wz(j) * f(i, j) * g(i, j);
        s += d.wx(i) * col;
    }
    return s;
}

double l2_norm(const ScalarField& f) { return std::sqrt(inner_L2(f, f)); }

double grad_x_inner(const ScalarField& f, const ScalarField& g) {
    require_same_domain(f.domain(), g.domain(), "grad_x_inner");
    const DomainSpec& d = f.domain();
    const double inv = 1.0 / d.dx();
    double s = 0.0;
    for (int j = 0; j < d.nz; ++j) {
        double row = 0.0;
        for (int i = 0; i < d.nx - 1; ++i) {
            double df = (f(i + 1, j) - f(i, j)) * inv;
            double dg = (g(i + 1, j) - g(i, j)) * inv;
            row += df * dg;
        }
        s += d.wz(j) * row * d.dx();
    }
    return s;
}

double grad_z_inner(const ScalarField& f, const ScalarField& g) {
    require_same_domain(f.domain(), g.domain(), "grad_z_inner");
    const DomainSpec& d = f.domain();
    const double inv = 1.0 / d.dz();
    double s = 0.0;
    for (int i = 0; i < d.nx; ++i) {
        double col = 0.0;
        for (int j = 0; j < d.nz - 1; ++j) {
            double df = (f(i, j + 1) - f(i, j)) * inv;
            double dg = (g(i, j + 1) - g(i, j)) * inv;
            col += df * dg;
        }
        s += d.wx(i) * col * d.dz();
    }
    return s;
}

double surface_inner(const ScalarField& f, const ScalarField& g) {
    require_same_domain(f.domain(), g.domain(), "surface_inner");
    const DomainSpec& d = f.domain();
    int m = d.nz - 1;
    double s = 0.0;
    for (int i = 0; i < d.nx; ++i) s += d.wx(i) * f(i, m) * g(i, m);
    return s;
}

double h1_seminorm(const ScalarField& f) {
    return std::sqrt(grad_x_inner(f, f) + grad_z_inner(f, f));
}

double inner_H(const StateField& a, const StateField& b) {
    return inner_L2(a.u, b.u) + inner_L2(a.v, b.v) + inner_L2(a.T, b.T);
}

double norm_H(const StateField& a) { return std::sqrt(inner_H(a, a)); }

double inner_V(const StateField& a, const StateField& b, double nu, double mu) {
    const DomainSpec& d = a.domain();
    double vel = grad_x_inner(a.u, b.u) + grad_z_inner(a.u, b.u)
               + grad_x_inner(a.v, b.v) + grad_z_inner(a.v, b.v)
               + d.alpha_v * (surface_inner(a.u, b.u) + surface_inner(a.v, b.v));
    double tmp = grad_x_inner(a.T, b.T) + grad_z_inner(a.T, b.T)
               + d.alpha_T * surface_inner(a.T, b.T);
    return nu * vel + mu * tmp;
}

double norm_V(const StateField& a, double nu, double mu) {
    return std::sqrt(inner_V(a, a, nu, mu));
}

double h2_norm2(const ScalarField& f) {
    ScalarField fxx = d2x(f), fzz = d2z(f), fxz = dxz(f);
    return inner_L2(f, f) + grad_x_inner(f, f) + grad_z_inner(f, f)
         + inner_L2(fxx, fxx) + 2.0 * inner_L2(fxz, fxz) + inner_L2(fzz, fzz);
}

double norm_H2(const StateField& a) {
    return std::sqrt(h2_norm2(a.u) + h2_norm2(a.v) + h2_norm2(a.T));
}

} // namespace spe2d
