#include "spe2d/calculus.hpp"

namespace spe2d {

namespace {

// End-row closure kinds for first derivatives.
enum class Closure { Sbp, Zero, Robin };

Closure x_closure(BcTag tag) {
    switch (tag) {
    case BcTag::Velocity: return Closure::Sbp;        // Dirichlet sides
    case BcTag::Temperature: return Closure::Zero;    // Neumann sides
    default: return Closure::Sbp;
    }
}

Closure z_bottom_closure(BcTag tag) {
    switch (tag) {
    case BcTag::Velocity: return Closure::Sbp;        // Dirichlet bottom
    case BcTag::Temperature: return Closure::Zero;    // Neumann bottom
    default: return Closure::Sbp;
    }
}

Closure z_top_closure(BcTag tag) {
    switch (tag) {
    case BcTag::Velocity:
    case BcTag::Temperature: return Closure::Robin;   // Robin surface
    default: return Closure::Sbp;
    }
}

double robin_alpha(const DomainSpec& d, BcTag tag) {
    return tag == BcTag::Velocity ? d.alpha_v : d.alpha_T;
}

ScalarField ddx_impl(const ScalarField& f, Closure lo, Closure hi) {
    const DomainSpec& d = f.domain();
    ScalarField out(d, BcTag::Unconstrained);
    const double inv2 = 1.0 / (2.0 * d.dx());
    const double inv1 = 1.0 / d.dx();
    for (int j = 0; j < d.nz; ++j) {
        out(0, j) = lo == Closure::Zero ? 0.0 : (f(1, j) - f(0, j)) * inv1;
        for (int i = 1; i < d.nx - 1; ++i)
            out(i, j) = (f(i + 1, j) - f(i - 1, j)) * inv2;
        int n = d.nx - 1;
        out(n, j) = hi == Closure::Zero ? 0.0 : (f(n, j) - f(n - 1, j)) * inv1;
    }
    return out;
}

ScalarField ddz_impl(const ScalarField& f, Closure bot, Closure top, double alpha) {
    const DomainSpec& d = f.domain();
    ScalarField out(d, BcTag::Unconstrained);
    const double inv2 = 1.0 / (2.0 * d.dz());
    const double inv1 = 1.0 / d.dz();
    int m = d.nz - 1;
    for (int i = 0; i < d.nx; ++i) {
        out(i, 0) = bot == Closure::Zero ? 0.0 : (f(i, 1) - f(i, 0)) * inv1;
        for (int j = 1; j < m; ++j)
            out(i, j) = (f(i, j + 1) - f(i, j - 1)) * inv2;
        switch (top) {
        case Closure::Robin: out(i, m) = -alpha * f(i, m); break;
        case Closure::Zero: out(i, m) = 0.0; break;
        case Closure::Sbp: out(i, m) = (f(i, m) - f(i, m - 1)) * inv1; break;
        }
    }
    return out;
}

} // namespace

ScalarField ddx_sbp(const ScalarField& f) {
    return ddx_impl(f, Closure::Sbp, Closure::Sbp);
}

ScalarField ddz_sbp(const ScalarField& f) {
    return ddz_impl(f, Closure::Sbp, Closure::Sbp, 0.0);
}

ScalarField ddx(const ScalarField& f) {
    Closure c = x_closure(f.tag());
    return ddx_impl(f, c, c);
}

ScalarField ddz(const ScalarField& f) {
    return ddz_impl(f, z_bottom_closure(f.tag()), z_top_closure(f.tag()),
                    robin_alpha(f.domain(), f.tag()));
}

ScalarField d2x(const ScalarField& f) {
    const DomainSpec& d = f.domain();
    ScalarField out(d, BcTag::Unconstrained);
    const double ih2 = 1.0 / (d.dx() * d.dx());
    int n = d.nx - 1;
    for (int j = 0; j < d.nz; ++j) {
        out(0, j) = (2.0 * f(0, j) - 5.0 * f(1, j) + 4.0 * f(2, j) - f(3, j)) * ih2;
        for (int i = 1; i < n; ++i)
            out(i, j) = (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) * ih2;
        out(n, j) = (2.0 * f(n, j) - 5.0 * f(n - 1, j) + 4.0 * f(n - 2, j) - f(n - 3, j)) * ih2;
    }
    return out;
}

ScalarField d2z(const ScalarField& f) {
    const DomainSpec& d = f.domain();
    ScalarField out(d, BcTag::Unconstrained);
    const double ih2 = 1.0 / (d.dz() * d.dz());
    int m = d.nz - 1;
    for (int i = 0; i < d.nx; ++i) {
        out(i, 0) = (2.0 * f(i, 0) - 5.0 * f(i, 1) + 4.0 * f(i, 2) - f(i, 3)) * ih2;
        for (int j = 1; j < m; ++j)
            out(i, j) = (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) * ih2;
        out(i, m) = (2.0 * f(i, m) - 5.0 * f(i, m - 1) + 4.0 * f(i, m - 2) - f(i, m - 3)) * ih2;
    }
    return out;
}

ScalarField dxz(const ScalarField& f) { return ddx_sbp(ddz_sbp(f)); }

ScalarField laplacian(const ScalarField& f) {
    const DomainSpec& d = f.domain();
    if (f.tag() == BcTag::Unconstrained)
        throw contract_error("laplacian: requires a BC-aware field (velocity or temperature tag)");
    const bool dirichlet = f.tag() == BcTag::Velocity;
    const double alpha = robin_alpha(d, f.tag());
    const double ihx2 = 1.0 / (d.dx() * d.dx());
    const double ihz2 = 1.0 / (d.dz() * d.dz());
    ScalarField out(d, BcTag::Unconstrained);
    int n = d.nx - 1, m = d.nz - 1;
    for (int i = 0; i < d.nx; ++i) {
        for (int j = 0; j < d.nz; ++j) {
            if (dirichlet && (i == 0 || i == n || j == 0)) {
                out(i, j) = 0.0;
                continue;
            }
            // x part: narrow second difference; lateral rows fold the ghost
            // implied by the Neumann condition (temperature only reaches here).
            double axx;
            if (i == 0) axx = 2.0 * (f(1, j) - f(0, j)) * ihx2;
            else if (i == n) axx = 2.0 * (f(n - 1, j) - f(n, j)) * ihx2;
            else axx = (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) * ihx2;
            // z part: bottom folds the Neumann/Dirichlet ghost, surface the
            // Robin ghost.
            double azz;
            if (j == 0) azz = 2.0 * (f(i, 1) - f(i, 0)) * ihz2;
            else if (j == m) azz = 2.0 * (f(i, m - 1) - f(i, m)) * ihz2 - 2.0 * alpha * f(i, m) / d.dz();
            else azz = (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) * ihz2;
            out(i, j) = axx + azz;
        }
    }
    return out;
}

namespace {

// End-row derivative value of the tag-aware operator at a single node.
double end_row_x(const ScalarField& f, int i, int j) {
    const DomainSpec& d = f.domain();
    if (x_closure(f.tag()) == Closure::Zero) return 0.0;
    if (i == 0) return (f(1, j) - f(0, j)) / d.dx();
    return (f(d.nx - 1, j) - f(d.nx - 2, j)) / d.dx();
}

double end_row_z(const ScalarField& f, int i, int j) {
    const DomainSpec& d = f.domain();
    if (j == 0) {
        if (z_bottom_closure(f.tag()) == Closure::Zero) return 0.0;
        return (f(i, 1) - f(i, 0)) / d.dz();
    }
    switch (z_top_closure(f.tag())) {
    case Closure::Robin: return -robin_alpha(d, f.tag()) * f(i, d.nz - 1);
    case Closure::Zero: return 0.0;
    default: return (f(i, d.nz - 1) - f(i, d.nz - 2)) / d.dz();
    }
}

} // namespace

double sbp_boundary_term(const ScalarField& f, const ScalarField& g, Axis axis) {
    require_same_domain(f.domain(), g.domain(), "sbp_boundary_term");
    const DomainSpec& d = f.domain();
    double total = 0.0;
    if (axis == Axis::X) {
        int n = d.nx - 1;
        double w_end = 0.5 * d.dx();
        for (int j = 0; j < d.nz; ++j) {
            double interior = 0.5 * (f(n, j) * g(n - 1, j) + f(n - 1, j) * g(n, j))
                            - 0.5 * (f(1, j) * g(0, j) + f(0, j) * g(1, j));
            double rows = w_end * (end_row_x(f, 0, j) * g(0, j) + f(0, j) * end_row_x(g, 0, j))
                        + w_end * (end_row_x(f, n, j) * g(n, j) + f(n, j) * end_row_x(g, n, j));
            total += d.wz(j) * (interior + rows);
        }
    } else {
        int m = d.nz - 1;
        double w_end = 0.5 * d.dz();
        for (int i = 0; i < d.nx; ++i) {
            double interior = 0.5 * (f(i, m) * g(i, m - 1) + f(i, m - 1) * g(i, m))
                            - 0.5 * (f(i, 1) * g(i, 0) + f(i, 0) * g(i, 1));
            double rows = w_end * (end_row_z(f, i, 0) * g(i, 0) + f(i, 0) * end_row_z(g, i, 0))
                        + w_end * (end_row_z(f, i, m) * g(i, m) + f(i, m) * end_row_z(g, i, m));
            total += d.wx(i) * (interior + rows);
        }
    }
    return total;
}

std::vector<double> column_integral(const ScalarField& f) {
    const DomainSpec& d = f.domain();
    std::vector<double> out(d.nx, 0.0);
    for (int i = 0; i < d.nx; ++i) {
        double s = 0.0;
        for (int j = 0; j < d.nz; ++j) s += d.wz(j) * f(i, j);
        out[i] = s;
    }
    return out;
}

ScalarField vertical_average(const ScalarField& phi) {
    const DomainSpec& d = phi.domain();
    ScalarField out(d, BcTag::Unconstrained);
    std::vector<double> col = column_integral(phi);
    for (int i = 0; i < d.nx; ++i) {
        double avg = col[i] / d.h;
        for (int j = 0; j < d.nz; ++j) out(i, j) = avg;
    }
    return out;
}

ScalarField fluctuation(const ScalarField& phi) {
    ScalarField out = phi;
    out.set_tag(BcTag::Unconstrained);
    const DomainSpec& d = phi.domain();
    std::vector<double> col = column_integral(phi);
    for (int i = 0; i < d.nx; ++i) {
        double avg = col[i] / d.h;
        for (int j = 0; j < d.nz; ++j) out(i, j) -= avg;
    }
    return out;
}

StateField project_H(const ScalarField& u, const ScalarField& v, const ScalarField& T) {
    require_same_domain(u.domain(), v.domain(), "project_H");
    require_same_domain(u.domain(), T.domain(), "project_H");
    StateField out;
    out.u = fluctuation(u);
    out.u.set_tag(BcTag::Velocity);
    out.v = v;
    out.v.set_tag(BcTag::Velocity);
    out.T = T;
    out.T.set_tag(BcTag::Temperature);
    return out;
}

ScalarField surface_cumulative_integral(const ScalarField& f) {
    const DomainSpec& d = f.domain();
    ScalarField out(d, BcTag::Unconstrained);
    int m = d.nz - 1;
    double half = 0.5 * d.dz();
    for (int i = 0; i < d.nx; ++i) {
        out(i, m) = 0.0;
        for (int j = m - 1; j >= 0; --j)
            out(i, j) = out(i, j + 1) + half * (f(i, j) + f(i, j + 1));
    }
    return out;
}

} // namespace spe2d
