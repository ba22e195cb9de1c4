#include "spe2d/smooth_fields.hpp"

#include <cmath>

namespace spe2d {

namespace {

double poly_eval(const std::vector<double>& c, double z) {
    double r = 0.0;
    for (std::size_t d = c.size(); d-- > 0;) r = r * z + c[d];
    return r;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> out(c.size() - 1);
    for (std::size_t d = 1; d < c.size(); ++d) out[d - 1] = static_cast<double>(d) * c[d];
    return out;
}

// Antiderivative with value 0 at z = 0.
std::vector<double> poly_antiderivative(const std::vector<double>& c) {
    std::vector<double> out(c.size() + 1, 0.0);
    for (std::size_t d = 0; d < c.size(); ++d) out[d + 1] = c[d] / static_cast<double>(d + 1);
    return out;
}

// Nullspace basis of a small constraint matrix (rows x 5 monomial coeffs),
// orthonormalized.  Gaussian elimination with partial pivoting.
std::vector<std::vector<double>> nullspace(std::vector<std::vector<double>> A, int ncols) {
    int nrows = static_cast<int>(A.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = r;
        for (int k = r + 1; k < nrows; ++k)
            if (std::abs(A[k][c]) > std::abs(A[p][c])) p = k;
        if (std::abs(A[p][c]) < 1e-13) continue;
        std::swap(A[p], A[r]);
        double piv = A[r][c];
        for (int cc = 0; cc < ncols; ++cc) A[r][cc] /= piv;
        for (int k = 0; k < nrows; ++k) {
            if (k == r) continue;
            double f = A[k][c];
            if (f == 0.0) continue;
            for (int cc = 0; cc < ncols; ++cc) A[k][cc] -= f * A[r][cc];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<double>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<double> v(ncols, 0.0);
        v[c] = 1.0;
        for (int k = 0; k < static_cast<int>(pivot_col.size()); ++k)
            v[pivot_col[k]] = -A[k][c];
        basis.push_back(v);
    }
    // Gram-Schmidt for conditioning.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            double dot = 0.0;
            for (int c = 0; c < ncols; ++c) dot += basis[i][c] * basis[k][c];
            for (int c = 0; c < ncols; ++c) basis[i][c] -= dot * basis[k][c];
        }
        double nrm = 0.0;
        for (int c = 0; c < ncols; ++c) nrm += basis[i][c] * basis[i][c];
        nrm = std::sqrt(nrm);
        for (int c = 0; c < ncols; ++c) basis[i][c] /= nrm;
    }
    return basis;
}

std::vector<double> eval_row(double z0) {
    std::vector<double> r(5);
    double p = 1.0;
    for (int d = 0; d < 5; ++d) { r[d] = p; p *= z0; }
    return r;
}

std::vector<double> deriv_row(double z0) {
    std::vector<double> r(5, 0.0);
    double p = 1.0;
    for (int d = 1; d < 5; ++d) { r[d] = d * p; p *= z0; }
    return r;
}

std::vector<double> integral_row(double h) {
    // int_{-h}^0 z^d dz = -(-h)^{d+1}/(d+1)
    std::vector<double> r(5);
    double p = -h;
    for (int d = 0; d < 5; ++d) { r[d] = -p / (d + 1); p *= -h; }
    return r;
}

std::vector<double> robin_row(double alpha) {
    return {alpha, 1.0, 0.0, 0.0, 0.0};
}

} // namespace

double AnalyticComponent::eval(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double X = t.cosine ? std::cos(w * x) : std::sin(w * x);
        s += t.amp * X * poly_eval(t.pz, z);
    }
    return s;
}

double AnalyticComponent::dx(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double Xp = t.cosine ? -w * std::sin(w * x) : w * std::cos(w * x);
        s += t.amp * Xp * poly_eval(t.pz, z);
    }
    return s;
}

double AnalyticComponent::dz(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double X = t.cosine ? std::cos(w * x) : std::sin(w * x);
        s += t.amp * X * poly_eval(poly_derivative(t.pz), z);
    }
    return s;
}

double AnalyticComponent::dxx(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double X = t.cosine ? std::cos(w * x) : std::sin(w * x);
        s += -w * w * t.amp * X * poly_eval(t.pz, z);
    }
    return s;
}

double AnalyticComponent::dzz(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double X = t.cosine ? std::cos(w * x) : std::sin(w * x);
        s += t.amp * X * poly_eval(poly_derivative(poly_derivative(t.pz)), z);
    }
    return s;
}

double AnalyticComponent::dxz(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double Xp = t.cosine ? -w * std::sin(w * x) : w * std::cos(w * x);
        s += t.amp * Xp * poly_eval(poly_derivative(t.pz), z);
    }
    return s;
}

double AnalyticComponent::int_z_to_0(double x, double z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        double X = t.cosine ? std::cos(w * x) : std::sin(w * x);
        s += t.amp * X * (-poly_eval(poly_antiderivative(t.pz), z));
    }
    return s;
}

ScalarField AnalyticComponent::to_grid(const DomainSpec& dom, BcTag tag) const {
    ScalarField out(dom, tag);
    std::vector<double> xs(dom.nx), zs(dom.nz);
    for (const auto& t : terms_) {
        double w = M_PI * t.m / L_;
        for (int i = 0; i < dom.nx; ++i)
            xs[i] = t.cosine ? std::cos(w * dom.x(i)) : std::sin(w * dom.x(i));
        for (int j = 0; j < dom.nz; ++j) zs[j] = poly_eval(t.pz, dom.z(j));
        for (int i = 0; i < dom.nx; ++i) {
            double axi = t.amp * xs[i];
            for (int j = 0; j < dom.nz; ++j) out(i, j) += axi * zs[j];
        }
    }
    return out;
}

SmoothSampler::SmoothSampler(const DomainSpec& dom, int x_modes)
    : dom_(dom), x_modes_(x_modes) {
    double h = dom.h;
    u_profiles_ = nullspace({eval_row(-h), robin_row(dom.alpha_v), integral_row(h)}, 5);
    v_profiles_ = nullspace({eval_row(-h), robin_row(dom.alpha_v)}, 5);
    T_profiles_ = nullspace({deriv_row(-h), robin_row(dom.alpha_T)}, 5);
}

const std::vector<std::vector<double>>& SmoothSampler::profiles(ComponentKind kind) const {
    switch (kind) {
    case ComponentKind::U: return u_profiles_;
    case ComponentKind::V: return v_profiles_;
    default: return T_profiles_;
    }
}

AnalyticComponent SmoothSampler::sample_component(ComponentKind kind, uint64_t seed,
                                                  uint32_t sample, uint32_t channel) const {
    const auto& profs = profiles(kind);
    std::vector<TrigPolyTerm> terms;
    uint32_t counter = 0;
    int m0 = kind == ComponentKind::T ? 0 : 1;
    for (int m = m0; m < m0 + x_modes_; ++m) {
        for (std::size_t r = 0; r < profs.size(); ++r) {
            double c = 2.0 * uniform_draw(seed, sample, counter++, channel, rng_salt::sampler) - 1.0;
            TrigPolyTerm t;
            t.amp = c;
            t.m = m;
            t.cosine = kind == ComponentKind::T;
            t.pz = profs[r];
            terms.push_back(std::move(t));
        }
    }
    return AnalyticComponent(dom_.L, std::move(terms));
}

AnalyticState SmoothSampler::sample_state(uint64_t seed, uint32_t sample) const {
    AnalyticState s;
    s.u = sample_component(ComponentKind::U, seed, sample, 0);
    s.v = sample_component(ComponentKind::V, seed, sample, 1);
    s.T = sample_component(ComponentKind::T, seed, sample, 2);
    return s;
}

AnalyticState SmoothSampler::envelope(int k, double gamma) const {
    double amp = std::pow(static_cast<double>(k + 1), -gamma);
    AnalyticState s;
    auto make = [&](ComponentKind kind, int shift) {
        const auto& profs = profiles(kind);
        int m0 = kind == ComponentKind::T ? 0 : 1;
        TrigPolyTerm t;
        t.amp = amp;
        t.m = m0 + (k + shift) % x_modes_;
        t.cosine = kind == ComponentKind::T;
        t.pz = profs[(k / x_modes_ + shift) % profs.size()];
        return AnalyticComponent(dom_.L, {t});
    };
    s.u = make(ComponentKind::U, 0);
    s.v = make(ComponentKind::V, 1);
    s.T = make(ComponentKind::T, 2);
    return s;
}

} // namespace spe2d
