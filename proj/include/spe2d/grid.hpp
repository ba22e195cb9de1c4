#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spe2d {

/// Boundary segments of the rectangle (0,L) x (-h,0).
/// Corner nodes belong to the lateral segment, so the three index
/// sets are disjoint and their union is the whole grid boundary.
enum class Boundary { Surface, Bottom, Lateral };

/// Uniform tensor grid on the closed rectangle [0,L] x [-h,0].
///
/// Nodes sit at cell boundaries including the physical boundary:
/// x_i = i*dx (i = 0..nx-1), z_j = -h + j*dz (j = 0..nz-1), so j = 0 is
/// the bottom and j = nz-1 the free surface.  Quadrature is the tensor
/// trapezoid rule; together with the centered/one-sided first-derivative
/// stencils in calculus.hpp it forms an exact summation-by-parts pair.
struct DomainSpec {
    double L = 1.0;      ///< horizontal extent, > 0
    double h = 1.0;      ///< depth, > 0
    int nx = 32;         ///< nodes in x (>= 4)
    int nz = 32;         ///< nodes in z (>= 4)
    double alpha_v = 1.0; ///< Robin coefficient for velocity on the surface, >= 0
    double alpha_T = 1.0; ///< Robin coefficient for temperature on the surface, >= 0

    DomainSpec() = default;
    DomainSpec(double L_, double h_, int nx_, int nz_, double av, double aT)
        : L(L_), h(h_), nx(nx_), nz(nz_), alpha_v(av), alpha_T(aT) {
        validate();
    }

    void validate() const;

    double dx() const { return L / (nx - 1); }
    double dz() const { return h / (nz - 1); }
    double x(int i) const { return i * dx(); }
    double z(int j) const { return -h + j * dz(); }

    /// Trapezoid weight in x (dx/2 at the two lateral columns).
    double wx(int i) const { return (i == 0 || i == nx - 1) ? 0.5 * dx() : dx(); }
    /// Trapezoid weight in z (dz/2 at bottom and surface).
    double wz(int j) const { return (j == 0 || j == nz - 1) ? 0.5 * dz() : dz(); }
    /// 2-D quadrature weight of node (i,j).
    double w(int i, int j) const { return wx(i) * wz(j); }

    std::size_t size() const { return static_cast<std::size_t>(nx) * nz; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * nz + j; }

    bool on_surface(int i, int j) const { return j == nz - 1 && i > 0 && i < nx - 1; }
    bool on_bottom(int i, int j) const { return j == 0 && i > 0 && i < nx - 1; }
    bool on_lateral(int i, int /*j*/) const { return i == 0 || i == nx - 1; }
    bool on_boundary(int i, int j) const {
        return i == 0 || i == nx - 1 || j == 0 || j == nz - 1;
    }

    /// Index set of one boundary segment (disjoint tagging, corners lateral).
    std::vector<std::size_t> boundary_nodes(Boundary b) const;

    bool operator==(const DomainSpec&) const = default;
};

/// Thrown when two fields from different domains are combined, or an
/// operation's input violates its contract.
class contract_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline void require_same_domain(const DomainSpec& a, const DomainSpec& b,
                                const char* what) {
    if (!(a == b)) throw contract_error(std::string(what) + ": domain mismatch");
}

} // namespace spe2d
