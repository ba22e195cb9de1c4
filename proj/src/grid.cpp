#include "spe2d/grid.hpp"

namespace spe2d {

void DomainSpec::validate() const {
    if (!(L > 0.0)) throw contract_error("DomainSpec: L must be > 0");
    if (!(h > 0.0)) throw contract_error("DomainSpec: h must be > 0");
    if (nx < 4) throw contract_error("DomainSpec: nx must be >= 4");
    if (nz < 4) throw contract_error("DomainSpec: nz must be >= 4");
    if (!(alpha_v >= 0.0)) throw contract_error("DomainSpec: alpha_v must be >= 0");
    if (!(alpha_T >= 0.0)) throw contract_error("DomainSpec: alpha_T must be >= 0");
}

std::vector<std::size_t> DomainSpec::boundary_nodes(Boundary b) const {
    std::vector<std::size_t> out;
    switch (b) {
    case Boundary::Surface:
        for (int i = 1; i < nx - 1; ++i) out.push_back(idx(i, nz - 1));
        break;
    case Boundary::Bottom:
        for (int i = 1; i < nx - 1; ++i) out.push_back(idx(i, 0));
        break;
    case Boundary::Lateral:
        for (int j = 0; j < nz; ++j) {
            out.push_back(idx(0, j));
            out.push_back(idx(nx - 1, j));
        }
        break;
    }
    return out;
}

} // namespace spe2d
