#include "spe2d/field.hpp"

namespace spe2d {

double StateField::constraint_residual() const {
    const DomainSpec& d = domain();
    double worst = 0.0;
    for (int i = 0; i < d.nx; ++i) {
        double s = 0.0;
        for (int j = 0; j < d.nz; ++j) s += d.wz(j) * u(i, j);
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

void StateField::require_constraint(double tol_rel) const {
    double scale = domain().h * u.max_abs();
    if (scale == 0.0) return;
    if (constraint_residual() > tol_rel * scale)
        throw contract_error("StateField: vertical-mean constraint on u violated");
}

} // namespace spe2d
