#include "aircov/deployment.hpp"

#include <cmath>

#include "aircov/errors.hpp"

namespace aircov {

void validate(const deployment& dep) {
    if (!(dep.h_m > 0.0))
        throw validation_error("deployment: height must be positive");
    if (!std::isfinite(dep.t_dbm))
        throw validation_error("deployment: transmit power must be finite");
    if (!(dep.f_ghz > 0.0))
        throw validation_error("deployment: frequency must be positive");
    if (!std::isfinite(dep.pl_max_db))
        throw validation_error("deployment: path loss budget must be finite");
    if (!(dep.sigma_l_db > 0.0))
        throw validation_error("deployment: sigma_l must be positive");
    if (!(dep.sigma_n_db > 0.0))
        throw validation_error("deployment: sigma_n must be positive");
    if (!(dep.epsilon > 0.0 && dep.epsilon < 1.0))
        throw validation_error("deployment: epsilon must be in (0, 1)");
    if (!(dep.env.m > 0.0) || !(dep.env.n > 0.0))
        throw validation_error("deployment: environment fit parameters m, n must be positive");
    validate(dep.antenna);
}

deployment make_deployment(double h_m, double b_deg,
                           double f_ghz, double pl_max_db, double epsilon) {
    deployment dep;
    dep.h_m = h_m;
    dep.f_ghz = f_ghz;
    dep.pl_max_db = pl_max_db;
    dep.epsilon = epsilon;
    dep.shadow = shadowing_table(f_ghz);
    dep.antenna.b_phi_deg = b_deg;
    dep.antenna.b_theta_deg = b_deg;
    validate(dep);
    return dep;
}

} // namespace aircov
