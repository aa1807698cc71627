#ifndef AIRCOV_DEPLOYMENT_HPP
#define AIRCOV_DEPLOYMENT_HPP

#include "aircov/antenna.hpp"
#include "aircov/channel.hpp"

namespace aircov {

// One full scenario: platform, link budget, randomness spreads, coverage
// threshold, environment and shadowing tables, antenna.
//
// sigma_l defaults to 3.0 dB and sigma_n to 8.0 dB. Neither spread comes
// from a published table; 3.0/8.0 are calibration defaults chosen so the
// shipped model reproduces the documented coverage landmarks. Both are
// plain fields, always echoed into output headers.
struct deployment {
    double h_m = 1000.0;
    double t_dbm = 40.0;
    double f_ghz = 2.0;
    double pl_max_db = 115.0;
    double sigma_l_db = 3.0;
    double sigma_n_db = 8.0;
    double epsilon = 0.8;
    environment env = suburban_env();
    shadowing_params shadow = shadowing_table(2.0);
    antenna_pattern antenna;

    // Receiver threshold in dBm; derived, never stored.
    double gamma_dbm() const { return t_dbm - pl_max_db; }
};

// Throws validation_error on any out-of-range field.
void validate(const deployment& dep);

// Convenience: deployment with the shadowing row looked up for f_ghz.
deployment make_deployment(double h_m, double b_deg,
                           double f_ghz = 2.0, double pl_max_db = 115.0,
                           double epsilon = 0.8);

} // namespace aircov

#endif
