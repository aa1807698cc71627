#ifndef AIRCOV_RSS_DIST_HPP
#define AIRCOV_RSS_DIST_HPP

#include <vector>

#include "aircov/deployment.hpp"

namespace aircov {

// Moments of the received-signal-strength distribution at one ground
// distance, under the weighted-sum signal model.
struct rss_distribution {
    double a1_dbm;     // deterministic link term: T + circular gain - FSPL
    double mu_s_dbm;   // a1 - P_nlos * mu_sh
    double sigma_s_db; // sqrt((P_los*sigma_l)^2 + P_nlos^2*(sigma_n^2 + sigma_sh^2))
    double p_los;
};

rss_distribution rss_moments(double r_m, const deployment& dep);

// Gaussian density of the RSS at distance r, evaluated at s dBm.
double rss_pdf(double s_dbm, double r_m, const deployment& dep);

// The two weighted component densities whose convolution is the RSS pdf:
// the LoS part has mean P_l*A1 and spread P_l*sigma_l, the NLoS part mean
// P_n*(A1 - mu_sh) and spread P_n*sqrt(sigma_n^2 + sigma_sh^2). A component
// whose probability weight is 0 degenerates to a point mass at 0 and is
// flagged instead of evaluated.
struct component_density {
    double mean;
    double sigma;
    bool degenerate; // point mass: weight was exactly 0 or 1
};

struct rss_components {
    component_density s_los;
    component_density s_nlos;
};

rss_components component_moments(double r_m, const deployment& dep);

// Densities of the two components at s; degenerate components return 0
// density (their mass sits in a delta at the mean).
std::pair<double, double> component_pdfs(double s_dbm, double r_m, const deployment& dep);

// RSS density averaged over a square region of the given side centered on
// the nadir, evaluated on s_grid. Midpoint quadrature on an n x n spatial
// grid; n defaults to 200 and the result of n is accepted once the relative
// change from n/2 is below 1e-3 (raises numerical_error otherwise).
std::vector<double> area_pdf(const deployment& dep, double side_m,
                             const std::vector<double>& s_grid,
                             std::size_t n_grid = 200, unsigned threads = 0);

} // namespace aircov

#endif
