#ifndef AIRCOV_MATH_HPP
#define AIRCOV_MATH_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace aircov {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline double deg2rad(double deg) { return deg * (pi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / pi); }

// Gaussian tail probability Q(z) = P(Z > z) for standard normal Z.
inline double q_function(double z) {
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

inline double normal_pdf(double x, double mu, double sigma) {
    const double inv = 1.0 / (sigma * std::sqrt(2.0 * pi));
    const double t = (x - mu) / sigma;
    return inv * std::exp(-0.5 * t * t);
}

// Inverse standard normal CDF, Wichura's PPND16 rational approximation.
// Absolute error below 1e-15 over (0, 1); used instead of the platform's
// erf family so that sample streams are identical across libm versions.
double normal_inv(double p);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
// Series for x < a+1, continued fraction otherwise.
double gamma_q(double a, double x);

// p-value of a chi-square statistic with the given degrees of freedom.
inline double chi2_pvalue(double stat, double dof) {
    return gamma_q(0.5 * dof, 0.5 * stat);
}

// 95% two-sided z, pinned so confidence intervals never depend on libm's
// inverse-erf. normal_inv(0.975) reproduces it; the constant is the contract.
inline constexpr double wilson_z95 = 1.959963984540054;

struct wilson_interval {
    double p_hat;
    double low;
    double high;
};

wilson_interval wilson_score(std::size_t successes, std::size_t trials, double z = wilson_z95);

// Deterministic sum: fixed-size blocks summed left to right, then a pairwise
// tree over the block partials. The result depends only on the value sequence,
// never on how the work was split across threads.
double block_pairwise_sum(const std::vector<double>& block_partials);

} // namespace aircov

#endif
