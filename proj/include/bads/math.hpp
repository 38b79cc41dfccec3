#pragma once

#include "bads/types.hpp"

#include <cmath>

namespace bads {

inline double norm_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

inline double norm_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

// Inverse standard normal CDF (Wichura's AS 241, double precision).
double norm_ppf(double p);

// q-th quantile of a data set, linear interpolation between order statistics.
double data_quantile(const Vector& values, double q);

double data_stddev(const Vector& values);

// Shapiro-Wilk normality test p-value (Royston's approximation).
// Requires 3 <= n <= 5000; a zero-range sample returns p = 0.
double shapiro_wilk_p(const Vector& sample);

}  // namespace bads
