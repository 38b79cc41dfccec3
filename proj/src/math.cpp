#include "bads/math.hpp"

#include <algorithm>
#include <vector>

namespace bads {

double norm_ppf(double p) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    if (p >= 1.0) return std::numeric_limits<double>::infinity();

    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num =
            (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                  6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
              1.3314166789178437745e2) * r + 3.3871328727963666080e0);
        const double den =
            (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                  3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
              4.2313330701600911252e1) * r + 1.0);
        return q * num / den;
    }

    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0);
        const double den =
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
        value = num / den;
    } else {
        r -= 5.0;
        const double num =
            (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0);
        const double den =
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
        value = num / den;
    }
    return (q < 0.0) ? -value : value;
}

double data_quantile(const Vector& values, double q) {
    std::vector<double> v(values.data(), values.data() + values.size());
    std::sort(v.begin(), v.end());
    if (v.size() == 1) return v[0];
    const double h = (static_cast<double>(v.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= v.size()) return v.back();
    return v[lo] + (h - static_cast<double>(lo)) * (v[lo + 1] - v[lo]);
}

double data_stddev(const Vector& values) {
    const double n = static_cast<double>(values.size());
    if (n < 2) return 0.0;
    const double mean = values.mean();
    return std::sqrt((values.array() - mean).square().sum() / (n - 1.0));
}

namespace {

double poly(const double* c, int order, double x) {
    double v = c[0];
    double xp = 1.0;
    for (int i = 1; i < order; ++i) {
        xp *= x;
        v += c[i] * xp;
    }
    return v;
}

}  // namespace

double shapiro_wilk_p(const Vector& sample) {
    const int n = static_cast<int>(sample.size());
    if (n < 3) return 1.0;

    std::vector<double> x(sample.data(), sample.data() + n);
    std::sort(x.begin(), x.end());
    const double range = x.back() - x.front();
    if (!(range > 1e-12 * (1.0 + std::abs(x.front())))) return 0.0;

    // Approximate normal-order-statistic weights (Royston 1992).
    std::vector<double> m(n);
    double ssq_m = 0.0;
    for (int i = 0; i < n; ++i) {
        m[i] = norm_ppf((i + 1 - 0.375) / (n + 0.25));
        ssq_m += m[i] * m[i];
    }

    std::vector<double> a(n);
    if (n == 3) {
        a[0] = -M_SQRT1_2;
        a[1] = 0.0;
        a[2] = M_SQRT1_2;
    } else {
        static const double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
        static const double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
        const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
        const double an = m[n - 1] / std::sqrt(ssq_m) + poly(c1, 6, rsn);
        double phi;
        if (n > 5) {
            const double an1 = m[n - 2] / std::sqrt(ssq_m) + poly(c2, 6, rsn);
            phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                  (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
            a[n - 2] = an1;
            a[1] = -an1;
        } else {
            phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
        }
        a[n - 1] = an;
        a[0] = -an;
        const int i1 = (n > 5) ? 2 : 1;
        for (int i = i1; i < n - i1; ++i) a[i] = m[i] / std::sqrt(phi);
    }

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += a[i] * x[i];
        den += (x[i] - mean) * (x[i] - mean);
    }
    double w = num * num / den;
    w = std::min(w, 1.0);
    if (1.0 - w <= 1e-15 && n > 3) return 1.0;

    if (n == 3) {
        const double pi6 = 6.0 / M_PI;
        const double stqr = std::asin(std::sqrt(0.75));
        const double p = pi6 * (std::asin(std::sqrt(w)) - stqr);
        return std::clamp(p, 0.0, 1.0);
    }

    double z;
    if (n <= 11) {
        static const double c3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
        static const double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
        const double gamma = -2.273 + 0.459 * n;
        const double lw = gamma - std::log(1.0 - w);
        if (lw <= 0.0) return 0.0;
        const double wprime = -std::log(lw);
        z = (wprime - poly(c3, 4, static_cast<double>(n))) /
            std::exp(poly(c4, 4, static_cast<double>(n)));
    } else {
        static const double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
        static const double c6[3] = {-0.4803, -0.082676, 0.0030302};
        const double ln_n = std::log(static_cast<double>(n));
        const double one_minus_w = std::max(1.0 - w, 1e-300);
        const double wprime = std::log(one_minus_w);
        z = (wprime - poly(c5, 4, ln_n)) / std::exp(poly(c6, 3, ln_n));
    }
    return norm_cdf(-z);
}

}  // namespace bads
