#include "mixnorm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mixnorm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSeriesCutoff = 30.0;   // ascending series below, scaled above
constexpr double kTermTol = 1e-17;       // term / partial-sum stopping rule
constexpr int kMaxTerms = 500;
}  // namespace

SpectralLevel hermite_level(int k, int n) {
    if (k < 0) throw std::invalid_argument("hermite_level: k must be >= 0");
    return {k, 2.0 * k + n};
}

SpectralLevel laguerre_level(int k, double alpha) {
    if (k < 0) throw std::invalid_argument("laguerre_level: k must be >= 0");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre_level: alpha must be > -1");
    return {k, 4.0 * k + 2.0 * alpha + 2.0};
}

double hermite_fn_1d(int k, double x) {
    if (k < 0) throw std::invalid_argument("hermite_fn_1d: k must be >= 0");
    const double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    if (k == 0) return h0;
    double hm1 = h0;
    double h = std::sqrt(2.0) * x * h0;
    for (int j = 2; j <= k; ++j) {
        const double hj = x * std::sqrt(2.0 / j) * h - std::sqrt((j - 1.0) / j) * hm1;
        hm1 = h;
        h = hj;
    }
    return h;
}

double hermite_poly_1d(int k, double x) {
    if (k < 0) throw std::invalid_argument("hermite_poly_1d: k must be >= 0");
    const double p0 = std::pow(kPi, -0.25);
    if (k == 0) return p0;
    double pm1 = p0;
    double p = std::sqrt(2.0) * x * p0;
    for (int j = 2; j <= k; ++j) {
        const double pj = x * std::sqrt(2.0 / j) * p - std::sqrt((j - 1.0) / j) * pm1;
        pm1 = p;
        p = pj;
    }
    return p;
}

double laguerre_psi(int k, double alpha, double r) {
    if (k < 0) throw std::invalid_argument("laguerre_psi: k must be >= 0");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre_psi: alpha must be > -1");
    if (r < 0.0) throw std::invalid_argument("laguerre_psi: r must be >= 0");
    const double x = r * r;
    // Recurrence on the orthonormal functions ell_k = sqrt(k!/Gamma(k+a+1)) L_k^a(x) e^{-x/2}:
    //   sqrt((k+1)(k+1+a)) ell_{k+1} = (2k+1+a-x) ell_k - sqrt(k(k+a)) ell_{k-1}.
    const double ell0 = std::exp(-0.5 * x - 0.5 * std::lgamma(alpha + 1.0));
    if (k == 0) return std::sqrt(2.0) * ell0;
    double em1 = ell0;
    double e = (1.0 + alpha - x) * ell0 / std::sqrt(1.0 + alpha);
    for (int j = 1; j < k; ++j) {
        const double ej = ((2.0 * j + 1.0 + alpha - x) * e - std::sqrt(j * (j + alpha)) * em1)
                          / std::sqrt((j + 1.0) * (j + 1.0 + alpha));
        em1 = e;
        e = ej;
    }
    return std::sqrt(2.0) * e;
}

double ultraspherical_P(int m, int n, double u) {
    if (m < 0) throw std::invalid_argument("ultraspherical_P: m must be >= 0");
    if (n < 2) throw std::invalid_argument("ultraspherical_P: n must be >= 2");
    if (std::abs(u) > 1.0 + 1e-12)
        throw std::invalid_argument("ultraspherical_P: |u| must be <= 1");
    u = std::clamp(u, -1.0, 1.0);
    if (m == 0) return 1.0;
    if (m == 1) return u;
    const double lambda = 0.5 * n - 1.0;
    // Normalised recurrence (value 1 at u = 1), uniform in n >= 2:
    //   (m + 2*lambda) P_{m+1} = 2 (m + lambda) u P_m - m P_{m-1}.
    double pm1 = 1.0;
    double p = u;
    for (int j = 1; j < m; ++j) {
        const double pj = (2.0 * (j + lambda) * u * p - j * pm1) / (j + 2.0 * lambda);
        pm1 = p;
        p = pj;
    }
    return p;
}

namespace {

// Ascending series for I_alpha(z), valid for modest z.
double bessel_series(double alpha, double z) {
    const double q = 0.25 * z * z;
    double term = std::exp(alpha * std::log(0.5 * z) - std::lgamma(alpha + 1.0));
    if (z == 0.0) term = (alpha == 0.0) ? 1.0 : 0.0;
    double sum = term;
    for (int j = 1; j <= kMaxTerms; ++j) {
        term *= q / (j * (j + alpha));
        sum += term;
        if (term < kTermTol * sum) break;
    }
    return sum;
}

// log I_alpha(z) by summing the series relative to its largest term; handles
// large z without overflow.  Terms t_j = (z/2)^{alpha+2j} / (j! Gamma(alpha+j+1)).
double log_bessel_series(double alpha, double z) {
    const double lhalf = std::log(0.5 * z);
    // Peak index from t_{j+1}/t_j = (z/2)^2 / ((j+1)(j+alpha+1)) = 1.
    const double disc = std::sqrt(std::max(0.0, 0.25 * alpha * alpha + 0.25 * z * z));
    int jpeak = static_cast<int>(std::max(0.0, disc - 0.5 * alpha - 0.5));
    const double logpeak =
        (alpha + 2.0 * jpeak) * lhalf - std::lgamma(jpeak + 1.0) - std::lgamma(alpha + jpeak + 1.0);
    // Sum outward from the peak by term ratios.
    double sum = 1.0;
    double term = 1.0;
    for (int j = jpeak + 1; j <= jpeak + kMaxTerms; ++j) {
        term *= 0.25 * z * z / (static_cast<double>(j) * (j + alpha));
        sum += term;
        if (term < kTermTol * sum) break;
    }
    term = 1.0;
    for (int j = jpeak; j >= 1 && jpeak - j < kMaxTerms; --j) {
        term *= (static_cast<double>(j) * (j + alpha)) / (0.25 * z * z);
        sum += term;
        if (term < kTermTol * sum) break;
    }
    return logpeak + std::log(sum);
}

}  // namespace

double bessel_I(double alpha, double z) {
    if (alpha <= -1.0) throw std::invalid_argument("bessel_I: alpha must be > -1");
    if (z < 0.0) throw std::invalid_argument("bessel_I: z must be >= 0");
    if (z <= kSeriesCutoff) return bessel_series(alpha, z);
    return std::exp(log_bessel_series(alpha, z));
}

double bessel_I_scaled(double alpha, double z) {
    if (alpha <= -1.0) throw std::invalid_argument("bessel_I_scaled: alpha must be > -1");
    if (z < 0.0) throw std::invalid_argument("bessel_I_scaled: z must be >= 0");
    if (z <= kSeriesCutoff) return std::exp(-z) * bessel_series(alpha, z);
    return std::exp(log_bessel_series(alpha, z) - z);
}

double log_bessel_I_scaled(double alpha, double z) {
    if (alpha <= -1.0) throw std::invalid_argument("log_bessel_I_scaled: alpha must be > -1");
    if (z < 0.0) throw std::invalid_argument("log_bessel_I_scaled: z must be >= 0");
    if (z == 0.0) return (alpha == 0.0) ? 0.0 : -std::numeric_limits<double>::infinity();
    if (z <= kSeriesCutoff) return std::log(bessel_series(alpha, z)) - z;
    return log_bessel_series(alpha, z) - z;
}

double bessel_I_ratio(double alpha, int shift, double rs, double c) {
    if (alpha <= -1.0) throw std::invalid_argument("bessel_I_ratio: alpha must be > -1");
    if (shift < 0) throw std::invalid_argument("bessel_I_ratio: shift must be >= 0");
    if (rs < 0.0 || c <= 0.0) throw std::invalid_argument("bessel_I_ratio: rs >= 0, c > 0 required");
    const double z = rs * c;
    const double nu = alpha + shift;
    if (z <= kSeriesCutoff) {
        // (rs)^{-alpha} I_{nu}(z) = (c/2)^alpha (z/2)^shift sum_j (z^2/4)^j / (j! Gamma(nu+j+1))
        const double q = 0.25 * z * z;
        double term = 1.0 / std::exp(std::lgamma(nu + 1.0));
        double sum = term;
        for (int j = 1; j <= kMaxTerms; ++j) {
            term *= q / (j * (j + nu));
            sum += term;
            if (term < kTermTol * sum) break;
        }
        return std::exp(alpha * std::log(0.5 * c)) * std::pow(0.5 * z, shift) * sum;
    }
    return std::exp(log_bessel_series(nu, z) - alpha * std::log(rs));
}

double log_gamma_ratio(double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::invalid_argument("log_gamma_ratio: arguments must be > 0");
    if (a == b) return 0.0;
    // When a - b is a small integer, use Gamma(x+1) = x Gamma(x) directly.
    const double d = a - b;
    const double rd = std::round(d);
    if (std::abs(d - rd) < 1e-14 && std::abs(rd) <= 256.0) {
        const int steps = static_cast<int>(std::abs(rd));
        const double lo = std::min(a, b);
        double acc = 0.0;
        for (int i = 0; i < steps; ++i) acc += std::log(lo + i);
        return (a > b) ? acc : -acc;
    }
    return std::lgamma(a) - std::lgamma(b);
}

double pochhammer(double a, int m) {
    if (m < 0) throw std::invalid_argument("pochhammer: m must be >= 0");
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= a + i;
    return p;
}

double sphere_surface_measure(int n) {
    if (n < 1) throw std::invalid_argument("sphere_surface_measure: n must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * n) / std::exp(std::lgamma(0.5 * n));
}

}  // namespace mixnorm
