#include "mixnorm/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "mixnorm/specfun.hpp"

namespace mixnorm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Golub-Welsch: nodes/weights of a Gauss rule from the monic three-term
// recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}, b_k > 0, with mu0 the
// total mass of the weight.
QuadratureRule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                            double mu0, std::string descriptor) {
    const int N = static_cast<int>(a.size());
    Eigen::VectorXd diag(N), sub(N - 1 > 0 ? N - 1 : 0);
    for (int i = 0; i < N; ++i) diag[i] = a[i];
    for (int i = 0; i + 1 < N; ++i) sub[i] = std::sqrt(b[i + 1]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    QuadratureRule rule;
    rule.nodes.resize(N);
    rule.weights.resize(N);
    for (int i = 0; i < N; ++i) {
        rule.nodes[i] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    rule.declared_weight = std::move(descriptor);
    return rule;
}
}  // namespace

QuadratureRule gauss_legendre(int N) {
    if (N < 1) throw std::invalid_argument("gauss_legendre: N must be >= 1");
    std::vector<double> a(N, 0.0), b(N, 0.0);
    for (int k = 1; k < N; ++k) b[k] = k * k / (4.0 * k * k - 1.0);
    return golub_welsch(a, b, 2.0, "legendre on [-1,1]");
}

QuadratureRule gauss_legendre_ab(int N, double lo, double hi) {
    QuadratureRule rule = gauss_legendre(N);
    const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    for (int i = 0; i < N; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    rule.declared_weight = "legendre on [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    return rule;
}

QuadratureRule gauss_jacobi_general(int N, double a, double b) {
    if (N < 1) throw std::invalid_argument("gauss_jacobi_general: N must be >= 1");
    if (a <= -1.0 || b <= -1.0)
        throw std::invalid_argument("gauss_jacobi_general: exponents must be > -1");
    const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    std::vector<double> alpha(N), beta(N, 0.0);
    alpha[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < N; ++k) {
        const double s = 2.0 * k + a + b;
        alpha[k] = (b * b - a * a) / (s * (s + 2.0));
        if (k == 1)
            beta[k] = 4.0 * (a + 1.0) * (b + 1.0) /
                      ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else
            beta[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                      (s * s * (s + 1.0) * (s - 1.0));
    }
    return golub_welsch(alpha, beta, mu0,
                        "jacobi(" + std::to_string(a) + "," + std::to_string(b) + ") on [-1,1]");
}

QuadratureRule gauss_jacobi(int N, int n) {
    if (N < 1) throw std::invalid_argument("gauss_jacobi: N must be >= 1");
    if (n < 2) throw std::invalid_argument("gauss_jacobi: n must be >= 2");
    if (n == 2) {
        // Gauss-Chebyshev, weight (1-u^2)^{-1/2}: closed-form nodes.
        QuadratureRule rule;
        rule.nodes.resize(N);
        rule.weights.assign(N, kPi / N);
        for (int i = 0; i < N; ++i)
            rule.nodes[i] = std::cos(kPi * (N - i - 0.5) / N);
        rule.declared_weight = "jacobi(-0.5,-0.5) on [-1,1]";
        return rule;
    }
    if (n == 3) {
        QuadratureRule rule = gauss_legendre(N);
        rule.declared_weight = "jacobi(0,0) on [-1,1]";
        return rule;
    }
    const double e = 0.5 * (n - 3);
    return gauss_jacobi_general(N, e, e);
}

QuadratureRule gauss_laguerre(int N, double gamma) {
    if (N < 1) throw std::invalid_argument("gauss_laguerre: N must be >= 1");
    if (gamma <= -1.0) throw std::invalid_argument("gauss_laguerre: gamma must be > -1");
    std::vector<double> a(N), b(N, 0.0);
    for (int k = 0; k < N; ++k) {
        a[k] = 2.0 * k + gamma + 1.0;
        if (k > 0) b[k] = k * (k + gamma);
    }
    return golub_welsch(a, b, std::exp(std::lgamma(gamma + 1.0)),
                        "laguerre(" + std::to_string(gamma) + ") on [0,inf)");
}

QuadratureRule gauss_hermite(int N) {
    if (N < 1) throw std::invalid_argument("gauss_hermite: N must be >= 1");
    std::vector<double> a(N, 0.0), b(N, 0.0);
    for (int k = 1; k < N; ++k) b[k] = 0.5 * k;
    QuadratureRule rule = golub_welsch(a, b, std::sqrt(kPi), "hermite on R");
    // The eigenvector-based weights at extreme nodes are absolute-eps noise
    // (true values underflow toward e^{-x^2}); rebuild them from the
    // Christoffel function w_i = 1 / sum_k q_k(x_i)^2 over the orthonormal
    // Hermite polynomials, which is stable given the nodes.
    for (int i = 0; i < N; ++i) {
        const double x = rule.nodes[i];
        double q0 = std::pow(kPi, -0.25), q1 = std::sqrt(2.0) * x * q0;
        double sum = q0 * q0;
        if (N > 1) sum += q1 * q1;
        for (int k = 2; k < N; ++k) {
            const double qk = x * std::sqrt(2.0 / k) * q1 - std::sqrt((k - 1.0) / k) * q0;
            sum += qk * qk;
            q0 = q1;
            q1 = qk;
        }
        rule.weights[i] = std::isfinite(sum) ? 1.0 / sum : 0.0;
    }
    return rule;
}

QuadratureRule radial_rule(int N, double exponent, double r_max) {
    if (N < 1) throw std::invalid_argument("radial_rule: N must be >= 1");
    if (r_max <= 0.0) throw std::invalid_argument("radial_rule: R_max must be > 0");
    QuadratureRule rule = gauss_legendre_ab(N, 0.0, r_max);
    for (int i = 0; i < N; ++i) rule.weights[i] *= std::pow(rule.nodes[i], exponent);
    rule.declared_weight =
        "radial(" + std::to_string(exponent) + ") on [0," + std::to_string(r_max) + "]";
    return rule;
}

QuadratureRule radial_rule_like(const QuadratureRule& rule, double old_exponent,
                                double new_exponent) {
    QuadratureRule out = rule;
    for (std::size_t i = 0; i < out.nodes.size(); ++i)
        out.weights[i] *= std::pow(out.nodes[i], new_exponent - old_exponent);
    out.declared_weight = "radial(" + std::to_string(new_exponent) + ")";
    return out;
}

QuadratureRule temporal_rule(int N, int k, double t_max) {
    if (N < 1) throw std::invalid_argument("temporal_rule: N must be >= 1");
    if (k < 1) throw std::invalid_argument("temporal_rule: k must be >= 1");
    if (t_max <= 1.0) throw std::invalid_argument("temporal_rule: t_max must be > 1");
    QuadratureRule rule;
    QuadratureRule inner = gauss_legendre_ab(N, 0.0, 1.0);
    for (int i = 0; i < N; ++i) {
        rule.nodes.push_back(inner.nodes[i]);
        rule.weights.push_back(inner.weights[i] * std::pow(inner.nodes[i], 2 * k - 1));
    }
    // t = e^s on [1, t_max]; dt = t ds.
    QuadratureRule outer = gauss_legendre_ab(N, 0.0, std::log(t_max));
    for (int i = 0; i < N; ++i) {
        const double t = std::exp(outer.nodes[i]);
        rule.nodes.push_back(t);
        rule.weights.push_back(outer.weights[i] * t * std::pow(t, 2 * k - 1));
    }
    rule.declared_weight = "temporal(k=" + std::to_string(k) + ") on (0," +
                           std::to_string(t_max) + "]";
    return rule;
}

QuadratureRule log_temporal_rule(int N, int k, double t_min, double t_max) {
    if (N < 1) throw std::invalid_argument("log_temporal_rule: N must be >= 1");
    if (k < 1) throw std::invalid_argument("log_temporal_rule: k must be >= 1");
    if (t_min <= 0.0 || t_max <= t_min)
        throw std::invalid_argument("log_temporal_rule: need 0 < t_min < t_max");
    QuadratureRule base = gauss_legendre_ab(N, std::log(t_min), std::log(t_max));
    QuadratureRule rule;
    rule.nodes.resize(N);
    rule.weights.resize(N);
    for (int i = 0; i < N; ++i) {
        const double t = std::exp(base.nodes[i]);
        rule.nodes[i] = t;
        rule.weights[i] = base.weights[i] * t * std::pow(t, 2 * k - 1);
    }
    rule.declared_weight = "temporal(k=" + std::to_string(k) + ") log on [" +
                           std::to_string(t_min) + "," + std::to_string(t_max) + "]";
    return rule;
}

SphereRule sphere_rule(int n, int order) {
    if (n != 2 && n != 3) throw std::invalid_argument("sphere_rule: n must be 2 or 3");
    if (order < 0) throw std::invalid_argument("sphere_rule: order must be >= 0");
    SphereRule rule;
    rule.n = n;
    rule.exactness = order;
    if (n == 2) {
        const int M = 2 * order + 1;
        rule.nodes.resize(M);
        rule.weights.assign(M, 2.0 * kPi / M);
        for (int q = 0; q < M; ++q) {
            const double th = 2.0 * kPi * q / M;
            rule.nodes[q] = {std::cos(th), std::sin(th), 0.0};
        }
        return rule;
    }
    const int n_theta = order / 2 + 1;
    const int n_phi = order + 1;
    QuadratureRule gl = gauss_legendre(n_theta);
    rule.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    rule.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int i = 0; i < n_theta; ++i) {
        const double ct = gl.nodes[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int q = 0; q < n_phi; ++q) {
            const double ph = 2.0 * kPi * q / n_phi;
            rule.nodes.push_back({st * std::cos(ph), st * std::sin(ph), ct});
            rule.weights.push_back(gl.weights[i] * 2.0 * kPi / n_phi);
        }
    }
    return rule;
}

}  // namespace mixnorm
