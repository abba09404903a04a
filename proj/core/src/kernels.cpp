#include "mixnorm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "mixnorm/harmonics.hpp"
#include "mixnorm/specfun.hpp"

namespace mixnorm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kBesselBackendMaxZ = 1000.0;  // scaled-series reach
constexpr double kAngularSwitchZ = 60.0;       // Jacobi vs exp-substituted rule

double sq(double x) { return x * x; }

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Stable e^{-c*rho2/2} (rs)^{-alpha} I_{alpha+shift}(rs*sigma): the separate
// factors can over/underflow while the product stays tame.
double damped_bessel_ratio(double alpha, int shift, double c, double sigma, double rs,
                           double rho2) {
    const double z = rs * sigma;
    const double expo = -0.5 * c * rho2;
    if (z <= 30.0) {
        const double e = std::exp(expo);
        return (e == 0.0) ? 0.0 : e * bessel_I_ratio(alpha, shift, rs, sigma);
    }
    const double logval =
        expo + z + log_bessel_I_scaled(alpha + shift, z) - alpha * std::log(rs);
    return (logval < -745.0) ? 0.0 : std::exp(logval);
}

// ---------------------------------------------------------------------------
// Exact d^k/dt^k of the Laguerre kernel K_t^alpha = sigma E B_0, where
// sigma = csch 2t, c = coth 2t, z = rs sigma, E = exp(-c rho2 / 2) and
// B_i = (rs)^{-alpha} I_{alpha+i}(z).  Differentiation is closed over
// monomials c^pc sigma^ps z^pz rho2^pr E B_i:
//   sigma' = -2 c sigma,  c' = -2 sigma^2,  z' = -2 c z,
//   E'     = sigma^2 rho2 E,
//   B_i'   = -2 c z B_{i+1} - 2 c (alpha+i) B_i.
// ---------------------------------------------------------------------------
struct LagTerm {
    int pc = 0, ps = 0, pz = 0, pr = 0, shift = 0;
    double coef = 0.0;
};

std::vector<LagTerm> lag_derivative_terms(int order, double alpha) {
    std::vector<LagTerm> terms{{0, 1, 0, 0, 0, 1.0}};
    for (int round = 0; round < order; ++round) {
        std::map<std::tuple<int, int, int, int, int>, double> next;
        auto add = [&next](int pc, int ps, int pz, int pr, int shift, double coef) {
            if (coef != 0.0) next[{pc, ps, pz, pr, shift}] += coef;
        };
        for (const LagTerm& t : terms) {
            if (t.pc > 0) add(t.pc - 1, t.ps + 2, t.pz, t.pr, t.shift, -2.0 * t.pc * t.coef);
            if (t.ps > 0) add(t.pc + 1, t.ps, t.pz, t.pr, t.shift, -2.0 * t.ps * t.coef);
            if (t.pz > 0) add(t.pc + 1, t.ps, t.pz, t.pr, t.shift, -2.0 * t.pz * t.coef);
            add(t.pc, t.ps + 2, t.pz, t.pr + 1, t.shift, t.coef);  // from E
            add(t.pc + 1, t.ps, t.pz + 1, t.pr, t.shift + 1, -2.0 * t.coef);
            add(t.pc + 1, t.ps, t.pz, t.pr, t.shift, -2.0 * (alpha + t.shift) * t.coef);
        }
        terms.clear();
        for (const auto& [key, coef] : next)
            terms.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                             std::get<3>(key), std::get<4>(key), coef});
    }
    return terms;
}

double lag_terms_eval(const std::vector<LagTerm>& terms, double alpha, double t, double r,
                      double s) {
    const double sigma = 1.0 / std::sinh(2.0 * t);
    const double c = 1.0 / std::tanh(2.0 * t);
    const double rs = r * s;
    const double z = rs * sigma;
    const double rho2 = r * r + s * s;
    int max_shift = 0;
    for (const auto& t0 : terms) max_shift = std::max(max_shift, t0.shift);
    std::vector<double> eb(max_shift + 1);
    for (int i = 0; i <= max_shift; ++i)
        eb[i] = damped_bessel_ratio(alpha, i, c, sigma, rs, rho2);
    double acc = 0.0;
    for (const auto& t0 : terms) {
        double v = t0.coef * eb[t0.shift];
        if (v == 0.0) continue;
        v *= std::pow(c, t0.pc) * std::pow(sigma, t0.ps) * std::pow(rho2, t0.pr);
        if (t0.pz > 0) v *= std::pow(z, t0.pz);
        acc += v;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Exact d^k/dt^k of the Mehler kernel in K0 form,
//   K = (2 pi)^{-n/2} s2^{n/2} exp(-ct qm/4 - tt qp/4),
// s2 = csch 2t, c2 = coth 2t, ct = coth t, tt = tanh t, qm = |x-y|^2,
// qp = |x+y|^2.  Closed monomial algebra:
//   s2' = -2 c2 s2,  c2' = -2 s2^2,  ct' = 1 - ct^2,  tt' = 1 - tt^2,
//   EXP' = (-qm (1-ct^2)/4 - qp (1-tt^2)/4) EXP.
// Monomial powers of s2 are half-integers for odd n; stored doubled.
// ---------------------------------------------------------------------------
struct MehTerm {
    int s2x2 = 0;  // 2 * power of s2
    int c2 = 0, ct = 0, tt = 0, qm = 0, qp = 0;
    double coef = 0.0;
};

std::vector<MehTerm> mehler_derivative_terms(int order, int n) {
    std::vector<MehTerm> terms{{n, 0, 0, 0, 0, 0, std::pow(2.0 * kPi, -0.5 * n)}};
    for (int round = 0; round < order; ++round) {
        std::map<std::tuple<int, int, int, int, int, int>, double> next;
        auto add = [&next](int s2x2, int c2, int ct, int tt, int qm, int qp, double coef) {
            if (coef != 0.0) next[{s2x2, c2, ct, tt, qm, qp}] += coef;
        };
        for (const MehTerm& t : terms) {
            const double a = 0.5 * t.s2x2;
            if (t.s2x2 != 0) add(t.s2x2, t.c2 + 1, t.ct, t.tt, t.qm, t.qp, -2.0 * a * t.coef);
            if (t.c2 > 0) add(t.s2x2 + 4, t.c2 - 1, t.ct, t.tt, t.qm, t.qp, -2.0 * t.c2 * t.coef);
            if (t.ct > 0) {
                add(t.s2x2, t.c2, t.ct - 1, t.tt, t.qm, t.qp, t.ct * t.coef);
                add(t.s2x2, t.c2, t.ct + 1, t.tt, t.qm, t.qp, -t.ct * t.coef);
            }
            if (t.tt > 0) {
                add(t.s2x2, t.c2, t.ct, t.tt - 1, t.qm, t.qp, t.tt * t.coef);
                add(t.s2x2, t.c2, t.ct, t.tt + 1, t.qm, t.qp, -t.tt * t.coef);
            }
            // from the exponential factor
            add(t.s2x2, t.c2, t.ct, t.tt, t.qm + 1, t.qp, -0.25 * t.coef);
            add(t.s2x2, t.c2, t.ct + 2, t.tt, t.qm + 1, t.qp, 0.25 * t.coef);
            add(t.s2x2, t.c2, t.ct, t.tt, t.qm, t.qp + 1, -0.25 * t.coef);
            add(t.s2x2, t.c2, t.ct, t.tt + 2, t.qm, t.qp + 1, 0.25 * t.coef);
        }
        terms.clear();
        for (const auto& [key, coef] : next)
            terms.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                             std::get<3>(key), std::get<4>(key), std::get<5>(key), coef});
    }
    return terms;
}

struct MehVars {
    double s2, c2, ct, tt;
};

MehVars mehler_vars(double t) {
    return {1.0 / std::sinh(2.0 * t), 1.0 / std::tanh(2.0 * t), 1.0 / std::tanh(t),
            std::tanh(t)};
}

// Polynomial part of the derivative at given (qm, qp); the exponential
// factor is applied by the caller.
double mehler_terms_poly(const std::vector<MehTerm>& terms, const MehVars& v, double qm,
                         double qp) {
    double acc = 0.0;
    for (const auto& t : terms) {
        double val = t.coef * std::pow(v.s2, 0.5 * t.s2x2);
        if (t.c2) val *= std::pow(v.c2, t.c2);
        if (t.ct) val *= std::pow(v.ct, t.ct);
        if (t.tt) val *= std::pow(v.tt, t.tt);
        if (t.qm) val *= std::pow(qm, t.qm);
        if (t.qp) val *= std::pow(qp, t.qp);
        acc += val;
    }
    return acc;
}

}  // namespace

double mehler_kernel(int n, double t, const std::array<double, 3>& x,
                     const std::array<double, 3>& y, MehlerForm form) {
    if (t <= 0.0) throw std::invalid_argument("mehler_kernel: t must be > 0");
    const double pref = std::pow(2.0 * kPi * std::sinh(2.0 * t), -0.5 * n);
    if (form == MehlerForm::Direct) {
        const double c2 = 1.0 / std::tanh(2.0 * t);
        const double s2 = 1.0 / std::sinh(2.0 * t);
        return pref * std::exp(-0.5 * c2 * (dot3(x, x) + dot3(y, y)) + s2 * dot3(x, y));
    }
    double qm = 0.0, qp = 0.0;
    for (int i = 0; i < 3; ++i) {
        qm += sq(x[i] - y[i]);
        qp += sq(x[i] + y[i]);
    }
    return pref * std::exp(-0.25 / std::tanh(t) * qm - 0.25 * std::tanh(t) * qp);
}

double mehler_kernel_k0(int n, double t, double chord, double anti_chord) {
    if (t <= 0.0) throw std::invalid_argument("mehler_kernel_k0: t must be > 0");
    const double pref = std::pow(2.0 * kPi * std::sinh(2.0 * t), -0.5 * n);
    return pref * std::exp(-0.25 / std::tanh(t) * sq(chord) - 0.25 * std::tanh(t) * sq(anti_chord));
}

KernelK0 heat_kernel_k0(int n, double t) {
    if (t <= 0.0) throw std::invalid_argument("heat_kernel_k0: t must be > 0");
    KernelK0 k;
    k.k0 = [n, t](double u, double v) { return mehler_kernel_k0(n, t, u, v); };
    k.descriptor = "heat(t=" + std::to_string(t) + ",n=" + std::to_string(n) + ")";
    return k;
}

double mehler_kernel_dt(int order, int n, double t, double chord, double anti_chord) {
    if (t <= 0.0) throw std::invalid_argument("mehler_kernel_dt: t must be > 0");
    if (order < 0) throw std::invalid_argument("mehler_kernel_dt: order must be >= 0");
    const auto terms = mehler_derivative_terms(order, n);
    const MehVars v = mehler_vars(t);
    const double qm = sq(chord), qp = sq(anti_chord);
    const double e = std::exp(-0.25 * v.ct * qm - 0.25 * v.tt * qp);
    return (e == 0.0) ? 0.0 : e * mehler_terms_poly(terms, v, qm, qp);
}

double laguerre_kernel(double t, double alpha, double r, double s) {
    if (t <= 0.0) throw std::invalid_argument("laguerre_kernel: t must be > 0");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre_kernel: alpha must be > -1");
    if (r < 0.0 || s < 0.0) throw std::invalid_argument("laguerre_kernel: r, s must be >= 0");
    const double sigma = 1.0 / std::sinh(2.0 * t);
    const double c = 1.0 / std::tanh(2.0 * t);
    return sigma * damped_bessel_ratio(alpha, 0, c, sigma, r * s, r * r + s * s);
}

double laguerre_kernel_dt(int order, double t, double alpha, double r, double s) {
    if (t <= 0.0) throw std::invalid_argument("laguerre_kernel_dt: t must be > 0");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre_kernel_dt: alpha must be > -1");
    if (order < 0) throw std::invalid_argument("laguerre_kernel_dt: order must be >= 0");
    const auto terms = lag_derivative_terms(order, alpha);
    return lag_terms_eval(terms, alpha, t, r, s);
}

std::complex<double> disc_kernel_k0(int n, std::complex<double> w, double chord,
                                    double anti_chord) {
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> om = one - w, op = one + w;
    const std::complex<double> pref =
        std::pow(kPi, -0.5 * n) * std::pow(om * op, std::complex<double>(-0.5 * n, 0.0));
    return pref * std::exp(-0.25 * sq(chord) * op / om - 0.25 * sq(anti_chord) * om / op);
}

std::vector<double> projection_kernels_k0(int n, int k_max, double chord, double anti_chord,
                                          double contour_radius, int contour_nodes) {
    if (contour_radius <= 0.0 || contour_radius >= 1.0)
        throw std::invalid_argument("projection_kernels_k0: contour radius must be in (0,1)");
    if (k_max < 0) throw std::invalid_argument("projection_kernels_k0: k_max must be >= 0");
    const int M = contour_nodes;
    std::vector<std::complex<double>> samples(M);
    for (int q = 0; q < M; ++q) {
        const double th = 2.0 * kPi * q / M;
        const std::complex<double> w = contour_radius * std::exp(std::complex<double>(0.0, th));
        samples[q] = disc_kernel_k0(n, w, chord, anti_chord);
    }
    std::vector<double> phi(k_max + 1, 0.0);
    for (int k = 0; k <= k_max; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (int q = 0; q < M; ++q) {
            const double th = 2.0 * kPi * q / M;
            acc += samples[q] * std::exp(std::complex<double>(0.0, -k * th));
        }
        phi[k] = acc.real() / (M * std::pow(contour_radius, k));
    }
    return phi;
}

namespace {

// Direct multi-index sum for Phi_k(x,y), n <= 3.
double projection_direct(int n, int k, const std::array<double, 3>& x,
                         const std::array<double, 3>& y) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("projection_kernel: direct method supports n <= 3");
    std::vector<std::vector<double>> hx(n), hy(n);
    for (int c = 0; c < n; ++c) {
        hx[c].resize(k + 1);
        hy[c].resize(k + 1);
        for (int j = 0; j <= k; ++j) {
            hx[c][j] = hermite_fn_1d(j, x[c]);
            hy[c][j] = hermite_fn_1d(j, y[c]);
        }
    }
    double acc = 0.0;
    if (n == 1) return hx[0][k] * hy[0][k];
    if (n == 2) {
        for (int a = 0; a <= k; ++a)
            acc += hx[0][a] * hy[0][a] * hx[1][k - a] * hy[1][k - a];
        return acc;
    }
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k - a; ++b)
            acc += hx[0][a] * hy[0][a] * hx[1][b] * hy[1][b] * hx[2][k - a - b] * hy[2][k - a - b];
    return acc;
}

}  // namespace

double projection_kernel(int n, int k, const std::array<double, 3>& x,
                         const std::array<double, 3>& y, ProjectionMethod method,
                         double contour_radius, int contour_nodes) {
    if (k < 0) throw std::invalid_argument("projection_kernel: k must be >= 0");
    if (method == ProjectionMethod::Direct) return projection_direct(n, k, x, y);
    double qm = 0.0, qp = 0.0;
    for (int i = 0; i < 3; ++i) {
        qm += sq(x[i] - y[i]);
        qp += sq(x[i] + y[i]);
    }
    return projection_kernels_k0(n, k, std::sqrt(qm), std::sqrt(qp), contour_radius,
                                 contour_nodes)[k];
}

double bochner_riesz_kernel(int n, double R, double delta, const std::array<double, 3>& x,
                            const std::array<double, 3>& y, ProjectionMethod method,
                            double contour_radius, int contour_nodes) {
    if (R <= 0.0) throw std::invalid_argument("bochner_riesz_kernel: R must be > 0");
    if (delta < 0.0) throw std::invalid_argument("bochner_riesz_kernel: delta must be >= 0");
    // only levels with 2k+n < R contribute
    const int k_top = static_cast<int>(std::floor(0.5 * (R - n)));
    if (k_top < 0) return 0.0;
    double acc = 0.0;
    if (method == ProjectionMethod::Contour) {
        double qm = 0.0, qp = 0.0;
        for (int i = 0; i < 3; ++i) {
            qm += sq(x[i] - y[i]);
            qp += sq(x[i] + y[i]);
        }
        const auto phi = projection_kernels_k0(n, k_top, std::sqrt(qm), std::sqrt(qp),
                                               contour_radius, contour_nodes);
        for (int k = 0; k <= k_top; ++k) {
            const double c = 1.0 - (2.0 * k + n) / R;
            if (c > 0.0) acc += std::pow(c, delta) * phi[k];
        }
        return acc;
    }
    for (int k = 0; k <= k_top; ++k) {
        const double c = 1.0 - (2.0 * k + n) / R;
        if (c > 0.0) acc += std::pow(c, delta) * projection_direct(n, k, x, y);
    }
    return acc;
}

KernelK0 bochner_riesz_k0(int n, double R, double delta, double contour_radius,
                          int contour_nodes) {
    KernelK0 k;
    k.k0 = [n, R, delta, contour_radius, contour_nodes](double u, double v) {
        const int k_top = static_cast<int>(std::floor(0.5 * (R - n)));
        if (k_top < 0) return 0.0;
        const auto phi = projection_kernels_k0(n, k_top, u, v, contour_radius, contour_nodes);
        double acc = 0.0;
        for (int j = 0; j <= k_top; ++j) {
            const double c = 1.0 - (2.0 * j + n) / R;
            if (c > 0.0) acc += std::pow(c, delta) * phi[j];
        }
        return acc;
    };
    k.descriptor = "bochner-riesz(R=" + std::to_string(R) + ",delta=" + std::to_string(delta) +
                   ",n=" + std::to_string(n) + ")";
    return k;
}

double component_kernel(const KernelK0& k0, int m, int n, double r, double s,
                        const QuadratureRule& jacobi_rule) {
    if (r < 0.0 || s < 0.0) throw std::invalid_argument("component_kernel: r, s must be >= 0");
    double acc = 0.0;
    for (std::size_t i = 0; i < jacobi_rule.nodes.size(); ++i) {
        const double u = jacobi_rule.nodes[i];
        const double qm = std::max(0.0, r * r + s * s - 2.0 * r * s * u);
        const double qp = r * r + s * s + 2.0 * r * s * u;
        acc += jacobi_rule.weights[i] * k0(std::sqrt(qm), std::sqrt(qp)) *
               ultraspherical_P(m, n, u);
    }
    return acc;
}

double heat_component_kernel_dt_quadrature(int order, int n, int m, double t, double r,
                                           double s) {
    if (t <= 0.0) throw std::invalid_argument("heat_component_kernel_dt_quadrature: t > 0");
    const auto terms = mehler_derivative_terms(order, n);
    const MehVars v = mehler_vars(t);
    const double rho2 = r * r + s * s;
    const double rs = r * s;
    const double z = rs * v.s2;
    const double beta = 0.5 * (n - 3);
    const double factor = equatorial_sphere_measure(n);
    if (z <= kAngularSwitchZ) {
        static thread_local std::map<int, QuadratureRule> jacobi_cache;
        auto it = jacobi_cache.find(n);
        if (it == jacobi_cache.end()) it = jacobi_cache.emplace(n, gauss_jacobi(96, n)).first;
        const QuadratureRule& rule = it->second;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            const double qm = std::max(0.0, rho2 - 2.0 * rs * u);
            const double qp = rho2 + 2.0 * rs * u;
            const double e = std::exp(-0.25 * v.ct * qm - 0.25 * v.tt * qp);
            if (e == 0.0) continue;
            acc += rule.weights[i] * e * mehler_terms_poly(terms, v, qm, qp) *
                   ultraspherical_P(m, n, u);
        }
        return factor * acc;
    }
    // u = 1 - w/z substitution: the angular integral concentrates at u = 1 and
    // becomes a generalised Gauss-Laguerre integral against w^beta e^{-w}.
    static thread_local std::map<int, QuadratureRule> laguerre_cache;
    auto it = laguerre_cache.find(n);
    if (it == laguerre_cache.end())
        it = laguerre_cache.emplace(n, gauss_laguerre(48, beta)).first;
    const QuadratureRule& rule = it->second;
    const double log_common = -0.5 * v.c2 * rho2 + z;
    const double common = (log_common < -745.0) ? 0.0 : std::exp(log_common);
    if (common == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double w = rule.nodes[i];
        if (w >= 2.0 * z) continue;
        const double u = 1.0 - w / z;
        const double qm = std::max(0.0, rho2 - 2.0 * rs * u);
        const double qp = rho2 + 2.0 * rs * u;
        acc += rule.weights[i] * mehler_terms_poly(terms, v, qm, qp) *
               ultraspherical_P(m, n, u) * std::pow(2.0 - w / z, beta);
    }
    return factor * common * std::pow(z, -0.5 * (n - 1)) * acc;
}

double heat_component_kernel_dt(int order, int n, int m, double t, double r, double s) {
    if (t <= 0.0) throw std::invalid_argument("heat_component_kernel_dt: t must be > 0");
    const double z = r * s / std::sinh(2.0 * t);
    if (z <= kBesselBackendMaxZ) {
        const double alpha = 0.5 * n + m - 1.0;
        return std::pow(r, m) * std::pow(s, m) * laguerre_kernel_dt(order, t, alpha, r, s);
    }
    return heat_component_kernel_dt_quadrature(order, n, m, t, r, s);
}

ComponentKernelTable build_component_table(const KernelK0& k0, int m, int n,
                                           const std::vector<double>& r_nodes,
                                           const std::vector<double>& s_nodes,
                                           const QuadratureRule& jacobi_rule) {
    auto tables = build_component_tables(k0, m, n, r_nodes, s_nodes, jacobi_rule);
    return std::move(tables[m]);
}

std::vector<ComponentKernelTable> build_component_tables(const KernelK0& k0, int m_max, int n,
                                                         const std::vector<double>& r_nodes,
                                                         const std::vector<double>& s_nodes,
                                                         const QuadratureRule& jacobi_rule) {
    const std::size_t nr = r_nodes.size(), ns = s_nodes.size();
    const std::size_t nu = jacobi_rule.nodes.size();
    const double factor = equatorial_sphere_measure(n);
    // P_m values at the angular nodes, shared across the (r,s) sweep.
    std::vector<std::vector<double>> pm(m_max + 1, std::vector<double>(nu));
    for (std::size_t l = 0; l < nu; ++l) {
        const double u = jacobi_rule.nodes[l];
        double pm1 = 1.0, p = u;
        const double lambda = 0.5 * n - 1.0;
        pm[0][l] = 1.0;
        if (m_max >= 1) pm[1][l] = u;
        for (int j = 1; j < m_max; ++j) {
            const double pj = (2.0 * (j + lambda) * u * p - j * pm1) / (j + 2.0 * lambda);
            pm1 = p;
            p = pj;
            pm[j + 1][l] = pj;
        }
    }
    std::vector<ComponentKernelTable> tables(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        tables[m].m = m;
        tables[m].n = n;
        tables[m].r_nodes = r_nodes;
        tables[m].s_nodes = s_nodes;
        tables[m].provenance = k0.descriptor + " x " + jacobi_rule.declared_weight;
        tables[m].values.assign(nr * ns, 0.0);
    }
    std::vector<double> kvals(nu);
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = r_nodes[i];
        for (std::size_t j = 0; j < ns; ++j) {
            const double s = s_nodes[j];
            for (std::size_t l = 0; l < nu; ++l) {
                const double u = jacobi_rule.nodes[l];
                const double qm = std::max(0.0, r * r + s * s - 2.0 * r * s * u);
                const double qp = r * r + s * s + 2.0 * r * s * u;
                kvals[l] = jacobi_rule.weights[l] * k0(std::sqrt(qm), std::sqrt(qp));
            }
            for (int m = 0; m <= m_max; ++m) {
                double acc = 0.0;
                for (std::size_t l = 0; l < nu; ++l) acc += kvals[l] * pm[m][l];
                tables[m].values[i * ns + j] = factor * acc;
            }
        }
    }
    return tables;
}

void export_component_table_csv(const ComponentKernelTable& table, std::ostream& os) {
    os << "m,r,s,value\r\n";
    char buf[128];
    for (std::size_t i = 0; i < table.r_nodes.size(); ++i)
        for (std::size_t j = 0; j < table.s_nodes.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g\r\n", table.m,
                          table.r_nodes[i], table.s_nodes[j],
                          table.values[i * table.s_nodes.size() + j]);
            os << buf;
        }
}

}  // namespace mixnorm
