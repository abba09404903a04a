#pragma once

// Stable evaluation of the special functions used throughout the library:
// normalised Hermite functions, normalised Laguerre functions psi_k^alpha,
// normalised ultraspherical polynomials, modified Bessel functions I_alpha
// and log-gamma ratios.  All evaluations are deterministic pure functions.

#include <cstdint>

namespace mixnorm {

// Spectral level of the oscillator-type operators.  For the Hermite operator
// on R^n the eigenvalue at level k is 2k+n; for the Laguerre operator of type
// alpha it is 4k+2*alpha+2.
struct SpectralLevel {
    int k = 0;
    double eigenvalue = 0.0;
};

SpectralLevel hermite_level(int k, int n);
SpectralLevel laguerre_level(int k, double alpha);

// Degree/dimension pair selecting a normalised ultraspherical polynomial
// P_m^{n/2-1} (value 1 at u = 1).
struct UltrasphericalParams {
    int m = 0;
    int n = 2;
};

// Normalised Hermite function h_k (L^2(R)-orthonormal), evaluated with the
// Gaussian factor folded into the three-term recurrence.  Stable for
// k <= 512, |x| <= 30.
double hermite_fn_1d(int k, double x);

// e^{x^2/2} h_k(x): the polynomial part of the Hermite function, for use
// against Gauss-Hermite rules whose weight already carries e^{-x^2}.
double hermite_poly_1d(int k, double x);

// Normalised Laguerre function
//   psi_k^alpha(r) = (2 Gamma(k+1)/Gamma(k+alpha+1))^{1/2} L_k^alpha(r^2) e^{-r^2/2},
// orthonormal on L^2(R^+, r^{2alpha+1} dr).  Requires alpha > -1, r >= 0.
double laguerre_psi(int k, double alpha, double r);

// Normalised ultraspherical polynomial P_m^{n/2-1}(u) with P(1) = 1.
// n = 2 realises the Chebyshev limit T_m, n = 3 is Legendre.  Requires
// |u| <= 1 (up to round-off slack), n >= 2.
double ultraspherical_P(int m, int n, double u);

// Modified Bessel function I_alpha(z), z >= 0, alpha > -1.  Ascending series
// for z <= 30, internally scaled series for larger z.
double bessel_I(double alpha, double z);

// e^{-z} I_alpha(z), usable for arbitrarily large z without overflow.
double bessel_I_scaled(double alpha, double z);

// log( e^{-z} I_alpha(z) ); -inf when the value underflows to zero.
double log_bessel_I_scaled(double alpha, double z);

// (rs)^{-alpha} I_{alpha+shift}(rs*c) with the removable rs -> 0 singularity
// evaluated through the series limit.  Requires alpha > -1, shift >= 0,
// rs >= 0, c > 0.
double bessel_I_ratio(double alpha, int shift, double rs, double c);

// log(Gamma(a)/Gamma(b)) for a, b > 0, relative error below 1e-13.
double log_gamma_ratio(double a, double b);

// Pochhammer symbol (a)_m = Gamma(a+m)/Gamma(a).
double pochhammer(double a, int m);

// Surface measure of S^{n-1}: omega_{n-1} = 2 pi^{n/2} / Gamma(n/2).
double sphere_surface_measure(int n);

}  // namespace mixnorm
