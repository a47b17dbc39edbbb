#pragma once

#include <complex>

#include "esnufft/kernels.hpp"

namespace esnufft {

struct spectrum_sample {
    double xi = 0;
    double rho = 0;  // xi / beta
    std::complex<double> value;
};

// largest Gauss-Legendre order the transform routines will use
inline constexpr int ft_order_cap = 20000;

// order used for frequency xi; throws frequency_too_large past the cap
int ft_quadrature_order(double beta, double xi);

// int_{-1}^{1} phi(z) e^{i xi z} dz. The substitution z = sin(theta) removes the
// square-root endpoint behaviour so Gauss-Legendre converges geometrically.
// For ES above cutoff the integral is taken along a contour in the upper half
// plane instead, which keeps the exponentially small values accurate.
std::complex<double> ft_quadrature(const kernel_spec& k, double xi);
// same integral with an explicit order, for self-convergence checks
std::complex<double> ft_quadrature_with_order(const kernel_spec& k, double xi, int order);
spectrum_sample sample_spectrum(const kernel_spec& k, double xi);

// extended-precision variant (real part only, the kernels are even)
long double ft_quadrature_ld(const kernel_spec& k, long double xi);

// closed-form KB transform, continued analytically past |xi| = beta
double kb_ft_analytic(double beta, double xi);

// leading saddle-point term below cutoff, |rho| < 1
double es_ft_below_cutoff(double beta, double rho);
// leading oscillatory term above cutoff, |rho| > 1
double es_ft_above_cutoff(double beta, double rho);
// transform of the top hat of height e^{-beta}: 2 e^{-beta} sin(xi)/xi
double es_ft_sinc_tail(double beta, double xi);
// int (e^{beta sqrt(1-z^2)} - 1) e^{i xi z} dz, i.e. e^{beta} phi^ minus the sinc part
std::complex<double> es_ft_deviation(double beta, double xi);
// 9 e^{-beta} (beta^2/xi^2 + 1/|xi|), |xi| >= 3 beta
double es_ft_tail_bound(double beta, double xi);

namespace detail {
// D^ for either family, scaled so that phi^ = top * (2 sinc(xi) + D^)
// with top = e^{-beta} (ES) or 1/I0(beta) (KB)
double deviation_real(const kernel_spec& k, double xi);
double top_hat_height(const kernel_spec& k);
}  // namespace detail

}  // namespace esnufft
