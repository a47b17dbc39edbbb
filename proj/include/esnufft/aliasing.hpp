#pragma once

#include <complex>
#include <limits>

#include "esnufft/nufft.hpp"

namespace esnufft {

struct aliasing_report {
    int w = 0;
    double beta = 0;
    double sigma = 0;
    double gamma = 0;
    double eps_inf_est = 0;           // max |aliased sum| / min |psi^| over the band
    int tail_terms_used = 0;          // Fourier-side terms summed explicitly (0: lattice route)
    double tail_remainder_bound = 0;  // error estimate of the numerator, in units of eps
    double theory_exponent = 0;       // exponential rate per unit w
    double empirical_max_rel_err = std::numeric_limits<double>::quiet_NaN();
    // diagnostics
    double numerator = 0;
    double denominator = 0;
    int k_at_max = 0;
    double x_at_max = 0;
};

// psi^(xi) = alpha phi^(alpha xi), alpha = pi w / n
double psi_hat(const plan& pl, double xi);

// sum_{m != 0} psi^(k+mn) e^{i(k+mn)x}, evaluated exactly through the lattice
// identity h sum'_l psi(lh - x) e^{iklh} - psi^(k) e^{ikx} in extended precision
std::complex<double> aliased_sum(const plan& pl, int k, double x);

// pipeline error for a unit strength at x: aliased_sum / psi^(k)
std::complex<double> g_k_exact(const plan& pl, int k, double x);

struct spectral_sum {
    std::complex<double> value;
    double remainder_bound = 0;  // estimate of what the dropped terms can contribute
    int terms_used = 0;          // number of m values evaluated by quadrature
};

// Fourier-side sum over 0 < |m| <= m_max: the top-hat part of each term is
// summed in closed form, the smooth part by quadrature up to min(beta^4, 3000)
// in unscaled frequency, the rest bounded by its decay rate.
spectral_sum aliased_sum_spectral(const plan& pl, int k, double x, int m_max);
// the same divided by psi^(k)
spectral_sum g_k(const plan& pl, int k, double x, int m_max);

aliasing_report eps_inf_estimate(const plan& pl, int k_samples = 33, int x_samples = 64);

// pi gamma sqrt(1 - 1/sigma - (gamma^{-2} - 1)/(4 sigma^2)), gamma < 1
double es_rate(double sigma, double gamma);
// 4 pi (1-1/sigma)^{1/4} (sqrt((w-1)/2) + (w-1)/2) e^{-pi (w-1) sqrt(1-1/sigma)}
double kb_error_bound(int w, double sigma);

// sum_{b < |m| <= m_max} sin(alpha(mn+k))/(mn+k) e^{i(mn+k)x}, paired symmetrically
std::complex<double> phased_sinc_sum(double n, double k, double x, double alpha, double b, long m_max);

// h sum'_{|x-lh|<=alpha} e^{iklh} - 2 alpha sinc(alpha k) e^{ikx}, half weight on the boundary
std::complex<double> quadrature_sinc_gap_complex(double n, double k, double x, double alpha);
double quadrature_sinc_gap(double n, double k, double x, double alpha);

}  // namespace esnufft
