#pragma once

namespace esnufft {

enum class kernel_family { es, kb };

struct kernel_spec {
    kernel_family family = kernel_family::es;
    double beta = 1.0;
};

// throws invalid_parameter unless beta > 0 and finite
kernel_spec make_kernel(kernel_family family, double beta);

struct grid_params {
    int N = 0;          // number of modes, even
    double sigma = 0;   // effective upsampling n/N
    int n = 0;          // fine grid size, even and 5-smooth
    int w = 0;          // kernel width in fine grid points
    double gamma = 1;   // safety factor
    double alpha = 0;   // pi w / n
    double h = 0;       // 2 pi / n
};

bool is_5smooth(long n);
// smallest even 5-smooth integer >= m
long next_smooth_even(long m);

// n = smallest even 5-smooth integer >= sigma*N that also exceeds 2w;
// the stored sigma is recomputed as n/N
grid_params make_grid(int N, double sigma, int w, double gamma);

// gamma * pi * w * (1 - 1/(2 sigma))
double beta_from(double gamma, int w, double sigma);

// phi(z) on the closed support [-1,1], zero outside
double kernel_eval(const kernel_spec& k, double z);

// psi~(x) = sum_m phi(n (x - 2 pi m) / (pi w))
double periodized_scaled_eval(const kernel_spec& k, const grid_params& g, double x);

// e^{beta(sqrt(1-z^2)-1)} / (1-z^2)^{1/4}, |z| < 1
double kb_asymptotic_eval(double beta, double z);

// large-beta form of the prolate function, normalized to tend to 1 at z = 0.
// Outer branch for beta^{-1/2} <= |z| <= 1 - 1/beta, Bessel branch beyond.
double slepian_asymptotic_eval(double beta, double z);
// constant of the outer branch, sqrt(2) e^{-beta}
double slepian_outer_constant(double beta);
// constant of the Bessel branch, matched to the outer branch at the seam
double slepian_inner_constant(double beta);

// sqrt(2) I0(beta s) / (I0(beta) sqrt(1+s)), s = sqrt(1-z^2)
double sleph_eval(double beta, double z);

}  // namespace esnufft
