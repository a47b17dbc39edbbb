#include "esnufft/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "esnufft/error.hpp"
#include "esnufft/specfun.hpp"

namespace esnufft {

namespace {
constexpr double pi = std::numbers::pi;

double semicircle(double z) { return std::sqrt((1.0 - z) * (1.0 + z)); }
}  // namespace

kernel_spec make_kernel(kernel_family family, double beta) {
    if (!(beta > 0) || !std::isfinite(beta)) fail(errc::invalid_parameter, "kernel: beta must be positive");
    return {family, beta};
}

bool is_5smooth(long n) {
    if (n < 1) return false;
    for (long p : {2L, 3L, 5L})
        while (n % p == 0) n /= p;
    return n == 1;
}

long next_smooth_even(long m) {
    long n = std::max(2L, m + (m & 1));
    while (!is_5smooth(n)) n += 2;
    return n;
}

grid_params make_grid(int N, double sigma, int w, double gamma) {
    if (N < 2 || N % 2 != 0) fail(errc::invalid_parameter, "grid: N must be even and >= 2");
    if (!(sigma > 1) || !std::isfinite(sigma)) fail(errc::invalid_parameter, "grid: sigma must be > 1");
    if (w < 2) fail(errc::invalid_parameter, "grid: w must be >= 2");
    if (!(gamma > 0 && gamma <= 1)) fail(errc::invalid_parameter, "grid: gamma must lie in (0,1]");
    const double target = std::ceil(sigma * N * (1 - 1e-14));
    if (target > 1e9) fail(errc::invalid_parameter, "grid: fine grid too large");
    long n = next_smooth_even(static_cast<long>(target));
    if (n <= 2L * w) n = next_smooth_even(2L * w + 1);
    grid_params g;
    g.N = N;
    g.n = static_cast<int>(n);
    g.sigma = static_cast<double>(n) / N;
    g.w = w;
    g.gamma = gamma;
    g.alpha = pi * w / n;
    g.h = 2 * pi / n;
    return g;
}

double beta_from(double gamma, int w, double sigma) {
    if (!(gamma > 0 && gamma <= 1)) fail(errc::invalid_parameter, "beta_from: gamma must lie in (0,1]");
    if (w < 2) fail(errc::invalid_parameter, "beta_from: w must be >= 2");
    if (!(sigma > 1) || !std::isfinite(sigma)) fail(errc::invalid_parameter, "beta_from: sigma must be > 1");
    return gamma * pi * w * (1 - 1 / (2 * sigma));
}

double kernel_eval(const kernel_spec& k, double z) {
    if (!(std::abs(z) <= 1)) return 0.0;
    const double s = semicircle(z);
    if (k.family == kernel_family::es) return std::exp(k.beta * (s - 1));
    // I0(beta s)/I0(beta) with the exponentials split off
    return bessel_i0_scaled(k.beta * s) / bessel_i0_scaled(k.beta) * std::exp(k.beta * (s - 1));
}

double periodized_scaled_eval(const kernel_spec& k, const grid_params& g, double x) {
    const double twopi = 2 * pi;
    double r = std::fmod(x, twopi);
    if (r >= pi) r -= twopi;
    if (r < -pi) r += twopi;
    double v = 0;
    for (int m = -1; m <= 1; ++m) v += kernel_eval(k, (r - twopi * m) / g.alpha);
    return v;
}

double kb_asymptotic_eval(double beta, double z) {
    if (!(std::abs(z) < 1)) fail(errc::domain_error, "kb_asymptotic_eval: requires |z| < 1");
    const double s2 = (1 - z) * (1 + z);
    return std::exp(beta * (std::sqrt(s2) - 1)) / std::pow(s2, 0.25);
}

double slepian_outer_constant(double beta) { return std::sqrt(2.0) * std::exp(-beta); }

double slepian_inner_constant(double beta) {
    // equate C_in e^{beta s}/sqrt(2 pi beta s) with the outer branch at s* = s(1 - 1/beta)
    const double zs = 1 - 1 / beta;
    const double ss = semicircle(zs);
    return slepian_outer_constant(beta) * std::sqrt(2 * pi * beta / (1 + ss));
}

double slepian_asymptotic_eval(double beta, double z) {
    if (!(beta >= 1)) fail(errc::invalid_parameter, "slepian_asymptotic_eval: beta must be >= 1");
    const double a = std::abs(z);
    if (!(a <= 1)) fail(errc::domain_error, "slepian_asymptotic_eval: requires |z| <= 1");
    if (a < 1 / std::sqrt(beta)) fail(errc::domain_error, "slepian_asymptotic_eval: |z| below the outer branch");
    const double s = semicircle(a);
    if (a <= 1 - 1 / beta) {
        // sqrt(2) e^{beta(s-1)} s^{-1/2} (1+s)^{-1/2}
        return std::sqrt(2.0) * std::exp(beta * (s - 1)) / std::sqrt(s * (1 + s));
    }
    const double zs = 1 - 1 / beta;
    const double ss = semicircle(zs);
    return std::sqrt(4 * pi * beta / (1 + ss)) * bessel_i0_scaled(beta * s) * std::exp(beta * (s - 1));
}

double sleph_eval(double beta, double z) {
    if (!(beta > 0)) fail(errc::invalid_parameter, "sleph_eval: beta must be positive");
    if (!(std::abs(z) <= 1)) fail(errc::domain_error, "sleph_eval: requires |z| <= 1");
    const double s = semicircle(z);
    return std::sqrt(2.0 / (1 + s)) * bessel_i0_scaled(beta * s) / bessel_i0_scaled(beta) *
           std::exp(beta * (s - 1));
}

}  // namespace esnufft
