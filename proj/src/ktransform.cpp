#include "esnufft/ktransform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "esnufft/error.hpp"
#include "esnufft/specfun.hpp"

namespace esnufft {

namespace {

constexpr double pi = std::numbers::pi;

int bucket(int order) {
    if (order <= 256) return (order + 7) / 8 * 8;
    int step = 1;
    while (step * 32 <= order) step *= 2;
    return (order + step - 1) / step * step;
}

enum class integrand { kernel, deviation };

// int_{-pi/2}^{pi/2} f(cos t) cos t e^{i xi sin t} dt with f the kernel or its deviation
template <class T>
std::complex<T> theta_quadrature(const kernel_spec& k, T xi, int order, integrand what) {
    const auto& rule = detail::gauss_legendre_t<T>(order);
    const T half_pi = std::numbers::pi_v<T> / 2;
    const T beta = static_cast<T>(k.beta);
    const T i0b = (k.family == kernel_family::kb) ? detail::i0_scaled<T>(beta) : T(1);
    T re = 0, im = 0;
    for (int i = 0; i < order; ++i) {
        const T t = rule.nodes[i];
        // cos and sin of theta = t pi/2, accurate near the endpoints
        const T u = half_pi * (1 - std::abs(t));
        const T c = std::sin(u);
        const T z = std::copysign(std::cos(u), t);
        T f;
        if (what == integrand::deviation) {
            f = std::expm1(beta * c);
        } else if (k.family == kernel_family::es) {
            f = std::exp(beta * (c - 1));
        } else {
            f = detail::i0_scaled<T>(beta * c) / i0b * std::exp(beta * (c - 1));
        }
        const T a = rule.weights[i] * f * c;
        re += a * std::cos(xi * z);
        im += a * std::sin(xi * z);
    }
    return {re * half_pi, im * half_pi};
}

// ES transform above cutoff. The integral over [0,1] is moved onto the path
// 0 -> i inf -> 1 + i inf -> 1; the leg on the imaginary axis is purely
// imaginary and the top leg vanishes for |xi| > beta, so
// phi^(xi) = 2 Im(e^{i xi} K), K = int_0^inf e^{beta(s-1) - xi t} dt,
// s = sqrt(t^2 - 2it). With t = u^2 the integrand is smooth and decays like
// e^{-(xi-beta)u^2}; its size is e^{-beta} times at most e^{beta/(4 rho)}, so
// the error is small relative to the oscillation envelope rather than to phi^(0).
double es_ft_contour(double beta, double xi) {
    const double a = std::abs(xi);
    const double d = a - beta;
    const auto log_size = [&](double u) {
        const double u2 = u * u;
        const double r = u * std::sqrt((std::sqrt(u2 * u2 + 4) + u2) / 2);  // Re(u sqrt(u^2 - 2i))
        return beta * (r - 1) - a * u2;
    };
    double U = std::sqrt(46 / d);
    while (log_size(U) > -beta - 46) U *= 1.25;
    const int panels = std::clamp(static_cast<int>(std::ceil(U * (1.5 * beta + 2 * a * U) / 6)), 1, 1 << 16);
    const auto& rule = detail::gauss_legendre_t<double>(20);
    const double width = U / panels;
    std::complex<double> K = 0;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * width;
        std::complex<double> part = 0;
        for (int i = 0; i < rule.order; ++i) {
            const double u = mid + 0.5 * width * rule.nodes[i];
            const double t = u * u;
            const std::complex<double> s = std::sqrt(std::complex<double>(t * t, -2 * t));
            part += rule.weights[i] * 2 * u * std::exp(beta * (s - 1.0) - a * t);
        }
        K += part * (0.5 * width);
    }
    return 2 * (std::sin(a) * K.real() + std::cos(a) * K.imag());
}

// the contour form is used once xi is clear of the cutoff
bool use_contour(const kernel_spec& k, double xi) {
    return k.family == kernel_family::es && std::abs(xi) >= k.beta + std::max(2.0, 0.05 * k.beta);
}

}  // namespace

int ft_quadrature_order(double beta, double xi) {
    const double a = std::abs(xi);
    if (!std::isfinite(a)) fail(errc::frequency_too_large, "ft_quadrature: non-finite frequency");
    const double raw = std::ceil(pi / 4 * (a + beta) + 2 * std::sqrt(a)) + 40;
    if (raw > ft_order_cap) fail(errc::frequency_too_large, "ft_quadrature: quadrature order cap exceeded");
    return std::min(bucket(static_cast<int>(raw)), ft_order_cap);
}

std::complex<double> ft_quadrature_with_order(const kernel_spec& k, double xi, int order) {
    if (!(k.beta > 0)) fail(errc::invalid_parameter, "ft_quadrature: beta must be positive");
    return theta_quadrature<double>(k, xi, order, integrand::kernel);
}

std::complex<double> ft_quadrature(const kernel_spec& k, double xi) {
    const int order = ft_quadrature_order(k.beta, xi);
    if (use_contour(k, xi)) {
        if (!(k.beta > 0)) fail(errc::invalid_parameter, "ft_quadrature: beta must be positive");
        return es_ft_contour(k.beta, xi);
    }
    return ft_quadrature_with_order(k, xi, order);
}

spectrum_sample sample_spectrum(const kernel_spec& k, double xi) {
    return {xi, xi / k.beta, ft_quadrature(k, xi)};
}

long double ft_quadrature_ld(const kernel_spec& k, long double xi) {
    if (!(k.beta > 0)) fail(errc::invalid_parameter, "ft_quadrature: beta must be positive");
    const int order = ft_quadrature_order(k.beta, static_cast<double>(xi)) + 16;
    return theta_quadrature<long double>(k, xi, order, integrand::kernel).real();
}

double kb_ft_analytic(double beta, double xi) {
    if (!(beta > 0)) fail(errc::invalid_parameter, "kb_ft_analytic: beta must be positive");
    const double a = std::abs(xi);
    const double d = (beta - a) * (beta + a);
    const double scale = 1 / bessel_i0_scaled(beta);  // e^{beta} / I0(beta)
    if (std::abs(d) < 1) {
        // sinh(sqrt d)/sqrt d = sum d^k/(2k+1)!, entire in d
        double term = 1, sum = 1;
        for (int j = 1; j < 30; ++j) {
            term *= d / ((2.0 * j) * (2.0 * j + 1));
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return 2 * std::exp(-beta) * scale * sum;
    }
    if (d > 0) {
        const double r = std::sqrt(d);
        return (std::exp(r - beta) - std::exp(-r - beta)) / r * scale;
    }
    const double r = std::sqrt(-d);
    return 2 * std::exp(-beta) * scale * std::sin(r) / r;
}

double es_ft_below_cutoff(double beta, double rho) {
    if (!(std::abs(rho) < 1)) fail(errc::domain_error, "es_ft_below_cutoff: requires |rho| < 1");
    const double q = (1 - rho) * (1 + rho);
    return std::sqrt(2 * pi / beta) * std::pow(q, -0.75) * std::exp(beta * (std::sqrt(q) - 1));
}

double es_ft_above_cutoff(double beta, double rho) {
    if (!(std::abs(rho) > 1)) fail(errc::domain_error, "es_ft_above_cutoff: requires |rho| > 1");
    const double q = (std::abs(rho) - 1) * (std::abs(rho) + 1);
    return 2 * std::sqrt(2 * pi / beta) * std::exp(-beta) * std::sin(beta * std::sqrt(q) - pi / 4) *
           std::pow(q, -0.75);
}

double es_ft_sinc_tail(double beta, double xi) {
    if (xi == 0) fail(errc::domain_error, "es_ft_sinc_tail: requires xi != 0");
    return 2 * std::exp(-beta) * std::sin(xi) / xi;
}

std::complex<double> es_ft_deviation(double beta, double xi) {
    if (!(beta > 0)) fail(errc::invalid_parameter, "es_ft_deviation: beta must be positive");
    if (beta > 700) fail(errc::overflow, "es_ft_deviation: e^beta overflows");
    const kernel_spec k{kernel_family::es, beta};
    return theta_quadrature<double>(k, xi, ft_quadrature_order(beta, xi), integrand::deviation);
}

double es_ft_tail_bound(double beta, double xi) {
    const double a = std::abs(xi);
    if (!(a >= 3 * beta)) fail(errc::domain_error, "es_ft_tail_bound: requires |xi| >= 3 beta");
    return 9 * std::exp(-beta) * (beta * beta / (a * a) + 1 / a);
}

namespace detail {

double top_hat_height(const kernel_spec& k) {
    if (k.family == kernel_family::es) return std::exp(-k.beta);
    return std::exp(-k.beta) / bessel_i0_scaled(k.beta);
}

double deviation_real(const kernel_spec& k, double xi) {
    if (k.family == kernel_family::es) return es_ft_deviation(k.beta, xi).real();
    // I0(beta) phi^_KB(xi) - 2 sinc(xi)
    const double a = std::abs(xi);
    const double d = (k.beta - a) * (k.beta + a);
    if (d < -1) {
        const double r = std::sqrt(-d);
        return 2 * (std::sin(r) / r - std::sin(a) / a);
    }
    return kb_ft_analytic(k.beta, xi) / top_hat_height(k) - 2 * sinc(xi);
}

}  // namespace detail

}  // namespace esnufft
