#include "esnufft/aliasing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "esnufft/error.hpp"
#include "esnufft/ktransform.hpp"
#include "esnufft/specfun.hpp"

namespace esnufft {

namespace {

constexpr double pi = std::numbers::pi;
using ld = long double;
constexpr ld pi_ld = std::numbers::pi_v<ld>;

ld kernel_ld(const kernel_spec& k, ld z) {
    const ld q = (1 - z) * (1 + z);
    if (q < 0) return 0;
    const ld s = std::sqrt(q);
    const ld b = k.beta;
    if (k.family == kernel_family::es) return std::exp(b * (s - 1));
    return detail::i0_scaled<ld>(b * s) / detail::i0_scaled<ld>(b) * std::exp(b * (s - 1));
}

struct lattice_terms {
    std::complex<ld> value;
    ld abs_sum;  // sum of |terms|, for the rounding estimate
};

// h sum'_l psi(lh - x) e^{iklh} - psi^(k) e^{ikx}
lattice_terms lattice_sum(const plan& pl, int k, ld x, ld psihat_k) {
    const int n = pl.grid.n;
    const ld h = 2 * pi_ld / n;
    const ld t = x / h;
    const ld hw = ld(pl.grid.w) / 2;
    const long lmin = static_cast<long>(std::ceil(t - hw));
    const long lmax = static_cast<long>(std::floor(t + hw));
    ld re = 0, im = 0, asum = 0;
    for (long l = lmin; l <= lmax; ++l) {
        const ld d = ld(l) - t;
        ld v = kernel_ld(pl.kernel, d / hw);
        if (std::abs(d) == hw) v /= 2;  // average across the jump
        long r = (l % n) * (k % n) % n;
        if (r < 0) r += n;
        const ld ang = 2 * pi_ld * ld(r) / ld(n);
        re += h * v * std::cos(ang);
        im += h * v * std::sin(ang);
        asum += h * v;
    }
    re -= psihat_k * std::cos(ld(k) * x);
    im -= psihat_k * std::sin(ld(k) * x);
    asum += std::abs(psihat_k);
    return {{re, im}, asum};
}

ld psi_hat_ld(const plan& pl, ld xi) {
    const ld a = pi_ld * pl.grid.w / pl.grid.n;
    return a * ft_quadrature_ld(pl.kernel, a * xi);
}

}  // namespace

double psi_hat(const plan& pl, double xi) {
    return pl.grid.alpha * ft_quadrature(pl.kernel, pl.grid.alpha * xi).real();
}

std::complex<double> aliased_sum(const plan& pl, int k, double x) {
    const auto r = lattice_sum(pl, k, x, psi_hat_ld(pl, k));
    return {static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())};
}

std::complex<double> g_k_exact(const plan& pl, int k, double x) {
    const ld ph = psi_hat_ld(pl, k);
    const auto r = lattice_sum(pl, k, x, ph);
    return {static_cast<double>(r.value.real() / ph), static_cast<double>(r.value.imag() / ph)};
}

spectral_sum aliased_sum_spectral(const plan& pl, int k, double x, int m_max) {
    if (m_max < 1) fail(errc::invalid_parameter, "aliased sum: m_max must be >= 1");
    const double alpha = pl.grid.alpha, beta = pl.kernel.beta;
    const int n = pl.grid.n;
    const double top = detail::top_hat_height(pl.kernel);
    spectral_sum out;
    out.value = top * quadrature_sinc_gap_complex(n, k, x, alpha);
    // smooth part: quadrature up to the cap, then bounded
    const bool es = pl.kernel.family == kernel_family::es;
    const double cap = es ? std::min(std::pow(beta, 4), 3000.0) : std::numeric_limits<double>::infinity();
    const double mcap = std::floor((cap / alpha - std::abs(double(k))) / n);
    const int M = static_cast<int>(std::max(0.0, std::min<double>(m_max, mcap)));
    std::complex<double> acc = 0;
    for (int m = 1; m <= M; ++m) {
        for (int sgn : {1, -1}) {
            const double f = double(k) + double(sgn) * m * n;
            const double d = detail::deviation_real(pl.kernel, alpha * f);
            acc += d * std::polar(1.0, std::fmod(f * x, 2 * pi));
        }
    }
    out.value += alpha * top * acc;
    out.terms_used = 2 * M;
    // dropped terms: |D(u)| <= C u^{-s}, summed against (pi w (m - 1/2))^{-s} for m > M
    const double s = es ? 1.5 : 2.0;
    const double C = es ? 2 * std::sqrt(2 * pi) * beta : 2 * beta * beta;
    const double Mh = std::max(M, 1) - 0.5;
    out.remainder_bound = alpha * top * 2 * C * std::pow(pi * pl.grid.w, -s) * std::pow(Mh, 1 - s) / (s - 1);
    return out;
}

spectral_sum g_k(const plan& pl, int k, double x, int m_max) {
    spectral_sum s = aliased_sum_spectral(pl, k, x, m_max);
    const double ph = psi_hat(pl, k);
    s.value /= ph;
    s.remainder_bound /= std::abs(ph);
    return s;
}

aliasing_report eps_inf_estimate(const plan& pl, int k_samples, int x_samples) {
    if (k_samples < 16 || x_samples < 16) fail(errc::invalid_parameter, "eps_inf_estimate: need >= 16 samples");
    const int N = pl.grid.N;
    aliasing_report rep;
    rep.w = pl.grid.w;
    rep.beta = pl.kernel.beta;
    rep.sigma = pl.grid.sigma;
    rep.gamma = pl.grid.gamma;
    const double g = pl.grid.gamma, sg = pl.grid.sigma;
    const double rad = 1 - 1 / sg - (1 / (g * g) - 1) / (4 * sg * sg);
    rep.theory_exponent = rad > 0 ? pi * g * std::sqrt(rad) : 0.0;

    // |psi^| must decrease across the band
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k_samples; ++i) {
        const double kk = 0.5 * N * i / (k_samples - 1);
        const double v = std::abs(psi_hat(pl, kk));
        if (!(v < prev) && i > 0) fail(errc::numerical_inconsistency, "eps_inf_estimate: |psi^| not decreasing in band");
        prev = v;
    }
    const ld denom = std::abs(psi_hat_ld(pl, N / 2));

    const ld u = std::numeric_limits<ld>::epsilon();
    const ld h = 2 * pi_ld / pl.grid.n;
    ld best = 0, worst_round = 0;
    std::vector<int> ks;
    for (int i = 0; i < k_samples; ++i) {
        const int kk = static_cast<int>(std::lround(-0.5 * N + double(N) * i / (k_samples - 1)));
        if (ks.empty() || ks.back() != kk) ks.push_back(kk);
    }
    for (int kk : ks) {
        const ld ph = psi_hat_ld(pl, kk);
        for (int j = 0; j <= x_samples + 1; ++j) {
            // one cell [0, h] with its endpoints
            const ld x = h * ld(j) / ld(x_samples + 1);
            const auto r = lattice_sum(pl, kk, x, ph);
            const ld mag = std::abs(r.value);
            worst_round = std::max(worst_round, 2 * (pl.grid.w + 3) * u * r.abs_sum);
            if (mag > best) {
                best = mag;
                rep.k_at_max = kk;
                rep.x_at_max = static_cast<double>(x);
            }
        }
    }
    rep.numerator = static_cast<double>(best);
    rep.denominator = static_cast<double>(denom);
    rep.eps_inf_est = static_cast<double>(best / denom);
    rep.tail_terms_used = 0;
    rep.tail_remainder_bound = static_cast<double>(worst_round / denom);
    if (!(rep.eps_inf_est > 0)) fail(errc::numerical_inconsistency, "eps_inf_estimate: non-positive estimate");
    if (rep.tail_remainder_bound > 1e-3 * rep.eps_inf_est)
        fail(errc::truncation_insufficient, "eps_inf_estimate: rounding level too close to the estimate");
    return rep;
}

double es_rate(double sigma, double gamma) {
    if (!(sigma > 1)) fail(errc::invalid_parameter, "es_rate: sigma must be > 1");
    if (!(gamma > 0 && gamma < 1)) fail(errc::invalid_parameter, "es_rate: gamma must lie in (0,1)");
    const double rad = 1 - 1 / sigma - (1 / (gamma * gamma) - 1) / (4 * sigma * sigma);
    if (!(rad > 0)) fail(errc::invalid_parameter, "es_rate: gamma too small for this sigma");
    return pi * gamma * std::sqrt(rad);
}

double kb_error_bound(int w, double sigma) {
    if (w < 2) fail(errc::invalid_parameter, "kb_error_bound: w must be >= 2");
    if (!(sigma > 1)) fail(errc::invalid_parameter, "kb_error_bound: sigma must be > 1");
    const double a = 1 - 1 / sigma, v = 0.5 * (w - 1);
    return 4 * pi * std::pow(a, 0.25) * (std::sqrt(v) + v) * std::exp(-pi * (w - 1) * std::sqrt(a));
}

std::complex<double> phased_sinc_sum(double n, double k, double x, double alpha, double b, long m_max) {
    if (!(n > 0) || !(alpha > 0) || !(b >= 1)) fail(errc::invalid_parameter, "phased_sinc_sum: bad parameters");
    if (!(m_max > b)) fail(errc::invalid_parameter, "phased_sinc_sum: m_max must exceed b");
    if (!(std::abs(k) <= n / 2)) fail(errc::invalid_parameter, "phased_sinc_sum: |k| must be <= n/2");
    double re = 0, im = 0;
    for (long m = static_cast<long>(std::floor(b)) + 1; m <= m_max; ++m) {
        double pre = 0, pim = 0;
        for (int sgn : {1, -1}) {
            const double f = sgn * double(m) * n + k;
            const double a = std::sin(alpha * f) / f;
            const double ph = std::fmod(f * x, 2 * pi);
            pre += a * std::cos(ph);
            pim += a * std::sin(ph);
        }
        re += pre;
        im += pim;
    }
    return {re, im};
}

std::complex<double> quadrature_sinc_gap_complex(double n, double k, double x, double alpha) {
    if (!(n > 0) || !(alpha > 0)) fail(errc::invalid_parameter, "quadrature_sinc_gap: bad parameters");
    const double h = 2 * pi / n;
    const long lmin = static_cast<long>(std::ceil((x - alpha) / h)) - 1;
    const long lmax = static_cast<long>(std::floor((x + alpha) / h)) + 1;
    double re = 0, im = 0;
    for (long l = lmin; l <= lmax; ++l) {
        const double d = std::abs(x - l * h);
        if (d > alpha) continue;
        const double wgt = (d == alpha) ? 0.5 * h : h;
        const double ph = std::fmod(k * h * double(l), 2 * pi);
        re += wgt * std::cos(ph);
        im += wgt * std::sin(ph);
    }
    const double s = 2 * alpha * sinc(alpha * k);
    return {re - s * std::cos(k * x), im - s * std::sin(k * x)};
}

double quadrature_sinc_gap(double n, double k, double x, double alpha) {
    return std::abs(quadrature_sinc_gap_complex(n, k, x, alpha));
}

}  // namespace esnufft
