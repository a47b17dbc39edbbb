#include "esnufft/nufft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "esnufft/error.hpp"
#include "esnufft/specfun.hpp"
#include "esnufft/ktransform.hpp"

namespace esnufft {

namespace {

constexpr double pi = std::numbers::pi;

// Neumaier summation of a complex series
struct csum {
    double re = 0, im = 0, cre = 0, cim = 0;
    static void add1(double& s, double& c, double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    void add(cplx v) {
        add1(re, cre, v.real());
        add1(im, cim, v.imag());
    }
    cplx value() const { return {re + cre, im + cim}; }
};

// e^{i k x} with the rounding error of k*x folded back in
cplx accurate_phase(double k, double x) {
    const double th = k * x;
    const double lo = std::fma(k, x, -th);
    const double c = std::cos(th), s = std::sin(th);
    return {c - s * lo, s + c * lo};
}

// kernel value for a point at fine-grid coordinate offset d = l - t, |d| <= w/2
struct kernel_fn {
    kernel_family family;
    double beta, inv_half_w, i0b;
    double operator()(double d) const {
        const double z = d * inv_half_w;
        const double q = (1 - z) * (1 + z);
        if (q < 0) return 0.0;
        const double s = std::sqrt(q);
        if (family == kernel_family::es) return std::exp(beta * (s - 1));
        return bessel_i0_scaled(beta * s) / i0b * std::exp(beta * (s - 1));
    }
};

kernel_fn make_fn(const plan& pl) {
    return {pl.kernel.family, pl.kernel.beta, 2.0 / pl.grid.w,
            pl.kernel.family == kernel_family::kb ? bessel_i0_scaled(pl.kernel.beta) : 1.0};
}

template <class F>
void for_each_touched(const plan& pl, double x, const kernel_fn& fn, F&& visit) {
    const int n = pl.grid.n;
    const double t = x / pl.grid.h;
    const double hw = 0.5 * pl.grid.w;
    const long lmin = static_cast<long>(std::ceil(t - hw));
    const long lmax = static_cast<long>(std::floor(t + hw));
    long idx = lmin % n;
    if (idx < 0) idx += n;
    for (long l = lmin; l <= lmax; ++l) {
        visit(idx, fn(static_cast<double>(l) - t));
        if (++idx == n) idx = 0;
    }
}

void spread_range(const plan& pl, const std::vector<double>& x, std::span<const cplx> c, size_t j0, size_t j1,
                  std::vector<cplx>& b) {
    const kernel_fn fn = make_fn(pl);
    for (size_t j = j0; j < j1; ++j) {
        const cplx cj = c[j];
        for_each_touched(pl, x[j], fn, [&](long idx, double v) { b[idx] += cj * v; });
    }
}

void check_len(size_t got, size_t want, const char* what) {
    if (got != want) fail(errc::invalid_input, what);
}

}  // namespace

double fold_to_period(double x) {
    if (!std::isfinite(x)) fail(errc::invalid_input, "points must be finite");
    if (x >= -pi && x < pi) return x;
    double r = x - 2 * pi * std::floor((x + pi) / (2 * pi));
    if (r >= pi) r -= 2 * pi;
    if (r < -pi) r += 2 * pi;
    return r;
}

nu_points::nu_points(std::span<const double> x) {
    if (x.empty()) fail(errc::invalid_input, "at least one point is required");
    x_.reserve(x.size());
    for (double v : x) x_.push_back(fold_to_period(v));
}

int width_for_tol(double tol, double sigma, double gamma) {
    if (!(tol > 1e-15 && tol < 1e-1)) fail(errc::invalid_parameter, "tol must lie in (1e-15, 1e-1)");
    if (!(sigma > 1)) fail(errc::invalid_parameter, "sigma must be > 1");
    if (!(gamma > 0 && gamma <= 1)) fail(errc::invalid_parameter, "gamma must lie in (0,1]");
    return static_cast<int>(std::ceil(std::log(1 / tol) / (pi * gamma * std::sqrt(1 - 1 / sigma)))) + 1;
}

plan make_plan(const plan_request& req) {
    if (req.threads < 1) fail(errc::invalid_parameter, "threads must be >= 1");
    plan pl;
    pl.threads = req.threads;
    int w = req.width;
    if (w > 0) {
        if (w < 2) fail(errc::invalid_parameter, "width must be >= 2");
    } else {
        if (req.tol == 0 && req.width == 0) fail(errc::invalid_parameter, "either width or tol must be given");
        // the rounded grid fixes the effective sigma used by the width rule
        const grid_params g0 = make_grid(req.N, req.sigma, 2, req.gamma);
        const int raw = width_for_tol(req.tol, g0.sigma, req.gamma);
        w = std::clamp(raw, 2, 16);
        pl.width_clamped = (w != raw);
    }
    pl.grid = make_grid(req.N, req.sigma, w, req.gamma);
    pl.kernel = make_kernel(req.kernel, beta_from(req.gamma, w, pl.grid.sigma));
    const int N = req.N;
    pl.p.assign(N, 0.0);
    for (int k = 0; k <= N / 2; ++k) {
        const double phihat = ft_quadrature(pl.kernel, pi * w * k / pl.grid.n).real();
        const double pk = 2 / (w * phihat);
        if (!(pk > 0) || !std::isfinite(pk)) fail(errc::numerical_inconsistency, "deconvolution factor not positive");
        if (k < N / 2) pl.p[N / 2 + k] = pk;
        pl.p[N / 2 - k] = pk;
    }
    pl.fft = std::make_shared<const fft_plan>(pl.grid.n);
    return pl;
}

std::vector<cplx> spread(const plan& pl, const nu_points& pts, std::span<const cplx> c) {
    check_len(c.size(), pts.size(), "spread: strengths and points differ in length");
    const auto& x = pts.x();
    const size_t M = x.size();
    const int T = static_cast<int>(std::min<size_t>(pl.threads, std::max<size_t>(1, M / 4096)));
    std::vector<cplx> b(pl.grid.n);
    if (T <= 1) {
        spread_range(pl, x, c, 0, M, b);
        return b;
    }
    std::vector<std::vector<cplx>> parts(T, std::vector<cplx>(pl.grid.n));
    std::vector<std::thread> workers;
    for (int t = 0; t < T; ++t) {
        const size_t j0 = M * t / T, j1 = M * (t + 1) / T;
        workers.emplace_back([&, t, j0, j1] { spread_range(pl, x, c, j0, j1, parts[t]); });
    }
    for (auto& th : workers) th.join();
    for (int t = 0; t < T; ++t)
        for (int l = 0; l < pl.grid.n; ++l) b[l] += parts[t][l];
    return b;
}

std::vector<cplx> interp(const plan& pl, const nu_points& pts, std::span<const cplx> b) {
    check_len(b.size(), static_cast<size_t>(pl.grid.n), "interp: fine grid length mismatch");
    const kernel_fn fn = make_fn(pl);
    const auto& x = pts.x();
    std::vector<cplx> out(x.size());
    for (size_t j = 0; j < x.size(); ++j) {
        cplx acc = 0;
        for_each_touched(pl, x[j], fn, [&](long idx, double v) { acc += b[idx] * v; });
        out[j] = acc;
    }
    return out;
}

std::vector<cplx> type1(const plan& pl, const nu_points& pts, std::span<const cplx> c) {
    std::vector<cplx> b = spread(pl, pts, c);
    pl.fft->forward(b);
    const int N = pl.grid.N, n = pl.grid.n;
    std::vector<cplx> f(N);
    for (int k = -N / 2; k < N / 2; ++k) f[k + N / 2] = pl.p_at(k) * b[(k + n) % n];
    return f;
}

std::vector<cplx> type2(const plan& pl, const nu_points& pts, std::span<const cplx> f) {
    const int N = pl.grid.N, n = pl.grid.n;
    check_len(f.size(), static_cast<size_t>(N), "type2: coefficient length must equal N");
    std::vector<cplx> b(n);
    // p_k is real, so its conjugate is itself
    for (int k = -N / 2; k < N / 2; ++k) b[(k + n) % n] = pl.p_at(k) * f[k + N / 2];
    // n * inverse DFT = sum_k b_k e^{-2 pi i l k/n}, done as conj(forward(conj))
    for (auto& v : b) v = std::conj(v);
    pl.fft->forward(b);
    for (auto& v : b) v = std::conj(v);
    return interp(pl, pts, b);
}

std::vector<cplx> direct_type1_modes(const nu_points& pts, std::span<const cplx> c, std::span<const int> modes) {
    check_len(c.size(), pts.size(), "direct_type1: strengths and points differ in length");
    const auto& x = pts.x();
    std::vector<cplx> f(modes.size());
    for (size_t i = 0; i < modes.size(); ++i) {
        csum s;
        const double k = modes[i];
        for (size_t j = 0; j < x.size(); ++j) s.add(c[j] * accurate_phase(k, x[j]));
        f[i] = s.value();
    }
    return f;
}

std::vector<cplx> direct_type1(const nu_points& pts, std::span<const cplx> c, int N) {
    if (N < 2 || N % 2) fail(errc::invalid_parameter, "direct_type1: N must be even and >= 2");
    std::vector<int> modes(N);
    for (int k = 0; k < N; ++k) modes[k] = k - N / 2;
    return direct_type1_modes(pts, c, modes);
}

std::vector<cplx> direct_type2(const nu_points& pts, std::span<const cplx> f) {
    const int N = static_cast<int>(f.size());
    if (N < 2 || N % 2) fail(errc::invalid_parameter, "direct_type2: N must be even and >= 2");
    const auto& x = pts.x();
    std::vector<cplx> c(x.size());
    for (size_t j = 0; j < x.size(); ++j) {
        csum s;
        for (int k = -N / 2; k < N / 2; ++k) s.add(f[k + N / 2] * accurate_phase(-k, x[j]));
        c[j] = s.value();
    }
    return c;
}

}  // namespace esnufft
