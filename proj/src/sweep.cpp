#include "esnufft/sweep.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "esnufft/aliasing.hpp"
#include "esnufft/error.hpp"

namespace esnufft {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return splitmix(splitmix(splitmix(base) ^ a) ^ b);
}

std::vector<double> random_points(rng& g, size_t M) {
    std::vector<double> x(M);
    for (auto& v : x) v = g.uniform(-std::numbers::pi, std::numbers::pi);
    return x;
}

std::vector<cplx> random_strengths(rng& g, size_t M) {
    std::vector<cplx> c(M);
    for (auto& v : c) {
        const double re = g.uniform(-1, 1);
        const double im = g.uniform(-1, 1);
        v = {re, im};
    }
    return c;
}

double l1_norm(const std::vector<cplx>& v) {
    double s = 0;
    for (const auto& z : v) s += std::abs(z);
    return s;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) fail(errc::invalid_input, "max_abs_diff: length mismatch");
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

trial_errors run_trial(const plan& pl, size_t M, std::uint64_t seed) {
    rng g(seed);
    const nu_points pts(random_points(g, M));
    const auto c = random_strengths(g, M);
    const auto f = random_strengths(g, pl.grid.N);
    trial_errors e;
    e.t1 = max_abs_diff(type1(pl, pts, c), direct_type1(pts, c, pl.grid.N)) / l1_norm(c);
    e.t2 = max_abs_diff(type2(pl, pts, f), direct_type2(pts, f)) / l1_norm(f);
    return e;
}

std::vector<sweep_row> error_sweep(const sweep_options& opt) {
    if (opt.w_min < 2 || opt.w_max < opt.w_min || opt.w_max > 16)
        fail(errc::invalid_parameter, "error_sweep: need 2 <= w_min <= w_max <= 16");
    if (opt.trials < 1 || opt.points < 1) fail(errc::invalid_parameter, "error_sweep: trials and points must be >= 1");
    if (opt.threads < 1) fail(errc::invalid_parameter, "error_sweep: threads must be >= 1");
    std::vector<sweep_row> rows;
    for (int w = opt.w_min; w <= opt.w_max; ++w) {
        plan_request req;
        req.N = opt.modes;
        req.sigma = opt.sigma;
        req.width = w;
        req.gamma = opt.gamma;
        req.kernel = opt.kernel;
        const plan pl = make_plan(req);
        sweep_row row;
        row.w = w;
        row.beta = pl.kernel.beta;
        row.eps_inf_est = eps_inf_estimate(pl).eps_inf_est;

        std::vector<trial_errors> errs(opt.trials);
        auto work = [&](int t0, int stride) {
            for (int t = t0; t < opt.trials; t += stride)
                errs[t] = run_trial(pl, opt.points, derive_seed(opt.seed, w, t));
        };
        const int T = std::min(opt.threads, opt.trials);
        if (T <= 1) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < T; ++i) pool.emplace_back(work, i, T);
            for (auto& th : pool) th.join();
        }
        for (const auto& e : errs) {
            row.emp_max_err_t1 = std::max(row.emp_max_err_t1, e.t1);
            row.emp_max_err_t2 = std::max(row.emp_max_err_t2, e.t2);
        }
        if (opt.kernel == kernel_family::kb) {
            row.theory_rate_bound = kb_error_bound(w, pl.grid.sigma);
        } else {
            const double g = opt.gamma, s = pl.grid.sigma;
            const double rad = 1 - 1 / s - (1 / (g * g) - 1) / (4 * s * s);
            const double rate = rad > 0 ? std::numbers::pi * g * std::sqrt(rad) : 0.0;
            row.theory_rate_bound = std::sqrt(double(w)) * std::exp(-rate * w);
        }
        rows.push_back(row);
    }
    return rows;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) fail(errc::invalid_input, "fit_slope: need matching samples");
    const double n = double(x.size());
    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace esnufft
