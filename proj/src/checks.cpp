#include "esnufft/checks.hpp"

#include <cmath>
#include <numbers>

#include "esnufft/aliasing.hpp"
#include "esnufft/error.hpp"
#include "esnufft/kernels.hpp"
#include "esnufft/ktransform.hpp"
#include "esnufft/pswf.hpp"
#include "esnufft/sweep.hpp"

namespace esnufft {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, n > 1 ? double(i) / (n - 1) : 0.0);
    return v;
}

check_row row(const std::string& suite, const std::string& name, double measured, double lo, double hi) {
    return {suite, name, measured, lo, hi, measured >= lo && measured <= hi};
}

std::string num(double v) {
    std::string s = std::to_string(v);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

void tails(std::vector<check_row>& out) {
    for (double b : {2.0, 5.0, 10.0, 20.0})
        out.push_back(row("tails", "tail_bound_ratio_beta" + num(b), tail_bound_ratio(b), 0, 1));
    const double s2 = deviation_statistic(2), s3 = deviation_statistic(3);
    out.push_back(row("tails", "deviation_stat_beta2", s2, 0, HUGE_VAL));
    out.push_back(row("tails", "deviation_stat_beta3", s3, 0, HUGE_VAL));
    out.push_back(row("tails", "deviation_stat_ratio", std::max(s2, s3) / std::min(s2, s3), 1, 3));
}

void sincs(std::vector<check_row>& out) {
    const double c0 = phased_sinc_constant(2);
    for (double b : {2.0, 8.0, 32.0, 128.0}) {
        const double c = b == 2 ? c0 : phased_sinc_constant(b);
        out.push_back(row("sincs", "phased_sinc_C_b" + num(b), c, 0, 2 * c0));
    }
    const double g0 = sinc_gap_constant(50);
    for (double n : {50.0, 500.0, 5000.0}) {
        const double g = n == 50 ? g0 : sinc_gap_constant(n);
        out.push_back(row("sincs", "sinc_gap_C_n" + num(n), g, 0, 2 * g0));
    }
}

void pswf(std::vector<check_row>& out) {
    for (double b : {10.0, 30.0}) out.push_back(row("pswf", "sleph_rel_err_beta" + num(b), sleph_max_rel_err(b), 0, 0.2 / b));
    out.push_back(row("pswf", "fuchs_ratio_beta10", fuchs_ratio(10), 0.85, 1.15));
    out.push_back(row("pswf", "mu0_route_gap_beta8", mu0_route_gap(8), 0, 1e-6));
    out.push_back(row("pswf", "kernel_spread_beta30", kernel_spread(30), 0, 0.02));
}

}  // namespace

double tail_bound_ratio(double beta, int samples) {
    const kernel_spec k{kernel_family::es, beta};
    double worst = 0;
    for (double xi : logspace(3 * beta, 100 * beta, samples))
        worst = std::max(worst, std::abs(ft_quadrature(k, xi)) / es_ft_tail_bound(beta, xi));
    return worst;
}

double deviation_statistic(double beta, int samples) {
    const double b4 = std::pow(beta, 4);
    double worst = 0;
    for (double xi : logspace(b4, 10 * b4, samples))
        worst = std::max(worst, std::abs(es_ft_deviation(beta, xi)) * std::pow(xi, 1.25) / beta);
    return worst;
}

double phased_sinc_constant(double b, int draws, long m_max) {
    const double n = 100, sigma = 2;
    rng g(derive_seed(41, 1));
    double worst = 0;
    for (int i = 0; i < draws; ++i) {
        const double k = g.uniform(-n / (2 * sigma), n / (2 * sigma));
        const double x = g.uniform(0, 2 * pi);
        const double alpha = g.uniform(0, pi);
        worst = std::max(worst, std::abs(phased_sinc_sum(n, k, x, alpha, b, m_max)) * n / std::log(b));
    }
    return worst;
}

double sinc_gap_constant(double n, int draws) {
    const double sigma = 2;
    rng g(derive_seed(42, static_cast<std::uint64_t>(n)));
    double worst = 0;
    for (int i = 0; i < draws; ++i) {
        const double k = g.uniform(-n / (2 * sigma), n / (2 * sigma));
        const double x = g.uniform(0, 2 * pi);
        const double alpha = g.uniform(0, pi);
        worst = std::max(worst, quadrature_sinc_gap(n, k, x, alpha) * n / (2 * pi));
    }
    return worst;
}

double sleph_max_rel_err(double beta, int grid) {
    const pswf_result r = pswf_solve(beta);
    double worst = 0;
    for (int i = 0; i <= grid; ++i) {
        const double z = -1 + 2.0 * i / grid;
        worst = std::max(worst, std::abs(sleph_eval(beta, z) / pswf_eval_normalized(r, z) - 1));
    }
    return worst;
}

double fuchs_ratio(double beta) {
    const pswf_result r = pswf_solve(beta);
    return (1 - pswf_mu0(r)) / (4 * std::sqrt(pi * beta) * std::exp(-2 * beta));
}

double mu0_route_gap(double beta) {
    const mu0_routes m = pswf_mu0_routes(pswf_solve(beta));
    return std::abs(m.via_lambda - m.via_energy) / m.via_lambda;
}

double kernel_spread(double beta, int grid) {
    const pswf_result r = pswf_solve(beta);
    const kernel_spec es{kernel_family::es, beta}, kb{kernel_family::kb, beta};
    double worst = 0;
    for (int i = 0; i <= grid; ++i) {
        const double z = -1 + 2.0 * i / grid;
        const double a = kernel_eval(es, z), b = kernel_eval(kb, z), c = pswf_eval_normalized(r, z);
        worst = std::max({worst, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
    }
    return worst;
}

std::vector<check_row> run_checks(const std::string& suite) {
    std::vector<check_row> out;
    const bool all = suite == "all";
    if (!all && suite != "tails" && suite != "sincs" && suite != "pswf")
        fail(errc::invalid_parameter, "unknown check suite '" + suite + "'");
    if (all || suite == "tails") tails(out);
    if (all || suite == "sincs") sincs(out);
    if (all || suite == "pswf") pswf(out);
    return out;
}

}  // namespace esnufft
