#include "esnufft/esnufft.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "esnufft/aliasing.hpp"
#include "esnufft/checks.hpp"
#include "esnufft/error.hpp"
#include "esnufft/kernels.hpp"
#include "esnufft/ktransform.hpp"
#include "esnufft/nufft.hpp"
#include "esnufft/pswf.hpp"
#include "esnufft/sweep.hpp"

using namespace esnufft;

struct esn_plan {
    esnufft::plan pl;
};

struct esn_pswf {
    pswf_result r;
};

struct esn_table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> text;
    std::vector<std::vector<double>> value;
};

namespace {

thread_local std::string last_error;

int set_error(int code, const std::string& msg) {
    last_error = msg;
    return code;
}

template <class F>
int guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return ESN_OK;
    } catch (const esnufft::error& e) {
        return set_error(static_cast<int>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(ESN_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return set_error(ESN_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(ESN_ERR_INTERNAL, "unknown error");
    }
}

#define ESN_NOT_NULL(p) \
    if (!(p)) return set_error(ESN_ERR_NULL_ARGUMENT, "null argument: " #p)

kernel_family to_family(int k) {
    if (k == ESN_KERNEL_ES) return kernel_family::es;
    if (k == ESN_KERNEL_KB) return kernel_family::kb;
    fail(errc::invalid_parameter, "unknown kernel family");
}

std::vector<cplx> to_complex(const double* a, size_t n) {
    std::vector<cplx> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = {a[2 * i], a[2 * i + 1]};
    return v;
}

void from_complex(const std::vector<cplx>& v, double* out) {
    for (size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void add_numeric_row(esn_table* t, const std::vector<double>& vals) {
    std::vector<std::string> txt;
    for (double v : vals) txt.push_back(fmt17(v));
    t->text.push_back(std::move(txt));
    t->value.push_back(vals);
}

}  // namespace

extern "C" {

const char* esn_version(void) { return "1.0.0"; }

const char* esn_last_error(void) { return last_error.c_str(); }

const char* esn_status_string(int status) {
    switch (status) {
        case ESN_OK: return "ok";
        case ESN_ERR_INVALID_PARAMETER: return "invalid parameter";
        case ESN_ERR_DOMAIN: return "domain error";
        case ESN_ERR_OVERFLOW: return "overflow";
        case ESN_ERR_UNSUPPORTED_SIZE: return "unsupported size";
        case ESN_ERR_INVALID_INPUT: return "invalid input";
        case ESN_ERR_TRUNCATION: return "truncation insufficient";
        case ESN_ERR_FREQUENCY_TOO_LARGE: return "frequency too large";
        case ESN_ERR_NUMERICAL: return "numerical inconsistency";
        case ESN_ERR_INTERNAL: return "internal error";
        case ESN_ERR_NULL_ARGUMENT: return "null argument";
        case ESN_ERR_OUT_OF_MEMORY: return "out of memory";
        default: return "unknown status";
    }
}

void esn_plan_options_default(esn_plan_options* opt) {
    if (!opt) return;
    opt->modes = 0;
    opt->sigma = 2.0;
    opt->width = 0;
    opt->tol = 1e-9;
    opt->gamma = 0.98;
    opt->kernel = ESN_KERNEL_ES;
    opt->threads = 1;
}

int esn_plan_create(const esn_plan_options* opt, esn_plan** out) {
    ESN_NOT_NULL(opt);
    ESN_NOT_NULL(out);
    *out = nullptr;
    return guarded([&] {
        plan_request req;
        req.N = opt->modes;
        req.sigma = opt->sigma;
        req.width = opt->width;
        req.tol = opt->tol;
        req.gamma = opt->gamma;
        req.kernel = to_family(opt->kernel);
        req.threads = opt->threads;
        *out = new esn_plan{make_plan(req)};
    });
}

void esn_plan_destroy(esn_plan* plan) { delete plan; }

int esn_plan_get_info(const esn_plan* plan, esn_plan_info* info) {
    ESN_NOT_NULL(plan);
    ESN_NOT_NULL(info);
    const auto& g = plan->pl.grid;
    info->modes = g.N;
    info->fine_grid = g.n;
    info->width = g.w;
    info->kernel = plan->pl.kernel.family == kernel_family::es ? ESN_KERNEL_ES : ESN_KERNEL_KB;
    info->width_clamped = plan->pl.width_clamped ? 1 : 0;
    info->sigma = g.sigma;
    info->gamma = g.gamma;
    info->beta = plan->pl.kernel.beta;
    info->alpha = g.alpha;
    info->h = g.h;
    return ESN_OK;
}

int esn_plan_deconv_factors(const esn_plan* plan, double* p) {
    ESN_NOT_NULL(plan);
    ESN_NOT_NULL(p);
    std::copy(plan->pl.p.begin(), plan->pl.p.end(), p);
    return ESN_OK;
}

int esn_type1(const esn_plan* plan, size_t M, const double* x, const double* c, double* f) {
    ESN_NOT_NULL(plan);
    ESN_NOT_NULL(x);
    ESN_NOT_NULL(c);
    ESN_NOT_NULL(f);
    return guarded([&] {
        const nu_points pts(std::span<const double>(x, M));
        from_complex(type1(plan->pl, pts, to_complex(c, M)), f);
    });
}

int esn_type2(const esn_plan* plan, size_t M, const double* x, const double* f, double* c) {
    ESN_NOT_NULL(plan);
    ESN_NOT_NULL(x);
    ESN_NOT_NULL(f);
    ESN_NOT_NULL(c);
    return guarded([&] {
        const nu_points pts(std::span<const double>(x, M));
        from_complex(type2(plan->pl, pts, to_complex(f, plan->pl.grid.N)), c);
    });
}

int esn_direct_type1(size_t M, const double* x, const double* c, int N, double* f) {
    ESN_NOT_NULL(x);
    ESN_NOT_NULL(c);
    ESN_NOT_NULL(f);
    return guarded([&] {
        const nu_points pts(std::span<const double>(x, M));
        from_complex(direct_type1(pts, to_complex(c, M), N), f);
    });
}

int esn_direct_type2(size_t M, const double* x, int N, const double* f, double* c) {
    ESN_NOT_NULL(x);
    ESN_NOT_NULL(f);
    ESN_NOT_NULL(c);
    return guarded([&] {
        if (N < 2) fail(errc::invalid_parameter, "N must be >= 2");
        const nu_points pts(std::span<const double>(x, M));
        from_complex(direct_type2(pts, to_complex(f, static_cast<size_t>(N))), c);
    });
}

int esn_eps_inf_estimate(const esn_plan* plan, int k_samples, int x_samples, esn_aliasing_report* out) {
    ESN_NOT_NULL(plan);
    ESN_NOT_NULL(out);
    return guarded([&] {
        const aliasing_report r = eps_inf_estimate(plan->pl, k_samples, x_samples);
        out->w = r.w;
        out->beta = r.beta;
        out->sigma = r.sigma;
        out->gamma = r.gamma;
        out->eps_inf_est = r.eps_inf_est;
        out->tail_terms_used = r.tail_terms_used;
        out->tail_remainder_bound = r.tail_remainder_bound;
        out->theory_exponent = r.theory_exponent;
    });
}

int esn_beta_from(double gamma, int w, double sigma, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = beta_from(gamma, w, sigma); });
}

int esn_kernel_eval(int kernel, double beta, double z, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = kernel_eval(make_kernel(to_family(kernel), beta), z); });
}

int esn_kb_asymptotic_eval(double beta, double z, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = kb_asymptotic_eval(beta, z); });
}

int esn_slepian_asymptotic_eval(double beta, double z, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = slepian_asymptotic_eval(beta, z); });
}

int esn_sleph_eval(double beta, double z, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = sleph_eval(beta, z); });
}

int esn_ft_quadrature(int kernel, double beta, double xi, double* re, double* im) {
    ESN_NOT_NULL(re);
    return guarded([&] {
        const auto v = ft_quadrature(make_kernel(to_family(kernel), beta), xi);
        *re = v.real();
        if (im) *im = v.imag();
    });
}

int esn_kb_ft_analytic(double beta, double xi, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = kb_ft_analytic(beta, xi); });
}

int esn_es_ft_below_cutoff(double beta, double rho, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = es_ft_below_cutoff(beta, rho); });
}

int esn_es_ft_above_cutoff(double beta, double rho, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = es_ft_above_cutoff(beta, rho); });
}

int esn_es_ft_sinc_tail(double beta, double xi, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = es_ft_sinc_tail(beta, xi); });
}

int esn_es_ft_deviation(double beta, double xi, double* re, double* im) {
    ESN_NOT_NULL(re);
    return guarded([&] {
        const auto v = es_ft_deviation(beta, xi);
        *re = v.real();
        if (im) *im = v.imag();
    });
}

int esn_es_ft_tail_bound(double beta, double xi, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = es_ft_tail_bound(beta, xi); });
}

int esn_es_rate(double sigma, double gamma, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = es_rate(sigma, gamma); });
}

int esn_kb_error_bound(int w, double sigma, double* out) {
    ESN_NOT_NULL(out);
    return guarded([&] { *out = kb_error_bound(w, sigma); });
}

int esn_pswf_create(double beta, int basis_size, esn_pswf** out) {
    ESN_NOT_NULL(out);
    *out = nullptr;
    return guarded([&] { *out = new esn_pswf{pswf_solve(beta, basis_size)}; });
}

void esn_pswf_destroy(esn_pswf* p) { delete p; }

int esn_pswf_eval(const esn_pswf* p, double z, int normalize_center, double* out) {
    ESN_NOT_NULL(p);
    ESN_NOT_NULL(out);
    return guarded([&] { *out = normalize_center ? pswf_eval_normalized(p->r, z) : pswf_eval(p->r, z); });
}

int esn_pswf_eigenvalues(const esn_pswf* p, double* chi0, double* lambda0, double* mu0) {
    ESN_NOT_NULL(p);
    if (chi0) *chi0 = p->r.chi0;
    if (lambda0) *lambda0 = p->r.lambda0;
    if (mu0) *mu0 = p->r.mu0;
    return ESN_OK;
}

void esn_sweep_options_default(esn_sweep_options* opt) {
    if (!opt) return;
    const sweep_options d;
    opt->sigma = d.sigma;
    opt->gamma = d.gamma;
    opt->w_min = d.w_min;
    opt->w_max = d.w_max;
    opt->modes = d.modes;
    opt->points = d.points;
    opt->trials = d.trials;
    opt->seed = d.seed;
    opt->kernel = ESN_KERNEL_ES;
    opt->threads = d.threads;
}

int esn_error_sweep(const esn_sweep_options* opt, esn_table** out) {
    ESN_NOT_NULL(opt);
    ESN_NOT_NULL(out);
    *out = nullptr;
    return guarded([&] {
        sweep_options o;
        o.sigma = opt->sigma;
        o.gamma = opt->gamma;
        o.w_min = opt->w_min;
        o.w_max = opt->w_max;
        o.modes = opt->modes;
        o.points = opt->points;
        o.trials = opt->trials;
        o.seed = opt->seed;
        o.kernel = to_family(opt->kernel);
        o.threads = opt->threads;
        const auto rows = error_sweep(o);
        auto t = std::make_unique<esn_table>();
        t->columns = {"w", "beta", "eps_inf_est", "emp_max_err_t1", "emp_max_err_t2", "theory_rate_bound"};
        for (const auto& r : rows)
            add_numeric_row(t.get(), {double(r.w), r.beta, r.eps_inf_est, r.emp_max_err_t1, r.emp_max_err_t2,
                                      r.theory_rate_bound});
        *out = t.release();
    });
}

int esn_run_checks(const char* suite, esn_table** out, int* all_passed) {
    ESN_NOT_NULL(suite);
    ESN_NOT_NULL(out);
    *out = nullptr;
    return guarded([&] {
        const auto rows = run_checks(suite);
        auto t = std::make_unique<esn_table>();
        t->columns = {"suite", "check", "measured", "lower", "upper", "pass"};
        bool ok = true;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (const auto& r : rows) {
            t->text.push_back({r.suite, r.name, fmt17(r.measured), fmt17(r.lower), fmt17(r.upper), r.pass ? "1" : "0"});
            t->value.push_back({nan, nan, r.measured, r.lower, r.upper, r.pass ? 1.0 : 0.0});
            ok = ok && r.pass;
        }
        if (all_passed) *all_passed = ok ? 1 : 0;
        *out = t.release();
    });
}

size_t esn_table_rows(const esn_table* t) { return t ? t->text.size() : 0; }
size_t esn_table_cols(const esn_table* t) { return t ? t->columns.size() : 0; }

const char* esn_table_column_name(const esn_table* t, size_t col) {
    if (!t || col >= t->columns.size()) return nullptr;
    return t->columns[col].c_str();
}

const char* esn_table_cell_text(const esn_table* t, size_t row, size_t col) {
    if (!t || row >= t->text.size() || col >= t->columns.size()) return nullptr;
    return t->text[row][col].c_str();
}

double esn_table_cell_value(const esn_table* t, size_t row, size_t col) {
    if (!t || row >= t->value.size() || col >= t->columns.size()) return std::numeric_limits<double>::quiet_NaN();
    return t->value[row][col];
}

void esn_table_destroy(esn_table* t) { delete t; }

}  // extern "C"
