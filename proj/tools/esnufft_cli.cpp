// esnufft command-line front end; talks to the library through the C API only.

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csv.hpp"
#include "esnufft/esnufft.h"

using esn_cli::csv_error;
using esn_cli::csv_writer;
using esn_cli::format_number;

namespace {

enum exit_code { exit_ok = 0, exit_usage = 1, exit_data = 2, exit_check = 3 };

// library failure carrying its status code
struct lib_error : std::runtime_error {
    int status;
    lib_error(int s, const std::string& m) : std::runtime_error(m), status(s) {}
};

void check(int status, const char* what) {
    if (status != ESN_OK) throw lib_error(status, std::string(what) + ": " + esn_last_error());
}

int exit_for(int status) {
    switch (status) {
        case ESN_ERR_INVALID_PARAMETER:
        case ESN_ERR_DOMAIN:
        case ESN_ERR_UNSUPPORTED_SIZE:
            return exit_usage;
        default:
            return exit_data;
    }
}

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_kernel(const std::string& k) { return k == "kb" ? ESN_KERNEL_KB : ESN_KERNEL_ES; }

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct plan_deleter {
    void operator()(esn_plan* p) const { esn_plan_destroy(p); }
};
struct pswf_deleter {
    void operator()(esn_pswf* p) const { esn_pswf_destroy(p); }
};
struct table_deleter {
    void operator()(esn_table* t) const { esn_table_destroy(t); }
};

// ---- transform ----

struct transform_args {
    std::string type;
    std::string points, data, out;
    int modes = 0;
    double sigma = 2.0, gamma = 0.98, tol = 0;
    int width = 0;
    std::string kernel = "es";
    int threads = 1;
};

int run_transform(const transform_args& a) {
    const std::vector<double> x = esn_cli::read_points(a.points);
    const std::vector<double> data = esn_cli::read_complex(a.data);
    const size_t M = x.size();
    const size_t rows = data.size() / 2;
    int N = a.modes;
    if (a.type == "type1") {
        if (N <= 0) throw usage_error("type1 requires --modes");
        if (rows != M)
            throw csv_error(a.data + ": expected " + std::to_string(M) + " strength rows (one per point), found " +
                            std::to_string(rows));
    } else {
        if (N <= 0) N = static_cast<int>(rows);
        if (rows != static_cast<size_t>(N))
            throw csv_error(a.data + ": expected " + std::to_string(N) + " coefficient rows, found " + std::to_string(rows));
    }
    esn_plan_options opt;
    esn_plan_options_default(&opt);
    opt.modes = N;
    opt.sigma = a.sigma;
    opt.gamma = a.gamma;
    opt.width = a.width;
    opt.tol = a.width > 0 ? 0.0 : (a.tol > 0 ? a.tol : 1e-9);
    opt.kernel = parse_kernel(a.kernel);
    opt.threads = a.threads;
    esn_plan* raw = nullptr;
    check(esn_plan_create(&opt, &raw), "plan");
    std::unique_ptr<esn_plan, plan_deleter> plan(raw);
    esn_plan_info info;
    check(esn_plan_get_info(plan.get(), &info), "plan info");
    if (info.width_clamped) std::fprintf(stderr, "warning: requested tolerance needs a width outside [2,16]; using w=%d\n", info.width);

    std::vector<double> out;
    if (a.type == "type1") {
        out.resize(2 * static_cast<size_t>(N));
        check(esn_type1(plan.get(), M, x.data(), data.data(), out.data()), "type1");
    } else {
        out.resize(2 * M);
        check(esn_type2(plan.get(), M, x.data(), data.data(), out.data()), "type2");
    }
    {
        csv_writer w(a.out);
        w.row({"re", "im"});
        for (size_t i = 0; i < out.size() / 2; ++i) w.row({format_number(out[2 * i]), format_number(out[2 * i + 1])});
    }
    esn_aliasing_report rep;
    std::string eps = "n/a";
    if (esn_eps_inf_estimate(plan.get(), 33, 64, &rep) == ESN_OK) eps = format_number(rep.eps_inf_est);
    std::printf("%s N=%d M=%zu n=%d w=%d beta=%.6g sigma=%.6g gamma=%.6g kernel=%s eps_inf_est=%s\n", a.type.c_str(),
                N, M, info.fine_grid, info.width, info.beta, info.sigma, info.gamma, a.kernel.c_str(), eps.c_str());
    return exit_ok;
}

// ---- kernel-table ----

struct kernel_table_args {
    double beta = 0;
    int grid = 1000;
    std::string which = "es,kb,kba,slep,sleph,pswf";
    std::string normalize = "center";
    std::string ratio_to;
    std::string out;
};

int run_kernel_table(const kernel_table_args& a) {
    const auto which = split_list(a.which);
    const std::set<std::string> known{"es", "kb", "kba", "slep", "sleph", "pswf"};
    for (const auto& k : which)
        if (!known.count(k)) throw usage_error("unknown kernel '" + k + "' in --which");
    if (which.empty()) throw usage_error("--which is empty");
    if (a.grid < 1) throw usage_error("--grid must be >= 1");
    if (!a.ratio_to.empty() && a.ratio_to != "pswf") throw usage_error("--ratio-to accepts only 'pswf'");
    const bool center = a.normalize == "center";
    bool need_pswf = !a.ratio_to.empty();
    for (const auto& k : which) need_pswf = need_pswf || k == "pswf";
    std::unique_ptr<esn_pswf, pswf_deleter> ps;
    if (need_pswf) {
        esn_pswf* raw = nullptr;
        check(esn_pswf_create(a.beta, 0, &raw), "pswf");
        ps.reset(raw);
    }
    auto value = [&](const std::string& k, double z, double& v) -> bool {
        int st = ESN_OK;
        if (k == "es") st = esn_kernel_eval(ESN_KERNEL_ES, a.beta, z, &v);
        else if (k == "kb") st = esn_kernel_eval(ESN_KERNEL_KB, a.beta, z, &v);
        else if (k == "kba") st = esn_kb_asymptotic_eval(a.beta, z, &v);
        else if (k == "slep") st = esn_slepian_asymptotic_eval(a.beta, z, &v);
        else if (k == "sleph") st = esn_sleph_eval(a.beta, z, &v);
        else st = esn_pswf_eval(ps.get(), z, center ? 1 : 0, &v);
        if (st == ESN_ERR_DOMAIN) return false;  // outside the form's range: blank cell
        check(st, k.c_str());
        return true;
    };
    csv_writer w(a.out);
    std::vector<std::string> header{"z"};
    header.insert(header.end(), which.begin(), which.end());
    w.row(header);
    for (int i = 0; i <= a.grid; ++i) {
        const double z = (i == a.grid) ? 1.0 : -1.0 + 2.0 * i / a.grid;
        double denom = 1;
        bool have_denom = true;
        if (!a.ratio_to.empty()) have_denom = value("pswf", z, denom);
        std::vector<std::string> cells{format_number(z)};
        for (const auto& k : which) {
            double v = 0;
            if (!value(k, z, v) || !have_denom) {
                cells.emplace_back();
                continue;
            }
            cells.push_back(format_number(a.ratio_to.empty() ? v : v / denom));
        }
        w.row(cells);
    }
    return exit_ok;
}

// ---- ft-table ----

struct ft_table_args {
    double beta = 0, xi_max = 0;
    int samples = 200;
    std::string which = "quad,asym,kb,sinc";
    std::string out;
};

int run_ft_table(const ft_table_args& a) {
    const auto which = split_list(a.which);
    const std::set<std::string> known{"quad", "asym", "kb", "sinc"};
    std::set<std::string> want;
    for (const auto& k : which) {
        if (!known.count(k)) throw usage_error("unknown column '" + k + "' in --which");
        want.insert(k);
    }
    if (!(a.beta > 0)) throw usage_error("--beta must be positive");
    if (!(a.xi_max > 0)) throw usage_error("--xi-max must be positive");
    if (a.samples < 2) throw usage_error("--samples must be >= 2");
    std::vector<std::string> header{"xi", "rho"};
    for (const char* k : {"quad", "asym", "kb", "sinc"})
        if (want.count(k)) header.push_back(k);
    const bool diff = want.count("quad") && want.count("asym");
    if (diff) header.push_back("absdiff");
    csv_writer w(a.out);
    w.row(header);
    for (int i = 0; i < a.samples; ++i) {
        const double xi = (i == a.samples - 1) ? a.xi_max : a.xi_max * i / (a.samples - 1);
        const double rho = xi / a.beta;
        std::vector<std::string> cells{format_number(xi), format_number(rho)};
        double q = 0, s = 0;
        bool have_q = false, have_s = false;
        if (want.count("quad")) {
            double im = 0;
            const int st = esn_ft_quadrature(ESN_KERNEL_ES, a.beta, xi, &q, &im);
            if (st == ESN_ERR_FREQUENCY_TOO_LARGE) {
                cells.emplace_back();
            } else {
                check(st, "quadrature");
                have_q = true;
                cells.push_back(format_number(std::abs(q)));
            }
        }
        if (want.count("asym")) {
            if (std::abs(std::abs(rho) - 1) < 0.02) {
                cells.emplace_back();
            } else {
                if (std::abs(rho) < 1) check(esn_es_ft_below_cutoff(a.beta, rho, &s), "asymptotic");
                else check(esn_es_ft_above_cutoff(a.beta, rho, &s), "asymptotic");
                have_s = true;
                cells.push_back(format_number(std::abs(s)));
            }
        }
        if (want.count("kb")) {
            double v = 0;
            check(esn_kb_ft_analytic(a.beta, xi, &v), "kb transform");
            cells.push_back(format_number(std::abs(v)));
        }
        if (want.count("sinc")) {
            double v = 0;
            if (xi == 0) {
                cells.emplace_back();
            } else {
                check(esn_es_ft_sinc_tail(a.beta, xi, &v), "sinc tail");
                cells.push_back(format_number(std::abs(v)));
            }
        }
        if (diff) cells.push_back(have_q && have_s ? format_number(std::abs(q - s)) : std::string());
        w.row(cells);
    }
    return exit_ok;
}

// ---- tables from the library ----

void write_table(const esn_table* t, const std::string& path) {
    csv_writer w(path);
    std::vector<std::string> header;
    for (size_t c = 0; c < esn_table_cols(t); ++c) header.push_back(esn_table_column_name(t, c));
    w.row(header);
    for (size_t r = 0; r < esn_table_rows(t); ++r) {
        std::vector<std::string> cells;
        for (size_t c = 0; c < esn_table_cols(t); ++c) cells.push_back(esn_table_cell_text(t, r, c));
        w.row(cells);
    }
}

struct sweep_args {
    double sigma = 2.0, gamma = 0.98;
    int w_min = 4, w_max = 14, modes = 128, points = 1000, trials = 5, threads = 1;
    std::uint64_t seed = 1;
    std::string kernel = "es";
    std::string out;
};

int run_sweep(const sweep_args& a) {
    esn_sweep_options o;
    esn_sweep_options_default(&o);
    o.sigma = a.sigma;
    o.gamma = a.gamma;
    o.w_min = a.w_min;
    o.w_max = a.w_max;
    o.modes = a.modes;
    o.points = a.points;
    o.trials = a.trials;
    o.seed = a.seed;
    o.kernel = parse_kernel(a.kernel);
    o.threads = a.threads;
    esn_table* raw = nullptr;
    check(esn_error_sweep(&o, &raw), "error sweep");
    std::unique_ptr<esn_table, table_deleter> t(raw);
    write_table(t.get(), a.out);
    return exit_ok;
}

int run_checks(const std::string& suite, const std::string& out) {
    esn_table* raw = nullptr;
    int ok = 0;
    check(esn_run_checks(suite.c_str(), &raw, &ok), "checks");
    std::unique_ptr<esn_table, table_deleter> t(raw);
    write_table(t.get(), out);
    if (!ok) {
        std::fprintf(stderr, "one or more checks failed\n");
        return exit_check;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"esnufft: 1D nonuniform FFT with the exponential of semicircle kernel"};
    app.require_subcommand(1);
    const std::set<std::string> kernels{"es", "kb"};

    transform_args ta;
    auto* tr = app.add_subcommand("transform", "run a type 1 or type 2 transform on CSV data");
    tr->add_option("type", ta.type, "type1 or type2")->required()->check(CLI::IsMember({"type1", "type2"}));
    tr->add_option("--points", ta.points, "CSV file with header 'x'")->required();
    tr->add_option("--data", ta.data, "CSV file with header 're,im'")->required();
    tr->add_option("--modes", ta.modes, "number of modes N (even)");
    tr->add_option("--sigma", ta.sigma, "upsampling factor")->capture_default_str();
    auto* tol = tr->add_option("--tol", ta.tol, "requested tolerance (default 1e-9)");
    auto* width = tr->add_option("--width", ta.width, "kernel width in grid points");
    tol->excludes(width);
    tr->add_option("--gamma", ta.gamma, "safety factor")->capture_default_str();
    tr->add_option("--kernel", ta.kernel, "es or kb")->check(CLI::IsMember(kernels))->capture_default_str();
    tr->add_option("--out", ta.out, "output CSV")->required();
    tr->add_option("--threads", ta.threads, "spreading workers")->capture_default_str();

    kernel_table_args ka;
    auto* kt = app.add_subcommand("kernel-table", "tabulate kernels on [-1,1]");
    kt->add_option("--beta", ka.beta, "shape parameter")->required();
    kt->add_option("--grid", ka.grid, "number of intervals")->capture_default_str();
    kt->add_option("--which", ka.which, "comma list of es,kb,kba,slep,sleph,pswf")->capture_default_str();
    kt->add_option("--normalize", ka.normalize, "center or none")
        ->check(CLI::IsMember({"center", "none"}))
        ->capture_default_str();
    kt->add_option("--ratio-to", ka.ratio_to, "divide every column by this kernel (pswf)");
    kt->add_option("--out", ka.out, "output CSV (default stdout)");

    ft_table_args fa;
    auto* ft = app.add_subcommand("ft-table", "tabulate kernel Fourier transforms and asymptotics");
    ft->add_option("--beta", fa.beta, "shape parameter")->required();
    ft->add_option("--xi-max", fa.xi_max, "largest frequency")->required();
    ft->add_option("--samples", fa.samples, "number of frequencies")->capture_default_str();
    ft->add_option("--which", fa.which, "comma list of quad,asym,kb,sinc")->capture_default_str();
    ft->add_option("--out", fa.out, "output CSV (default stdout)");

    sweep_args sa;
    auto* sw = app.add_subcommand("error-sweep", "empirical and estimated errors across kernel widths");
    sw->add_option("--sigma", sa.sigma, "upsampling factor")->capture_default_str();
    sw->add_option("--gamma", sa.gamma, "safety factor")->capture_default_str();
    sw->add_option("--w-min", sa.w_min, "smallest width")->capture_default_str();
    sw->add_option("--w-max", sa.w_max, "largest width")->capture_default_str();
    sw->add_option("--modes", sa.modes, "number of modes")->capture_default_str();
    sw->add_option("--points", sa.points, "points per trial")->capture_default_str();
    sw->add_option("--trials", sa.trials, "trials per width")->capture_default_str();
    sw->add_option("--seed", sa.seed, "random seed")->capture_default_str();
    sw->add_option("--kernel", sa.kernel, "es or kb")->check(CLI::IsMember(kernels))->capture_default_str();
    sw->add_option("--threads", sa.threads, "concurrent trials")->capture_default_str();
    sw->add_option("--out", sa.out, "output CSV (default stdout)");

    std::string suite = "all", check_out;
    auto* ck = app.add_subcommand("checks", "run the transform-tail, sinc-sum and PSWF verifications");
    ck->add_option("--suite", suite, "tails, sincs, pswf or all")
        ->check(CLI::IsMember({"tails", "sincs", "pswf", "all"}))
        ->capture_default_str();
    ck->add_option("--out", check_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*tr) return run_transform(ta);
        if (*kt) return run_kernel_table(ka);
        if (*ft) return run_ft_table(fa);
        if (*sw) return run_sweep(sa);
        if (*ck) return run_checks(suite, check_out);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const csv_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_data;
    } catch (const lib_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_for(e.status);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_data;
    }
    return exit_usage;
}
