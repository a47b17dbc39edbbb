#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "esnufft/nufft.hpp"

namespace esnufft {

// mt19937_64 with uniforms built from the top 53 bits, so streams are
// identical on every platform
class rng {
public:
    explicit rng(std::uint64_t seed) : eng_(seed) {}
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    std::mt19937_64 eng_;
};

// splitmix64 mix of a base seed and stream indices
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

// points uniform in [-pi, pi)
std::vector<double> random_points(rng& g, size_t M);
// re and im uniform in [-1, 1)
std::vector<cplx> random_strengths(rng& g, size_t M);

double l1_norm(const std::vector<cplx>& v);
double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b);

struct trial_errors {
    double t1 = 0;  // max_k |f~ - f| / |c|_1
    double t2 = 0;  // max_j |c~ - c| / |f|_1
};
// one random instance with M points against the direct sums
trial_errors run_trial(const plan& pl, size_t M, std::uint64_t seed);

struct sweep_options {
    double sigma = 2.0;
    double gamma = 0.98;
    int w_min = 4;
    int w_max = 14;
    int modes = 128;
    int points = 1000;
    int trials = 5;
    std::uint64_t seed = 1;
    kernel_family kernel = kernel_family::es;
    int threads = 1;  // trials run concurrently; results do not depend on this
};

struct sweep_row {
    int w = 0;
    double beta = 0;
    double eps_inf_est = 0;
    double emp_max_err_t1 = 0;
    double emp_max_err_t2 = 0;
    double theory_rate_bound = 0;  // sqrt(w) e^{-rate w} for ES, kb_error_bound for KB
};

std::vector<sweep_row> error_sweep(const sweep_options& opt);

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace esnufft
