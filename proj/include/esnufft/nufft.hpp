#pragma once

#include <memory>
#include <span>
#include <vector>

#include "esnufft/fft.hpp"
#include "esnufft/kernels.hpp"

namespace esnufft {

// nonuniform points folded into [-pi, pi)
class nu_points {
public:
    nu_points() = default;
    explicit nu_points(std::span<const double> x);
    const std::vector<double>& x() const { return x_; }
    size_t size() const { return x_.size(); }

private:
    std::vector<double> x_;
};

double fold_to_period(double x);

struct plan_request {
    int N = 0;
    double sigma = 2.0;
    int width = 0;      // used when > 0
    double tol = 0;     // used when width == 0
    double gamma = 0.98;
    kernel_family kernel = kernel_family::es;
    int threads = 1;    // spreading workers
};

// ceil(ln(1/tol)/(pi gamma sqrt(1-1/sigma))) + 1, before clamping to [2,16]
int width_for_tol(double tol, double sigma, double gamma);

struct plan {
    grid_params grid;
    kernel_spec kernel;
    std::vector<double> p;       // deconvolution factors, k = -N/2 .. N/2-1
    bool width_clamped = false;  // tolerance asked for a width outside [2,16]
    int threads = 1;
    std::shared_ptr<const fft_plan> fft;

    double p_at(int k) const { return p[k + grid.N / 2]; }
};

plan make_plan(const plan_request& req);

// b_l = sum_j c_j psi~(2 pi l/n - x_j)
std::vector<cplx> spread(const plan& pl, const nu_points& pts, std::span<const cplx> c);
// out_j = sum_l b_l psi~(2 pi l/n - x_j)
std::vector<cplx> interp(const plan& pl, const nu_points& pts, std::span<const cplx> b);

// f_k = sum_j c_j e^{i k x_j}, k = -N/2 .. N/2-1
std::vector<cplx> type1(const plan& pl, const nu_points& pts, std::span<const cplx> c);
// c_j = sum_k f_k e^{-i k x_j}
std::vector<cplx> type2(const plan& pl, const nu_points& pts, std::span<const cplx> f);

// exact sums with compensated accumulation
std::vector<cplx> direct_type1(const nu_points& pts, std::span<const cplx> c, int N);
std::vector<cplx> direct_type2(const nu_points& pts, std::span<const cplx> f);
// direct type 1 restricted to the listed modes
std::vector<cplx> direct_type1_modes(const nu_points& pts, std::span<const cplx> c, std::span<const int> modes);

}  // namespace esnufft
