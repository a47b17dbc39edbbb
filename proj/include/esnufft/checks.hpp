#pragma once

#include <string>
#include <vector>

namespace esnufft {

struct check_row {
    std::string suite;
    std::string name;
    double measured = 0;
    double lower = 0;  // pass when lower <= measured <= upper
    double upper = 0;
    bool pass = false;
};

// suite: tails, sincs, pswf or all
std::vector<check_row> run_checks(const std::string& suite);

// individual measurements shared with the test suites

// max over 50 log-spaced xi in [3 beta, 100 beta] of |phi^(xi)| / (9 e^{-beta}(beta^2/xi^2 + 1/xi))
double tail_bound_ratio(double beta, int samples = 50);
// max over log-spaced xi in [beta^4, 10 beta^4] of |D^(xi)| xi^{5/4} / beta
double deviation_statistic(double beta, int samples = 20);
// max over draws of |phased sinc sum| n / log(b), with n = 100, sigma = 2
double phased_sinc_constant(double b, int draws = 64, long m_max = 100000);
// max over draws of gap n / (2 pi), sigma = 2
double sinc_gap_constant(double n, int draws = 1000);
// max over z of |sleph / psi0 - 1| (both normalized at 0)
double sleph_max_rel_err(double beta, int grid = 2000);
// (1 - mu0) / (4 sqrt(pi beta) e^{-2 beta})
double fuchs_ratio(double beta);
// |mu0 by lambda - mu0 by energy| / mu0
double mu0_route_gap(double beta);
// max pairwise deviation of center-normalized ES, KB and psi0
double kernel_spread(double beta, int grid = 2000);

}  // namespace esnufft
