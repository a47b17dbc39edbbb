#pragma once

#include <vector>

namespace esnufft {

struct pswf_result {
    double beta = 0;
    std::vector<double> legendre_coeffs;  // on sqrt(k+1/2) P_k, k = 0, 2, 4, ...
    double chi0 = 0;     // eigenvalue of the prolate differential operator
    double lambda0 = 0;  // int psi0 / psi0(0)
    double mu0 = 0;      // beta lambda0^2 / (2 pi)
    double residual = 0; // |T v - chi0 v|_inf / |T|_inf
    double psi0_at_0 = 0;
};

// default basis size ceil(2 beta) + 30 when basis_size <= 0
pswf_result pswf_solve(double beta, int basis_size = 0);

// psi0(z) with unit L2 norm on [-1,1]
double pswf_eval(const pswf_result& r, double z);
// psi0(z) / psi0(0)
double pswf_eval_normalized(const pswf_result& r, double z);

struct mu0_routes {
    double via_lambda = 0;  // beta lambda0^2 / (2 pi)
    double via_energy = 0;  // band energy of psi0^ over the total
};
mu0_routes pswf_mu0_routes(const pswf_result& r);
// mu0 from lambda0, verified against the energy route (throws beyond 1e-4)
double pswf_mu0(const pswf_result& r);

}  // namespace esnufft
