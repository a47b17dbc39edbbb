#include "esnufft/pswf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "esnufft/error.hpp"
#include "esnufft/specfun.hpp"

namespace esnufft {

namespace {

constexpr double pi = std::numbers::pi;

// number of eigenvalues of the tridiagonal (a, e) below x
int sturm_count(const std::vector<double>& a, const std::vector<double>& e, double x) {
    int cnt = 0;
    double d = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        d = a[i] - x - (i ? e[i - 1] * e[i - 1] / d : 0.0);
        if (d == 0) d = -std::numeric_limits<double>::min();
        if (d < 0) ++cnt;
    }
    return cnt;
}

// solve (T - s I) y = b for symmetric positive definite T - s I
std::vector<double> ldl_solve(const std::vector<double>& a, const std::vector<double>& e, double s,
                              std::vector<double> b) {
    const size_t m = a.size();
    std::vector<double> d(m), l(m);
    d[0] = a[0] - s;
    for (size_t i = 1; i < m; ++i) {
        l[i] = e[i - 1] / d[i - 1];
        d[i] = a[i] - s - l[i] * e[i - 1];
    }
    for (size_t i = 1; i < m; ++i) b[i] -= l[i] * b[i - 1];
    for (size_t i = 0; i < m; ++i) b[i] /= d[i];
    for (size_t i = m - 1; i-- > 0;) b[i] -= l[i + 1] * b[i + 1];
    return b;
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// sum_k c_k P_k(z) by Clenshaw
double legendre_series(const std::vector<double>& c, double z) {
    double b1 = 0, b2 = 0;
    for (size_t kk = c.size(); kk-- > 0;) {
        const double k = double(kk);
        const double alpha = (2 * k + 1) * z / (k + 1);
        const double betan = -(k + 1) / (k + 2);
        const double b0 = c[kk] + alpha * b1 + betan * b2;
        b2 = b1;
        b1 = b0;
    }
    return b1;
}

std::vector<double> full_coeffs(const pswf_result& r) {
    std::vector<double> c(2 * r.legendre_coeffs.size(), 0.0);
    for (size_t i = 0; i < r.legendre_coeffs.size(); ++i) c[2 * i] = r.legendre_coeffs[i] * std::sqrt(2.0 * i + 0.5);
    return c;
}

}  // namespace

pswf_result pswf_solve(double beta, int basis_size) {
    if (!(beta > 0 && beta <= 60)) fail(errc::invalid_parameter, "pswf_solve: beta must lie in (0, 60]");
    const int min_basis = static_cast<int>(std::ceil(2 * beta)) + 30;
    if (basis_size <= 0) basis_size = min_basis;
    if (basis_size < 2) fail(errc::invalid_parameter, "pswf_solve: basis_size must be >= 2");
    const size_t m = (basis_size + 1) / 2;
    const double c2 = beta * beta;
    std::vector<double> a(m), e(m > 1 ? m - 1 : 0);
    for (size_t i = 0; i < m; ++i) {
        const double k = 2.0 * i;
        a[i] = k * (k + 1) + c2 * (2 * k * (k + 1) - 1) / ((2 * k + 3) * (2 * k - 1));
        if (i + 1 < m) e[i] = c2 * (k + 2) * (k + 1) / ((2 * k + 3) * std::sqrt((2 * k + 1) * (2 * k + 5)));
    }
    double tnorm = 0;
    for (size_t i = 0; i < m; ++i)
        tnorm = std::max(tnorm, std::abs(a[i]) + (i ? std::abs(e[i - 1]) : 0.0) + (i + 1 < m ? std::abs(e[i]) : 0.0));

    // bisection for the smallest eigenvalue
    double lo = -tnorm, hi = a[0] + 1;
    for (int it = 0; it < 300 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(a, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    // inverse iteration with a shift just below the eigenvalue keeps the factorization definite
    const double shift = lo - 1e-9 * std::max(1.0, std::abs(lo));
    std::vector<double> v(m, 1.0);
    for (int it = 0; it < 6; ++it) {
        v = ldl_solve(a, e, shift, v);
        const double nv = norm2(v);
        for (double& x : v) x /= nv;
    }
    pswf_result r;
    r.beta = beta;
    // Rayleigh quotient and residual
    std::vector<double> tv(m);
    for (size_t i = 0; i < m; ++i) {
        tv[i] = a[i] * v[i];
        if (i) tv[i] += e[i - 1] * v[i - 1];
        if (i + 1 < m) tv[i] += e[i] * v[i + 1];
    }
    double chi = 0;
    for (size_t i = 0; i < m; ++i) chi += v[i] * tv[i];
    double res = 0;
    for (size_t i = 0; i < m; ++i) res = std::max(res, std::abs(tv[i] - chi * v[i]));
    r.chi0 = chi;
    r.residual = res / tnorm;
    if (r.residual > 1e-12) fail(errc::numerical_inconsistency, "pswf_solve: eigen-residual too large");

    double vmax = 0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    if (std::abs(v.back()) > 1e-13 * vmax) fail(errc::truncation_insufficient, "pswf_solve: Legendre coefficients not decayed");

    r.legendre_coeffs = v;
    double p0 = pswf_eval(r, 0.0);
    if (p0 < 0) {
        for (double& x : r.legendre_coeffs) x = -x;
        p0 = -p0;
    }
    r.psi0_at_0 = p0;
    // int P-bar_0 = sqrt(2); higher even terms integrate to zero
    r.lambda0 = std::sqrt(2.0) * r.legendre_coeffs[0] / p0;
    r.mu0 = beta * r.lambda0 * r.lambda0 / (2 * pi);
    return r;
}

double pswf_eval(const pswf_result& r, double z) {
    if (!(std::abs(z) <= 1)) fail(errc::domain_error, "pswf_eval: requires |z| <= 1");
    return legendre_series(full_coeffs(r), z);
}

double pswf_eval_normalized(const pswf_result& r, double z) { return pswf_eval(r, z) / r.psi0_at_0; }

mu0_routes pswf_mu0_routes(const pswf_result& r) {
    mu0_routes out;
    out.via_lambda = r.mu0;
    const auto c = full_coeffs(r);
    const int deg = static_cast<int>(c.size());
    const auto& tr = gauss_legendre(deg + static_cast<int>(std::ceil(r.beta)) + 40);
    std::vector<double> vals(tr.order);
    double l2 = 0;
    for (int q = 0; q < tr.order; ++q) {
        vals[q] = legendre_series(c, tr.nodes[q]);
        l2 += tr.weights[q] * vals[q] * vals[q];
    }
    // band energy int_{-beta}^{beta} |psi0^|^2; Plancherel gives 2 pi |psi0|^2 for the whole line
    const auto& xr = gauss_legendre(static_cast<int>(std::ceil(r.beta)) + 60);
    double band = 0;
    for (int i = 0; i < xr.order; ++i) {
        const double xi = r.beta * xr.nodes[i];
        double f = 0;
        for (int q = 0; q < tr.order; ++q) f += tr.weights[q] * vals[q] * std::cos(xi * tr.nodes[q]);
        band += xr.weights[i] * r.beta * f * f;
    }
    out.via_energy = band / (2 * pi * l2);
    return out;
}

double pswf_mu0(const pswf_result& r) {
    const mu0_routes m = pswf_mu0_routes(r);
    if (std::abs(m.via_lambda - m.via_energy) > 1e-4 * std::abs(m.via_lambda))
        fail(errc::numerical_inconsistency, "pswf_mu0: eigenvalue routes disagree");
    return m.via_lambda;
}

}  // namespace esnufft
