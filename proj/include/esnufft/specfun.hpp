#pragma once

#include <vector>

namespace esnufft {

// I0(x), relative error ~1e-15 up to the overflow threshold (~713)
double bessel_i0(double x);
// e^{-|x|} I0(x), never overflows
double bessel_i0_scaled(double x);

// sin(x)/x with sinc(0) = 1
double sinc(double x);

template <class T>
struct basic_quadrature_rule {
    int order = 0;
    std::vector<T> nodes;    // increasing, in (-1,1)
    std::vector<T> weights;  // positive
};
using quadrature_rule = basic_quadrature_rule<double>;

// Gauss-Legendre rule on [-1,1]; computed once per order and cached.
// Returned references stay valid for the lifetime of the program.
const quadrature_rule& gauss_legendre(int order);

namespace detail {

// the two I0 branches, exposed so tests can compare them at the seam
template <class T> T i0_series(T x);
template <class T> T i0_asymptotic_scaled(T x);
template <class T> T i0_scaled(T x);
// switchover between series and asymptotic expansion
template <class T> constexpr T i0_seam();
template <> constexpr double i0_seam<double>() { return 15.0; }
template <> constexpr long double i0_seam<long double>() { return 30.0L; }

template <class T> const basic_quadrature_rule<T>& gauss_legendre_t(int order);

// P_n(x) and P_n'(x) by the three-term recurrence
template <class T> void legendre_p(int n, T x, T& p, T& dp);

}  // namespace detail
}  // namespace esnufft
