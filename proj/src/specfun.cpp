#include "esnufft/specfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "esnufft/error.hpp"

namespace esnufft {
namespace detail {

template <class T>
T i0_series(T x) {
    // sum (x^2/4)^k / (k!)^2, all terms positive
    const T q = x * x / 4;
    T term = 1, sum = 1;
    for (int k = 1; k < 500; ++k) {
        term *= q / (T(k) * T(k));
        sum += term;
        if (term <= sum * std::numeric_limits<T>::epsilon() * T(0.25)) break;
    }
    return sum;
}

template <class T>
T i0_asymptotic_scaled(T x) {
    // e^{-x} I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k), truncated at the smallest term
    T term = 1, sum = 1;
    for (int k = 1; k < 200; ++k) {
        const T next = term * T(2 * k - 1) * T(2 * k - 1) / (T(8 * k) * x);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (term <= sum * std::numeric_limits<T>::epsilon() * T(0.25)) break;
    }
    return sum / std::sqrt(2 * std::numbers::pi_v<T> * x);
}

template <class T>
T i0_scaled(T x) {
    x = std::abs(x);
    if (x <= i0_seam<T>()) return i0_series(x) * std::exp(-x);
    return i0_asymptotic_scaled(x);
}

template <class T>
void legendre_p(int n, T x, T& p, T& dp) {
    T p0 = 1, p1 = x;
    if (n == 0) {
        p = 1;
        dp = 0;
        return;
    }
    for (int k = 1; k < n; ++k) {
        const T p2 = (T(2 * k + 1) * x * p1 - T(k) * p0) / T(k + 1);
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    // derivative from P_n and P_{n-1}; valid away from x = +-1
    dp = T(n) * (x * p1 - p0) / (x * x - 1);
}

namespace {

template <class T>
std::unique_ptr<basic_quadrature_rule<T>> build_rule(int order) {
    auto r = std::make_unique<basic_quadrature_rule<T>>();
    r->order = order;
    r->nodes.assign(order, T(0));
    r->weights.assign(order, T(0));
    const T pi = std::numbers::pi_v<T>;
    const T tol = 4 * std::numeric_limits<T>::epsilon();
    const int half = order / 2;
    for (int i = 0; i < half; ++i) {
        // i-th largest root
        T x = std::cos(pi * (T(i) + T(0.75)) / (T(order) + T(0.5)));
        T p, dp;
        bool done = false;
        for (int it = 0; it < 100; ++it) {
            legendre_p(order, x, p, dp);
            const T dx = p / dp;
            x -= dx;
            if (std::abs(dx) <= tol) {
                done = true;
                break;
            }
        }
        if (!done) fail(errc::internal_error, "gauss_legendre: Newton iteration did not converge");
        legendre_p(order, x, p, dp);
        const T wgt = 2 / ((1 - x * x) * dp * dp);
        r->nodes[order - 1 - i] = x;
        r->nodes[i] = -x;
        r->weights[order - 1 - i] = wgt;
        r->weights[i] = wgt;
    }
    if (order % 2 == 1) {
        T p, dp;
        legendre_p(order, T(0), p, dp);
        r->nodes[half] = 0;
        r->weights[half] = 2 / (dp * dp);
    }
    return r;
}

template <class T>
struct rule_cache {
    std::mutex mu;
    std::map<int, std::unique_ptr<basic_quadrature_rule<T>>> rules;
};

template <class T>
rule_cache<T>& cache() {
    static rule_cache<T> c;
    return c;
}

}  // namespace

template <class T>
const basic_quadrature_rule<T>& gauss_legendre_t(int order) {
    if (order < 1) fail(errc::invalid_parameter, "gauss_legendre: order must be >= 1");
    auto& c = cache<T>();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.rules.find(order);
        if (it != c.rules.end()) return *it->second;
    }
    // build outside the lock; a racing builder just loses
    auto r = build_rule<T>(order);
    std::lock_guard<std::mutex> lock(c.mu);
    auto [it, inserted] = c.rules.emplace(order, std::move(r));
    return *it->second;
}

template double i0_series<double>(double);
template long double i0_series<long double>(long double);
template double i0_asymptotic_scaled<double>(double);
template long double i0_asymptotic_scaled<long double>(long double);
template double i0_scaled<double>(double);
template long double i0_scaled<long double>(long double);
template void legendre_p<double>(int, double, double&, double&);
template void legendre_p<long double>(int, long double, long double&, long double&);
template const basic_quadrature_rule<double>& gauss_legendre_t<double>(int);
template const basic_quadrature_rule<long double>& gauss_legendre_t<long double>(int);

}  // namespace detail

double bessel_i0_scaled(double x) { return detail::i0_scaled(x); }

double bessel_i0(double x) {
    x = std::abs(x);
    if (x <= detail::i0_seam<double>()) return detail::i0_series(x);
    // I0(x) < e^x, so overflow sets in a little past log(DBL_MAX)
    const double s = detail::i0_asymptotic_scaled(x);
    const double lg = x + std::log(s);
    if (lg >= std::log(std::numeric_limits<double>::max()))
        fail(errc::overflow, "bessel_i0: result overflows double");
    // split the exponential so e^x alone may exceed the range
    return std::exp(x / 2) * s * std::exp(x / 2);
}

double sinc(double x) {
    const double a = std::abs(x);
    if (a < 1e-3) {
        const double a2 = a * a;
        return 1.0 - a2 / 6.0 * (1.0 - a2 / 20.0 * (1.0 - a2 / 42.0));
    }
    return std::sin(a) / a;
}

const quadrature_rule& gauss_legendre(int order) { return detail::gauss_legendre_t<double>(order); }

}  // namespace esnufft
