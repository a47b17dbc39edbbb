#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "esnufft/error.hpp"

namespace test_util {

inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

template <class F>
esnufft::errc error_code_of(F&& f) {
    try {
        f();
    } catch (const esnufft::error& e) {
        return e.code();
    }
    return static_cast<esnufft::errc>(0);
}

// O(n^2) DFT in long double, sign +
inline std::vector<std::complex<double>> slow_dft(const std::vector<std::complex<double>>& v, int sign = +1) {
    const size_t n = v.size();
    const long double tp = 2 * 3.141592653589793238462643383279502884L;
    std::vector<std::complex<double>> out(n);
    for (size_t k = 0; k < n; ++k) {
        long double re = 0, im = 0;
        for (size_t l = 0; l < n; ++l) {
            const long double a = sign * tp * static_cast<long double>((l * k) % n) / n;
            const long double c = std::cos(a), s = std::sin(a);
            re += v[l].real() * c - v[l].imag() * s;
            im += v[l].real() * s + v[l].imag() * c;
        }
        out[k] = {static_cast<double>(re), static_cast<double>(im)};
    }
    return out;
}

inline double max_abs(const std::vector<std::complex<double>>& v) {
    double m = 0;
    for (auto z : v) m = std::max(m, std::abs(z));
    return m;
}

inline double max_diff(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline std::complex<double> dot(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    std::complex<long double> s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += std::complex<long double>(a[i].real(), a[i].imag()) * std::conj(std::complex<long double>(b[i].real(), b[i].imag()));
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

}  // namespace test_util
