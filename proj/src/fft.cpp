#include "esnufft/fft.hpp"

#include <cmath>
#include <numbers>

#include "esnufft/error.hpp"
#include "esnufft/kernels.hpp"

namespace esnufft {

namespace {

cplx unit_root(long num, long den) {
    // e^{2 pi i num/den} with the angle reduced first
    num %= den;
    if (num < 0) num += den;
    const long double a = 2 * std::numbers::pi_v<long double> * num / den;
    return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

}  // namespace

fft_plan::fft_plan(int n) : n_(n) {
    if (n < 1 || !is_5smooth(n)) fail(errc::unsupported_size, "fft: size must be a positive 5-smooth integer");
    std::vector<int> radices;
    int m = n;
    while (m % 4 == 0) {
        radices.push_back(4);
        m /= 4;
    }
    while (m % 2 == 0) {
        radices.push_back(2);
        m /= 2;
    }
    while (m % 3 == 0) {
        radices.push_back(3);
        m /= 3;
    }
    while (m % 5 == 0) {
        radices.push_back(5);
        m /= 5;
    }
    int p = 1;
    for (int r : radices) {
        stage s;
        s.radix = r;
        s.p = p;
        s.tw.resize(static_cast<size_t>(r - 1) * p);
        for (int t = 1; t < r; ++t)
            for (int k = 0; k < p; ++k) s.tw[(t - 1) * p + k] = unit_root(static_cast<long>(t) * k, static_cast<long>(p) * r);
        stages_.push_back(std::move(s));
        p *= r;
    }
}

void fft_plan::run(std::span<cplx> data) const {
    if (static_cast<int>(data.size()) != n_) fail(errc::invalid_input, "fft: length does not match plan");
    if (stages_.empty()) return;
    std::vector<cplx> scratch(n_);
    cplx* x = data.data();
    cplx* y = scratch.data();
    const cplx w3 = unit_root(1, 3);
    const cplx w5a = unit_root(1, 5), w5b = unit_root(2, 5);
    for (const stage& st : stages_) {
        const int r = st.radix, p = st.p, q = n_ / (p * r);
        const long qp = static_cast<long>(q) * p;
        for (int j = 0; j < q; ++j) {
            const cplx* xin = x + static_cast<long>(j) * p;
            cplx* yout = y + static_cast<long>(j) * r * p;
            for (int k = 0; k < p; ++k) {
                cplx a[5];
                a[0] = xin[k];
                for (int t = 1; t < r; ++t) a[t] = xin[k + t * qp] * st.tw[(t - 1) * p + k];
                switch (r) {
                    case 2:
                        yout[k] = a[0] + a[1];
                        yout[k + p] = a[0] - a[1];
                        break;
                    case 4: {
                        const cplx s02 = a[0] + a[2], d02 = a[0] - a[2];
                        const cplx s13 = a[1] + a[3], d13 = a[1] - a[3];
                        const cplx id13{-d13.imag(), d13.real()};  // +i (a1 - a3)
                        yout[k] = s02 + s13;
                        yout[k + p] = d02 + id13;
                        yout[k + 2 * p] = s02 - s13;
                        yout[k + 3 * p] = d02 - id13;
                        break;
                    }
                    case 3: {
                        const cplx s = a[1] + a[2], d = a[1] - a[2];
                        const cplx m1 = a[0] + w3.real() * s;
                        const cplx m2{-w3.imag() * d.imag(), w3.imag() * d.real()};
                        yout[k] = a[0] + s;
                        yout[k + p] = m1 + m2;
                        yout[k + 2 * p] = m1 - m2;
                        break;
                    }
                    default: {  // 5
                        const cplx s1 = a[1] + a[4], d1 = a[1] - a[4];
                        const cplx s2 = a[2] + a[3], d2 = a[2] - a[3];
                        const cplx m1 = a[0] + w5a.real() * s1 + w5b.real() * s2;
                        const cplx m2 = a[0] + w5b.real() * s1 + w5a.real() * s2;
                        const cplx t1 = w5a.imag() * d1 + w5b.imag() * d2;
                        const cplx t2 = w5b.imag() * d1 - w5a.imag() * d2;
                        const cplx it1{-t1.imag(), t1.real()}, it2{-t2.imag(), t2.real()};
                        yout[k] = a[0] + s1 + s2;
                        yout[k + p] = m1 + it1;
                        yout[k + 4 * p] = m1 - it1;
                        yout[k + 2 * p] = m2 + it2;
                        yout[k + 3 * p] = m2 - it2;
                        break;
                    }
                }
            }
        }
        std::swap(x, y);
    }
    if (x != data.data()) std::copy(x, x + n_, data.data());
}

void fft_plan::forward(std::span<cplx> data) const { run(data); }

void fft_plan::inverse(std::span<cplx> data) const {
    for (auto& v : data) v = std::conj(v);
    run(data);
    const double s = 1.0 / n_;
    for (auto& v : data) v = std::conj(v) * s;
}

std::vector<cplx> dft_forward(std::span<const cplx> v) {
    fft_plan plan(static_cast<int>(v.size()));
    std::vector<cplx> out(v.begin(), v.end());
    plan.forward(out);
    return out;
}

std::vector<cplx> dft_inverse(std::span<const cplx> v) {
    fft_plan plan(static_cast<int>(v.size()));
    std::vector<cplx> out(v.begin(), v.end());
    plan.inverse(out);
    return out;
}

}  // namespace esnufft
