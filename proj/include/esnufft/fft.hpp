#pragma once

#include <complex>
#include <span>
#include <vector>

namespace esnufft {

using cplx = std::complex<double>;

// Mixed-radix (2,3,4,5) Stockham transform for 5-smooth sizes.
// forward: F_k = sum_l v_l e^{+2 pi i l k / n}; inverse carries the 1/n.
class fft_plan {
public:
    explicit fft_plan(int n);
    int size() const { return n_; }
    void forward(std::span<cplx> data) const;
    void inverse(std::span<cplx> data) const;

private:
    struct stage {
        int radix;
        int p;                  // product of earlier radices
        std::vector<cplx> tw;   // tw[(t-1)*p + k] = w_{p r}^{t k}
    };
    int n_;
    std::vector<stage> stages_;
    void run(std::span<cplx> data) const;
};

std::vector<cplx> dft_forward(std::span<const cplx> v);
std::vector<cplx> dft_inverse(std::span<const cplx> v);

}  // namespace esnufft
