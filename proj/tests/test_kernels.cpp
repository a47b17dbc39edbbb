#include <cmath>
#include <numbers>

#include "esnufft/kernels.hpp"
#include "esnufft/pswf.hpp"
#include "esnufft/specfun.hpp"
#include "helpers.hpp"

using namespace esnufft;
using test_util::error_code_of;
using test_util::rel_err;

TEST_SUITE("kernels") {

TEST_CASE("beta_from") {
    CHECK(rel_err(beta_from(1, 10, 2), 7.5 * std::numbers::pi) < 1e-15);
    CHECK(beta_from(0.5, 9, 1.7) == 0.5 * beta_from(1, 9, 1.7));
    CHECK(rel_err(beta_from(0.98, 7, 1.25), 0.98 * std::numbers::pi * 7 * 0.6) < 1e-15);
    CHECK(error_code_of([] { beta_from(0, 10, 2); }) == errc::invalid_parameter);
    CHECK(error_code_of([] { beta_from(1.1, 10, 2); }) == errc::invalid_parameter);
    CHECK(error_code_of([] { beta_from(1, 1, 2); }) == errc::invalid_parameter);
    CHECK(error_code_of([] { beta_from(1, 10, 1.0); }) == errc::invalid_parameter);
}

TEST_CASE("smooth sizes and grid rule") {
    CHECK(is_5smooth(1));
    CHECK(is_5smooth(200));
    CHECK(is_5smooth(256));
    CHECK_FALSE(is_5smooth(14));
    CHECK(next_smooth_even(199) == 200);
    CHECK(next_smooth_even(201) == 216);
    CHECK(next_smooth_even(7) == 8);
    auto g = make_grid(100, 2.0, 8, 0.98);
    CHECK(g.n == 200);
    CHECK(g.sigma == 2.0);
    g = make_grid(128, 2.0, 10, 1);
    CHECK(g.n == 256);
    CHECK(rel_err(g.alpha, std::numbers::pi * 10 / 256) < 1e-15);
    CHECK(rel_err(g.h, 2 * std::numbers::pi / 256) < 1e-15);
    g = make_grid(8, 2.0, 10, 1);
    CHECK(g.n > 20);
    CHECK(g.n % 2 == 0);
    CHECK(is_5smooth(g.n));
    CHECK(g.sigma == g.n / 8.0);
    CHECK(error_code_of([] { make_grid(7, 2.0, 4, 1); }) == errc::invalid_parameter);
}

TEST_CASE("kernel_eval") {
    const double beta = 12.5;
    const auto es = make_kernel(kernel_family::es, beta);
    const auto kb = make_kernel(kernel_family::kb, beta);
    CHECK(kernel_eval(es, 0) == 1.0);
    CHECK(kernel_eval(kb, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_err(kernel_eval(es, 1), std::exp(-beta)) < 1e-15);
    CHECK(rel_err(kernel_eval(es, -1), std::exp(-beta)) < 1e-15);
    CHECK(rel_err(kernel_eval(kb, 1), 1 / bessel_i0(beta)) < 1e-14);
    CHECK(kernel_eval(es, 1.5) == 0.0);
    CHECK(kernel_eval(kb, -1.5) == 0.0);
    for (double z = 0; z <= 1; z += 0.01) {
        CHECK(kernel_eval(es, z) == kernel_eval(es, -z));
        const double ref = bessel_i0(beta * std::sqrt(1 - z * z)) / bessel_i0(beta);
        CHECK(rel_err(kernel_eval(kb, z), ref) < 1e-13);
    }
    CHECK(error_code_of([] { make_kernel(kernel_family::es, -1); }) == errc::invalid_parameter);
}

TEST_CASE("periodized_scaled_eval") {
    const auto g = make_grid(32, 2.0, 7, 0.98);
    const auto k = make_kernel(kernel_family::es, beta_from(g.gamma, g.w, g.sigma));
    CHECK(periodized_scaled_eval(k, g, 0) == 1.0);
    CHECK(std::abs(periodized_scaled_eval(k, g, 2 * std::numbers::pi) - 1.0) < 1e-12);
    CHECK(periodized_scaled_eval(k, g, std::numbers::pi) == 0.0);
    for (double x = -3; x <= 3; x += 0.0137) {
        const double direct = kernel_eval(k, x / g.alpha);
        CHECK(std::abs(periodized_scaled_eval(k, g, x) - direct) <= 1e-12);
        CHECK(std::abs(periodized_scaled_eval(k, g, x + 2 * std::numbers::pi) - periodized_scaled_eval(k, g, x)) <= 1e-12);
    }
}

TEST_CASE("kb_asymptotic_eval") {
    CHECK(kb_asymptotic_eval(30, 0) == 1.0);
    const auto kb = make_kernel(kernel_family::kb, 30);
    CHECK(std::abs(kb_asymptotic_eval(30, 0.5) / kernel_eval(kb, 0.5) - 1) < 0.02);
    const double beta = 30, z1 = 0.99, z2 = 0.999;
    const double pref = std::pow((1 - z1 * z1) / (1 - z2 * z2), 0.25);
    const double expo = std::exp(beta * (std::sqrt(1 - z2 * z2) - std::sqrt(1 - z1 * z1)));
    CHECK(std::abs(kb_asymptotic_eval(beta, z2) / kb_asymptotic_eval(beta, z1) / (pref * expo) - 1) < 0.1);
    CHECK(error_code_of([] { kb_asymptotic_eval(30, 1.0); }) == errc::domain_error);
}

TEST_CASE("slepian_asymptotic_eval") {
    const double beta = 30;
    const double seam = 1 - 1 / beta;
    const double s = std::sqrt(1 - seam * seam);
    const double outer = slepian_outer_constant(beta) * std::exp(beta * s) / (std::pow(1 - seam * seam, 0.25) * std::sqrt(1 + s));
    const double inner = slepian_inner_constant(beta) * bessel_i0(beta * s);
    CHECK(std::abs(inner / outer - 1) <= 0.05);
    for (double b : {20.0, 40.0, 60.0}) {
        const double zs = 1 - 1 / b;
        const double below = slepian_asymptotic_eval(b, std::nextafter(zs, 0.0));
        const double above = slepian_asymptotic_eval(b, std::nextafter(zs, 1.0));
        CHECK(std::abs(above / below - 1) <= 0.05);
    }
    CHECK(slepian_asymptotic_eval(beta, 1.0) == doctest::Approx(slepian_inner_constant(beta)).epsilon(1e-14));
    CHECK(error_code_of([] { slepian_asymptotic_eval(30, 0.1); }) == errc::domain_error);
    CHECK(error_code_of([] { slepian_asymptotic_eval(30, 1.1); }) == errc::domain_error);

    const auto r = pswf_solve(beta);
    const double z = 0.5;
    const double ratio = slepian_asymptotic_eval(beta, z) / pswf_eval_normalized(r, z);
    CHECK(std::abs(ratio - 1) < 0.05);
}

TEST_CASE("sleph_eval") {
    for (double beta : {5.0, 30.0}) {
        CHECK(std::abs(sleph_eval(beta, 0) - 1) < 1e-15);
        CHECK(rel_err(sleph_eval(beta, 1), std::sqrt(2.0) / bessel_i0(beta)) < 1e-13);
        CHECK(rel_err(sleph_eval(beta, -1), std::sqrt(2.0) / bessel_i0(beta)) < 1e-13);
    }
    const auto r = pswf_solve(30);
    double worst = 0;
    for (int i = 0; i <= 1000; ++i) {
        const double z = i / 1000.0;
        worst = std::max(worst, std::abs(sleph_eval(30, z) / pswf_eval_normalized(r, z) - 1));
    }
    CHECK(worst < 0.2 / 30);
}

}
