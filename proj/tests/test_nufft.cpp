#include <cmath>
#include <numbers>

#include "esnufft/aliasing.hpp"
#include "esnufft/nufft.hpp"
#include "esnufft/sweep.hpp"
#include "helpers.hpp"

using namespace esnufft;
using test_util::error_code_of;

namespace {

plan width_plan(int N, int w, double sigma = 2.0, double gamma = 0.98, kernel_family fam = kernel_family::es) {
    plan_request r;
    r.N = N;
    r.width = w;
    r.sigma = sigma;
    r.gamma = gamma;
    r.kernel = fam;
    return make_plan(r);
}

std::vector<cplx> dense_spread(const plan& pl, const nu_points& pts, const std::vector<cplx>& c) {
    const int n = pl.grid.n;
    std::vector<cplx> b(n);
    for (int l = 0; l < n; ++l)
        for (size_t j = 0; j < pts.size(); ++j)
            b[l] += c[j] * periodized_scaled_eval(pl.kernel, pl.grid, 2 * std::numbers::pi * l / n - pts.x()[j]);
    return b;
}

}  // namespace

TEST_SUITE("nufft") {

TEST_CASE("points fold into one period") {
    CHECK(fold_to_period(0.5) == 0.5);
    CHECK(std::abs(fold_to_period(0.5 + 2 * std::numbers::pi) - 0.5) < 1e-15);
    CHECK(fold_to_period(std::numbers::pi) == -std::numbers::pi);
    const std::vector<double> xs{-100.0, -3.2, 3.2, 7.0, 1e6};
    nu_points p(xs);
    for (double x : p.x()) {
        CHECK(x >= -std::numbers::pi);
        CHECK(x < std::numbers::pi);
    }
    const std::vector<double> bad{0.0, std::nan("")};
    CHECK(error_code_of([&] { nu_points q(bad); }) == errc::invalid_input);
}

TEST_CASE("make_plan examples") {
    plan_request r;
    r.N = 128;
    r.width = 10;
    r.gamma = 1;
    auto pl = make_plan(r);
    CHECK(std::abs(pl.kernel.beta - 7.5 * std::numbers::pi) < 1e-13);
    CHECK(pl.grid.n == 256);
    CHECK(width_plan(100, 8).grid.n == 200);
    CHECK(width_for_tol(1e-9, 2.0, 0.98) == 11);
    r = plan_request{};
    r.N = 64;
    r.tol = 1e-9;
    CHECK(make_plan(r).grid.w == 11);
    CHECK_FALSE(make_plan(r).width_clamped);
    r.tol = 1e-14;
    r.sigma = 1.25;
    pl = make_plan(r);
    CHECK(pl.grid.w == 16);
    CHECK(pl.width_clamped);
    for (int k = -32; k < 32; ++k) {
        CHECK(pl.p_at(k) > 0);
        if (k > -32) CHECK(pl.p_at(k) == pl.p_at(-k));
        CHECK(std::abs(pl.p_at(k) * psi_hat(pl, k) / pl.grid.h - 1) < 1e-13);
    }
    r = plan_request{};
    r.N = 64;
    CHECK(error_code_of([&] { make_plan(r); }) == errc::invalid_parameter);
    r.tol = 0.5;
    CHECK(error_code_of([&] { make_plan(r); }) == errc::invalid_parameter);
    r.tol = 1e-6;
    r.N = 63;
    CHECK(error_code_of([&] { make_plan(r); }) == errc::invalid_parameter);
    r.N = 64;
    r.sigma = 1.0;
    CHECK(error_code_of([&] { make_plan(r); }) == errc::invalid_parameter);
}

TEST_CASE("spread single point and dense oracle") {
    const auto pl = width_plan(12, 5);
    const int n = pl.grid.n;
    const std::vector<double> x0{0.0};
    const std::vector<cplx> one{1.0};
    const auto b = spread(pl, nu_points(x0), one);
    int nonzero = 0;
    for (int l = 0; l < n; ++l) {
        const double ref = periodized_scaled_eval(pl.kernel, pl.grid, 2 * std::numbers::pi * l / n);
        CHECK(std::abs(b[l].real() - ref) <= 4e-15);
        CHECK(b[l].imag() == 0.0);
        if (b[l] != 0.0) {
            ++nonzero;
            const int d = std::min(l, n - l);
            CHECK(d <= 2);
        }
    }
    CHECK(nonzero == 5);

    rng g(77);
    const auto xs = random_points(g, 7);
    const auto c = random_strengths(g, 7);
    nu_points pts(xs);
    REQUIRE(n == 24);
    const auto ref = dense_spread(pl, pts, c);
    CHECK(test_util::max_diff(spread(pl, pts, c), ref) <= 1e-13 * test_util::max_abs(ref));

    const auto c2 = random_strengths(g, 7);
    std::vector<cplx> sum(7);
    for (int j = 0; j < 7; ++j) sum[j] = c[j] + c2[j];
    const auto s1 = spread(pl, pts, c), s2 = spread(pl, pts, c2), s12 = spread(pl, pts, sum);
    for (int l = 0; l < n; ++l) CHECK(std::abs(s12[l] - s1[l] - s2[l]) <= 1e-15);
    const std::vector<cplx> short_c(6);
    CHECK(error_code_of([&] { spread(pl, pts, short_c); }) == errc::invalid_input);
}

TEST_CASE("spread touches w points with odd and even widths") {
    for (int w : {2, 3, 4, 7, 8, 13, 16}) {
        const auto pl = width_plan(32, w);
        rng g(w);
        for (int t = 0; t < 20; ++t) {
            const std::vector<double> x{g.uniform(-4, 4)};
            const std::vector<cplx> one{1.0};
            const auto b = spread(pl, nu_points(x), one);
            int nz = 0;
            for (auto z : b) nz += z != 0.0;
            CHECK(nz <= w + 1);
            CHECK(nz >= w - 1);
        }
    }
}

TEST_CASE("interp is the adjoint of spread") {
    const auto pl = width_plan(12, 5);
    rng g(9);
    const auto xs = random_points(g, 7);
    nu_points pts(xs);
    const auto c = random_strengths(g, 7);
    const auto b = random_strengths(g, pl.grid.n);
    const cplx lhs = test_util::dot(spread(pl, pts, c), b);
    const cplx rhs = test_util::dot(c, interp(pl, pts, b));
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));

    const int l0 = 5;
    std::vector<cplx> delta(pl.grid.n);
    delta[l0] = 1;
    const auto out = interp(pl, pts, delta);
    for (int j = 0; j < 7; ++j) {
        const double ref = periodized_scaled_eval(pl.kernel, pl.grid, 2 * std::numbers::pi * l0 / pl.grid.n - pts.x()[j]);
        CHECK(std::abs(out[j] - cplx(ref)) <= 1e-15);
    }
    for (auto z : interp(pl, pts, std::vector<cplx>(pl.grid.n))) CHECK(z == 0.0);
}

TEST_CASE("type1 single point at the origin") {
    for (int w : {5, 7, 11}) {
        const auto pl = width_plan(16, w);
        const double eps = eps_inf_estimate(pl).eps_inf_est;
        const std::vector<double> x{0.0};
        const std::vector<cplx> one{1.0};
        const auto f = type1(pl, nu_points(x), one);
        REQUIRE(f.size() == 16);
        // x = 0 is one of the sampled positions, so the pipeline can reach eps up to rounding at the band edge
        for (auto z : f) CHECK(std::abs(z - cplx(1)) <= eps + 1e-14);
    }
}

TEST_CASE("type1 and type2 against the direct sums") {
    plan_request r;
    r.N = 64;
    r.tol = 1e-9;
    const auto pl = make_plan(r);
    const double eps = eps_inf_estimate(pl).eps_inf_est;
    rng g(2024);
    const auto xs = random_points(g, 50);
    nu_points pts(xs);
    const auto c = random_strengths(g, 50);
    const auto f = random_strengths(g, 64);
    CHECK(max_abs_diff(type1(pl, pts, c), direct_type1(pts, c, 64)) <= eps * l1_norm(c));
    CHECK(max_abs_diff(type2(pl, pts, f), direct_type2(pts, f)) <= eps * l1_norm(f));

    const cplx lhs = test_util::dot(type1(pl, pts, c), f);
    const cplx rhs = test_util::dot(c, type2(pl, pts, f));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));

    const int k0 = 7;
    std::vector<cplx> d(64);
    d[k0 + 32] = 1;
    const auto cd = type2(pl, pts, d);
    for (int j = 0; j < 50; ++j) CHECK(std::abs(cd[j] - std::exp(cplx(0, -k0 * xs[j]))) <= eps);

    const cplx s(0, 2);
    std::vector<cplx> cs(c);
    for (auto& z : cs) z *= s;
    const auto a = type1(pl, pts, c), b = type1(pl, pts, cs);
    for (int k = 0; k < 64; ++k) CHECK(b[k] == s * a[k]);
}

TEST_CASE("pipeline is deterministic and thread-count independent") {
    plan_request r;
    r.N = 256;
    r.tol = 1e-10;
    const auto pl1 = make_plan(r);
    r.threads = 4;
    const auto pl4 = make_plan(r);
    rng g(3);
    const auto xs = random_points(g, 40000);
    nu_points pts(xs);
    const auto c = random_strengths(g, 40000);
    const auto a = type1(pl1, pts, c), b = type1(pl1, pts, c), m = type1(pl4, pts, c);
    CHECK(max_abs_diff(a, b) == 0.0);
    CHECK(max_abs_diff(a, m) <= 1e-12 * test_util::max_abs(a));
}

TEST_CASE("KB pipeline") {
    const auto pl = width_plan(32, 8, 2.0, 1.0, kernel_family::kb);
    rng g(6);
    const auto xs = random_points(g, 100);
    nu_points pts(xs);
    const auto c = random_strengths(g, 100);
    const double err = max_abs_diff(type1(pl, pts, c), direct_type1(pts, c, 32)) / l1_norm(c);
    CHECK(err <= kb_error_bound(8, pl.grid.sigma));
    CHECK(err <= eps_inf_estimate(pl).eps_inf_est);
}

TEST_CASE("direct sums") {
    const std::vector<double> x0{0.0};
    const std::vector<cplx> one{1.0};
    for (auto z : direct_type1(nu_points(x0), one, 10)) CHECK(z == cplx(1));

    const std::vector<double> x2{0.0, std::numbers::pi / 2};
    const std::vector<cplx> c2{1.0, cplx(0, 1)};
    const auto f = direct_type1(nu_points(x2), c2, 4);
    CHECK(std::abs(f[0] - cplx(1, -1)) <= 1e-15);
    CHECK(std::abs(f[1] - cplx(2, 0)) <= 1e-15);
    CHECK(std::abs(f[2] - cplx(1, 1)) <= 1e-15);
    CHECK(std::abs(f[3] - cplx(0, 0)) <= 1e-15);

    rng g(11);
    std::vector<double> xs;
    std::vector<cplx> cr;
    for (int j = 0; j < 20; ++j) {
        const double x = g.uniform(0, 3);
        const double v = g.uniform(-1, 1);
        xs.push_back(x);
        xs.push_back(-x);
        cr.push_back(v);
        cr.push_back(v);
    }
    const auto fs = direct_type1(nu_points(xs), cr, 16);
    for (int k = 1; k < 8; ++k) CHECK(std::abs(fs[8 - k] - std::conj(fs[8 + k])) <= 1e-13);

    const auto ys = random_points(g, 30);
    nu_points pts(ys);
    const auto c = random_strengths(g, 30);
    const auto ff = random_strengths(g, 24);
    const cplx lhs = test_util::dot(direct_type1(pts, c, 24), ff);
    const cplx rhs = test_util::dot(c, direct_type2(pts, ff));
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));

    std::vector<cplx> ones(24, 1.0);
    const std::vector<double> z0{0.0, 1.0};
    const auto cz = direct_type2(nu_points(z0), ones);
    CHECK(std::abs(cz[0] - cplx(24)) <= 1e-13);
    // sum_{k=-12}^{11} e^{-ik} in closed form
    const cplx dir = std::exp(cplx(0, 12.0)) * (1.0 - std::exp(cplx(0, -24.0))) / (1.0 - std::exp(cplx(0, -1.0)));
    CHECK(std::abs(cz[1] - dir) <= 1e-12);

    // translation covariance
    const double sft = 0.37;
    std::vector<double> shifted(ys);
    for (auto& y : shifted) y += sft;
    const auto a = direct_type1(pts, c, 24), b = direct_type1(nu_points(shifted), c, 24);
    for (int k = -12; k < 12; ++k) CHECK(std::abs(b[k + 12] - a[k + 12] * std::exp(cplx(0, k * sft))) <= 1e-13);

    const std::vector<int> modes{-12, 0, 5, 11};
    const auto sel = direct_type1_modes(pts, c, modes);
    for (size_t i = 0; i < modes.size(); ++i) CHECK(sel[i] == a[modes[i] + 12]);
}

TEST_CASE("direct sums stay accurate for many points") {
    rng g(12);
    const size_t M = 20000;
    std::vector<double> xs(M);
    std::vector<cplx> c(M);
    for (size_t j = 0; j < M; ++j) {
        xs[j] = -3.0 + 6.0 * j / M;
        c[j] = 1.0;
    }
    nu_points pts(xs);
    const auto f = direct_type1(pts, c, 8);
    for (int k = -4; k < 4; ++k) {
        long double re = 0, im = 0;
        for (size_t j = 0; j < M; ++j) {
            re += std::cos(static_cast<long double>(k) * pts.x()[j]);
            im += std::sin(static_cast<long double>(k) * pts.x()[j]);
        }
        CHECK(std::abs(f[k + 4] - cplx(static_cast<double>(re), static_cast<double>(im))) <= 1e-13 * M);
    }
}

}
