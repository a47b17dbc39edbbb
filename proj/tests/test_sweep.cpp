#include <cmath>

#include "esnufft/checks.hpp"
#include "esnufft/sweep.hpp"
#include "helpers.hpp"

using namespace esnufft;
using test_util::error_code_of;

TEST_SUITE("sweep") {

TEST_CASE("rng streams are fixed") {
    rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0);
        CHECK(u < 1);
    }
    std::mt19937_64 ref(42);
    rng c(42);
    CHECK(c.uniform() == static_cast<double>(ref() >> 11) * 0x1.0p-53);
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
    CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("norms and fits") {
    const std::vector<cplx> v{cplx(3, 4), cplx(-1, 0)};
    CHECK(l1_norm(v) == 6.0);
    CHECK(max_abs_diff(v, std::vector<cplx>{cplx(3, 4), cplx(1, 0)}) == 2.0);
    CHECK(std::abs(fit_slope({1, 2, 3, 4}, {3, 1, -1, -3}) + 2) < 1e-15);
}

TEST_CASE("error_sweep is reproducible and bounded") {
    sweep_options o;
    o.w_min = 4;
    o.w_max = 8;
    o.points = 200;
    o.modes = 64;
    o.trials = 3;
    const auto a = error_sweep(o);
    o.threads = 3;
    const auto b = error_sweep(o);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].w == static_cast<int>(4 + i));
        CHECK(a[i].emp_max_err_t1 == b[i].emp_max_err_t1);
        CHECK(a[i].emp_max_err_t2 == b[i].emp_max_err_t2);
        CHECK(a[i].emp_max_err_t1 <= a[i].eps_inf_est);
        CHECK(a[i].emp_max_err_t2 <= a[i].eps_inf_est);
        CHECK(a[i].theory_rate_bound > 0);
    }
    o.w_min = 9;
    o.w_max = 8;
    CHECK(error_code_of([&] { error_sweep(o); }) == errc::invalid_parameter);
}

TEST_CASE("check suites") {
    for (const char* s : {"sincs", "pswf"}) {
        const auto rows = run_checks(s);
        CHECK(!rows.empty());
        for (const auto& r : rows) {
            INFO(r.name << " measured " << r.measured);
            CHECK(r.pass);
        }
    }
    CHECK(error_code_of([] { run_checks("nope"); }) == errc::invalid_parameter);
}

}
