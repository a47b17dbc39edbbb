#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "csv.hpp"
#include "esnufft/esnufft.h"

namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("esnufft_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name) { return (work_dir() / name).string(); }

struct run_result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

run_result run(const std::string& args) {
    const std::string so = path("stdout.txt"), se = path("stderr.txt");
    const std::string cmd = std::string("\"") + ESNUFFT_CLI + "\" " + args + " >\"" + so + "\" 2>\"" + se + "\"";
    const int st = std::system(cmd.c_str());
    run_result r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.out = slurp(so);
    r.err = slurp(se);
    return r;
}

void write_file(const std::string& name, const std::string& text) {
    std::ofstream out(path(name));
    out << text;
}

void write_points(const std::string& name, const std::vector<double>& x) {
    std::ofstream out(path(name));
    out << "x\n";
    for (double v : x) out << esn_cli::format_number(v) << "\n";
}

void write_complex(const std::string& name, const std::vector<double>& v) {
    std::ofstream out(path(name));
    out << "re,im\n";
    for (size_t i = 0; i < v.size() / 2; ++i)
        out << esn_cli::format_number(v[2 * i]) << "," << esn_cli::format_number(v[2 * i + 1]) << "\n";
}

std::vector<double> uniform_vec(size_t n, double a, double b, unsigned seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> d(a, b);
    std::vector<double> v(n);
    for (auto& x : v) x = d(g);
    return v;
}

double field(const std::string& line, const std::string& key) {
    const auto pos = line.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(line.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("transform type1 single point") {
    write_points("p1.csv", {0.0});
    write_complex("c1.csv", {1.0, 0.0});
    const auto r = run("transform type1 --points " + path("p1.csv") + " --data " + path("c1.csv") +
                       " --modes 16 --width 10 --gamma 1 --out " + path("f1.csv"));
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("type1 N=16 M=1 n=", 0) == 0);
    CHECK(r.out.find("kernel=es") != std::string::npos);
    CHECK(std::abs(field(r.out, "beta") - 23.5619) < 1e-3);
    const double eps = field(r.out, "eps_inf_est");
    const auto f = esn_cli::read_complex(path("f1.csv"));
    REQUIRE(f.size() == 32);
    for (size_t k = 0; k < 16; ++k) CHECK(std::hypot(f[2 * k] - 1, f[2 * k + 1]) <= eps + 1e-14);
}

TEST_CASE("type1 then type2 matches the direct composition") {
    const size_t M = 40;
    const int N = 32;
    const auto x = uniform_vec(M, -std::numbers::pi, std::numbers::pi, 4);
    const auto c = uniform_vec(2 * M, -1, 1, 5);
    write_points("px.csv", x);
    write_complex("cx.csv", c);
    auto r = run("transform type1 --points " + path("px.csv") + " --data " + path("cx.csv") + " --modes " +
                 std::to_string(N) + " --tol 1e-10 --out " + path("fx.csv"));
    REQUIRE(r.code == 0);
    const double eps = field(r.out, "eps_inf_est");
    r = run("transform type2 --points " + path("px.csv") + " --data " + path("fx.csv") + " --tol 1e-10 --out " +
            path("cy.csv"));
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("type2 N=32 M=40", 0) == 0);
    const auto f = esn_cli::read_complex(path("fx.csv"));
    const auto cy = esn_cli::read_complex(path("cy.csv"));
    REQUIRE(cy.size() == 2 * M);

    std::vector<double> fd(2 * N), cd(2 * M);
    REQUIRE(esn_direct_type1(M, x.data(), c.data(), N, fd.data()) == ESN_OK);
    REQUIRE(esn_direct_type2(M, x.data(), N, fd.data(), cd.data()) == ESN_OK);
    double l1c = 0, l1f = 0, err = 0;
    for (size_t j = 0; j < M; ++j) l1c += std::hypot(c[2 * j], c[2 * j + 1]);
    for (int k = 0; k < N; ++k) l1f += std::hypot(f[2 * k], f[2 * k + 1]);
    for (size_t j = 0; j < M; ++j) err = std::max(err, std::hypot(cy[2 * j] - cd[2 * j], cy[2 * j + 1] - cd[2 * j + 1]));
    CHECK(err <= eps * l1f + N * eps * l1c);
}

TEST_CASE("kb kernel and threads") {
    write_points("p1.csv", {0.3});
    write_complex("c1.csv", {1.0, 0.0});
    const auto r = run("transform type1 --points " + path("p1.csv") + " --data " + path("c1.csv") +
                       " --modes 8 --kernel kb --threads 2 --out -");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("re,im") == 0);
    CHECK(r.out.find("kernel=kb") != std::string::npos);
}

TEST_CASE("transform input errors") {
    write_points("p2.csv", {0.1, 0.2});
    write_file("bad.csv", "re,im\n1,0\nzz,0\n");
    auto r = run("transform type1 --points " + path("p2.csv") + " --data " + path("bad.csv") + " --modes 8 --out " +
                 path("o.csv"));
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.csv:3") != std::string::npos);

    write_file("hdr.csv", "a,b\n1,0\n");
    r = run("transform type1 --points " + path("p2.csv") + " --data " + path("hdr.csv") + " --modes 8 --out " +
            path("o.csv"));
    CHECK(r.code == 2);

    write_complex("c1.csv", {1.0, 0.0});
    r = run("transform type1 --points " + path("p2.csv") + " --data " + path("c1.csv") + " --modes 8 --out " +
            path("o.csv"));
    CHECK(r.code == 2);

    write_complex("c2.csv", {1.0, 0.0, 0.5, 0.5});
    r = run("transform type1 --points " + path("p2.csv") + " --data " + path("c2.csv") + " --modes 7 --out " +
            path("o.csv"));
    CHECK(r.code == 1);
    r = run("transform type1 --points " + path("p2.csv") + " --data " + path("c2.csv") + " --out " + path("o.csv"));
    CHECK(r.code == 1);
    r = run("transform type1 --points " + path("p2.csv") + " --data " + path("c2.csv") +
            " --modes 8 --tol 1e-6 --width 5 --out " + path("o.csv"));
    CHECK(r.code == 1);
    r = run("transform type1 --points " + path("missing.csv") + " --data " + path("c2.csv") + " --modes 8 --out " +
            path("o.csv"));
    CHECK(r.code == 2);
    r = run("frobnicate");
    CHECK(r.code == 1);
}

TEST_CASE("kernel-table") {
    auto r = run("kernel-table --beta 30 --grid 100 --out " + path("kt.csv"));
    REQUIRE(r.code == 0);
    const auto t = esn_cli::read_numeric_csv(path("kt.csv"));
    REQUIRE(t.columns.size() == 7);
    CHECK(t.columns[0] == "z");
    CHECK(t.rows.size() == 101);
    const size_t mid = 50;
    CHECK(t.rows[mid][0].value() == 0.0);
    for (size_t c = 1; c < t.columns.size(); ++c) {
        if (t.columns[c] == "slep") {
            CHECK_FALSE(t.rows[mid][c].has_value());
        } else {
            INFO(t.columns[c]);
            CHECK(std::abs(t.rows[mid][c].value() - 1) < 1e-12);
        }
    }
    r = run("kernel-table --beta 30 --grid 40 --which es,kb --ratio-to pswf --out " + path("kr.csv"));
    REQUIRE(r.code == 0);
    const auto q = esn_cli::read_numeric_csv(path("kr.csv"), {"z", "es", "kb"});
    CHECK(q.rows.size() == 41);
    r = run("kernel-table --beta 30 --which nope");
    CHECK(r.code == 1);
}

TEST_CASE("ft-table") {
    const auto r = run("ft-table --beta 30 --xi-max 90 --samples 31 --out " + path("ft.csv"));
    REQUIRE(r.code == 0);
    const auto t = esn_cli::read_numeric_csv(path("ft.csv"));
    CHECK(t.columns.front() == "xi");
    CHECK(t.rows.size() == 31);
    CHECK(t.rows[0][0].value() == 0.0);
    CHECK(std::abs(t.rows.back()[0].value() - 90) < 1e-12);
    CHECK(std::abs(t.rows.back()[1].value() - 3) < 1e-12);
}

TEST_CASE("error-sweep and checks") {
    auto r = run("error-sweep --w-min 4 --w-max 6 --modes 32 --points 100 --trials 2 --out " + path("sw.csv"));
    REQUIRE(r.code == 0);
    const auto t = esn_cli::read_numeric_csv(
        path("sw.csv"), {"w", "beta", "eps_inf_est", "emp_max_err_t1", "emp_max_err_t2", "theory_rate_bound"});
    CHECK(t.rows.size() == 3);
    for (const auto& row : t.rows) CHECK(row[3].value() <= row[2].value());
    const auto again = run("error-sweep --w-min 4 --w-max 6 --modes 32 --points 100 --trials 2");
    CHECK(again.out == slurp(path("sw.csv")));

    r = run("checks --suite sincs --out " + path("ck.csv"));
    CHECK(r.code == 0);
    CHECK(slurp(path("ck.csv")).rfind("suite,check,measured,lower,upper,pass", 0) == 0);
    r = run("checks --suite nonsense");
    CHECK(r.code == 1);
}
