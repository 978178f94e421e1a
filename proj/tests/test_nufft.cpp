#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "ceas/nufft.hpp"
#include "test_helpers.hpp"

using namespace ceas;
using Catch::Approx;

namespace {

std::vector<cdouble> random_strengths(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<cdouble> c(n);
    for (auto& v : c) v = {unit(rng), unit(rng)};
    return c;
}

} // namespace

TEST_CASE("dft_direct basics") {
    NonuniformPoints src{{0.0}};
    NonuniformPoints tgt{{-3.0, 0.5, 7.0}};
    auto out = dft_direct(src, {cdouble{1.0, 0.0}}, tgt, -1);
    for (const cdouble& v : out) REQUIRE(std::abs(v - cdouble{1.0, 0.0}) < 1e-15);

    // work guard: 2^13 * 2^14 > 2^26
    NonuniformPoints big_src{std::vector<double>(1 << 13, 0.0)};
    NonuniformPoints big_tgt{std::vector<double>(1 << 14, 0.0)};
    REQUIRE_THROWS_AS(dft_direct(big_src, std::vector<cdouble>(1 << 13), big_tgt, -1),
                      resource_limit_error);
    REQUIRE_THROWS_AS(dft_direct(src, {cdouble{}, cdouble{}}, tgt, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(dft_direct(src, {cdouble{}}, tgt, 2), std::invalid_argument);
}

TEST_CASE("nufft3 trivial cases") {
    std::mt19937 rng(7);
    SECTION("single unit source at the origin") {
        NonuniformPoints src{{0.0}};
        std::uniform_real_distribution<double> f(-1e5, 1e5);
        NonuniformPoints tgt;
        for (int i = 0; i < 64; ++i) tgt.coords.push_back(f(rng));
        auto out = nufft3_forward(src, {cdouble{1.0, 0.0}}, tgt, {1e-9});
        for (const cdouble& v : out) REQUIRE(std::abs(v - cdouble{1.0, 0.0}) < 1e-9);
    }
    SECTION("zero strengths give zero output") {
        NonuniformPoints src, tgt;
        std::uniform_real_distribution<double> x(-1e-3, 1e-3), f(-1e5, 1e5);
        for (int i = 0; i < 300; ++i) src.coords.push_back(x(rng));
        for (int i = 0; i < 300; ++i) tgt.coords.push_back(f(rng));
        auto out = nufft3_forward(src, std::vector<cdouble>(300), tgt, {1e-6});
        for (const cdouble& v : out) REQUIRE(v == cdouble{});
    }
    SECTION("single zero-frequency bin, weight 1") {
        NonuniformPoints freqs{{0.0}};
        NonuniformPoints tgt{{-1e-4, 0.0, 5e-4}};
        auto out = nufft3_inverse(freqs, {cdouble{2.0, -3.0}}, tgt, 1.0, {1e-9});
        for (const cdouble& v : out) REQUIRE(std::abs(v - cdouble{2.0, -3.0}) < 1e-12);
    }
}

TEST_CASE("nufft3 matches dft_direct within the requested tolerance") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> x(-5.12e-4, 5.12e-4), f(-5e5, 5e5);
    for (double eps : {1e-4, 1e-6, 1e-9}) {
        for (int n : {64, 300, 1024}) {
            NonuniformPoints src, tgt;
            for (int i = 0; i < n; ++i) src.coords.push_back(x(rng));
            for (int i = 0; i < n; ++i) tgt.coords.push_back(f(rng));
            auto c = random_strengths(n, rng);
            auto fast = nufft3_forward(src, c, tgt, {eps});
            auto exact = dft_direct(src, c, tgt, -1);
            REQUIRE(ceas_test::rel_max_err(fast, exact) <= eps);

            auto fast_inv = nufft3_inverse(tgt, c, src, 1.0, {eps});
            auto exact_inv = dft_direct(tgt, c, src, +1);
            REQUIRE(ceas_test::rel_max_err(fast_inv, exact_inv) <= eps);
        }
    }
}

TEST_CASE("nufft3 on a uniform grid degenerates to the uniform DFT") {
    std::mt19937 rng(99);
    const int n = 512;
    GridSpec g = make_grid(n, 1, 1e-6);
    NonuniformPoints xs, fs;
    for (int i = 0; i < n; ++i) xs.coords.push_back(g.coord_x(i));
    const double df = 1.0 / (n * g.pitch);
    for (int m = 0; m < n; ++m) fs.coords.push_back((m - n / 2) * df);
    auto c = random_strengths(n, rng);
    auto fast = nufft3_forward(xs, c, fs, {1e-9});
    auto exact = dft_direct(xs, c, fs, -1);
    REQUIRE(ceas_test::rel_max_err(fast, exact) < 1e-8);

    // inverse of forward with the conjugate-grid quadrature weight
    auto back = nufft3_inverse(fs, fast, xs, df, {1e-9});
    for (int i = 0; i < n; ++i) {
        REQUIRE(std::abs(back[i] * g.pitch - c[i]) < 1e-8);
    }
}

TEST_CASE("nufft3 linearity") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> x(-1e-3, 1e-3), f(-2e5, 2e5);
    NonuniformPoints src, tgt;
    for (int i = 0; i < 400; ++i) src.coords.push_back(x(rng));
    for (int i = 0; i < 350; ++i) tgt.coords.push_back(f(rng));
    auto u = random_strengths(400, rng);
    auto v = random_strengths(400, rng);
    const cdouble a{1.5, -0.5}, b{0.25, 2.0};
    std::vector<cdouble> combo(400);
    for (int i = 0; i < 400; ++i) combo[i] = a * u[i] + b * v[i];
    Nufft3Plan plan(src, tgt, -1, {1e-9});
    auto fu = plan.execute(u);
    auto fv = plan.execute(v);
    auto fc = plan.execute(combo);
    double scale = 0.0;
    for (const auto& w : fc) scale = std::max(scale, std::abs(w));
    for (int i = 0; i < 350; ++i)
        REQUIRE(std::abs(fc[i] - (a * fu[i] + b * fv[i])) < 1e-12 * scale);
}

TEST_CASE("nufft3 refuses an oversized internal grid") {
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> x(-1.0, 1.0), f(-1e9, 1e9);
    NonuniformPoints src, tgt;
    for (int i = 0; i < 2000; ++i) src.coords.push_back(x(rng));
    for (int i = 0; i < 2000; ++i) tgt.coords.push_back(f(rng));
    REQUIRE_THROWS_AS(Nufft3Plan(src, tgt, -1, TransformAccuracy{1e-9}), resource_limit_error);
}

TEST_CASE("one plan executes safely from multiple threads") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> x(-1e-3, 1e-3), f(-2e5, 2e5);
    NonuniformPoints src, tgt;
    for (int i = 0; i < 500; ++i) src.coords.push_back(x(rng));
    for (int i = 0; i < 500; ++i) tgt.coords.push_back(f(rng));
    auto a = random_strengths(500, rng);
    auto b = random_strengths(500, rng);
    Nufft3Plan plan(src, tgt, -1, {1e-9});
    const auto want_a = plan.execute(a);
    const auto want_b = plan.execute(b);
    std::vector<cdouble> got_a, got_b;
    std::thread ta([&] {
        for (int i = 0; i < 20; ++i) got_a = plan.execute(a);
    });
    std::thread tb([&] {
        for (int i = 0; i < 20; ++i) got_b = plan.execute(b);
    });
    ta.join();
    tb.join();
    REQUIRE(got_a == want_a); // bit-identical: no shared scratch
    REQUIRE(got_b == want_b);
}

TEST_CASE("nufft3 validates inputs") {
    NonuniformPoints src{{0.0, 1.0}};
    NonuniformPoints tgt{{0.0}};
    REQUIRE_THROWS_AS(Nufft3Plan(src, tgt, 0, TransformAccuracy{1e-9}), std::invalid_argument);
    REQUIRE_THROWS_AS(Nufft3Plan(src, tgt, -1, TransformAccuracy{0.5}), std::invalid_argument);
    NonuniformPoints bad{{0.0, std::nan("")}};
    REQUIRE_THROWS_AS(Nufft3Plan(bad, tgt, -1, TransformAccuracy{1e-9}), std::invalid_argument);
    REQUIRE_THROWS_AS(nufft3_inverse(tgt, {cdouble{}}, src, std::vector<double>{1.0, 2.0}, {1e-9}),
                      std::invalid_argument);
}
