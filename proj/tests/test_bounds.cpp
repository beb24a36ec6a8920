#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "cwc/bounds.hpp"
#include "cwc/errors.hpp"

using namespace cwc;
using Big = boost::multiprecision::cpp_dec_float_50;

namespace {

Big big_theta(std::uint64_t t, std::uint64_t N)
{
    return asin(sqrt(Big(t) / Big(N)));
}

double oracle_PL(std::uint64_t L, std::uint64_t t, std::uint64_t N)
{
    Big s = sin((2 * Big(L) + 1) * big_theta(t, N));
    return static_cast<double>(s * s);
}

double oracle_Pk(double k, std::uint64_t t, std::uint64_t N)
{
    Big th = big_theta(t, N);
    Big kk(k);
    return static_cast<double>(Big(0.5) - sin(4 * kk * th) / (4 * kk * sin(2 * th)));
}

// mean of P_L over L = 0..k-1, the definition P_k summarises
double mean_PL(std::uint64_t k, std::uint64_t t, std::uint64_t N)
{
    double s = 0;
    for (std::uint64_t L = 0; L < k; ++L) s += oracle_PL(L, t, N);
    return s / static_cast<double>(k);
}

} // namespace

TEST_CASE("success probability after L iterations")
{
    CHECK(success_prob_L(1, 1, 4) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(success_prob_L(836, 6, std::uint64_t{1} << 22) - oracle_PL(836, 6, std::uint64_t{1} << 22)) <
          1e-12);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t N = std::uint64_t{1} << (1 + rng() % 30);
        std::uint64_t t = rng() % (N + 1);
        std::uint64_t L = rng() % 5000;
        double p = success_prob_L(L, t, N);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(std::abs(p - oracle_PL(L, t, N)) < 1e-9);
    }
    CHECK_THROWS_AS(success_prob_L(0, 5, 4), ParameterError);
}

TEST_CASE("P_0 = t / N identity")
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t N = 1 + rng() % (std::uint64_t{1} << 20);
        std::uint64_t t = 1 + rng() % N;
        CHECK(std::abs(success_prob_L(0, t, N) - static_cast<double>(t) / static_cast<double>(N)) < 1e-12);
        CHECK(std::abs(success_prob_k(1.0, t, N) - static_cast<double>(t) / static_cast<double>(N)) < 1e-12);
    }
}

TEST_CASE("L_opt")
{
    CHECK(L_opt(6, std::uint64_t{1} << 22) == 656);
    CHECK(L_opt(1, 4) == 1);
    CHECK_THROWS_AS(L_opt(0, 16), NoSolutionError);
}

TEST_CASE("P_k closed form against high precision and the average of P_L")
{
    const std::uint64_t N = std::uint64_t{1} << 22;
    for (double k : {1.0, 1.5, 7.25, 100.0, 656.67, 2048.0})
        CHECK(std::abs(success_prob_k(k, 6, N) - oracle_Pk(k, 6, N)) < 1e-12);
    for (std::uint64_t k : {1u, 2u, 5u, 17u, 64u})
        CHECK(std::abs(success_prob_k(static_cast<double>(k), 3, 1024) - mean_PL(k, 3, 1024)) < 1e-12);
    CHECK(success_prob_k(3.0, 8, 8) == 1.0);
    CHECK_THROWS_AS(success_prob_k(0.5, 1, 8), ParameterError);
    CHECK_THROWS_AS(success_prob_k(2.0, 0, 8), NoSolutionError);
    // bounded in (0, 1] on k >= 1
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> kd(1.0, 5000.0);
    for (int i = 0; i < 2000; ++i) {
        double p = success_prob_k(kd(rng), 1 + rng() % 50, std::uint64_t{1} << 20);
        CHECK(p > 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("k_opt upper bound")
{
    CHECK(k_opt_upper(6, 22) == 1010);
    CHECK(k_opt_upper(1, 10) == 39);
    CHECK(k_opt_upper(1, 2) == 3);
    CHECK_THROWS_AS(k_opt_upper(0, 4), NoSolutionError);
}

TEST_CASE("solution-count lower bound")
{
    auto p = CodeParams::make(7, 3, 4, 7);
    auto a = known_A(6, 4, 3);
    REQUIRE(a.has_value());
    CHECK(*a == 4);
    CHECK(t_lower(p, *a) == 6);
    CHECK_THROWS_AS(t_lower(p, 6), InapplicableBoundError);
    CHECK_THROWS_AS(t_lower(CodeParams::make(9, 5, 4, 5), 1), InapplicableBoundError);
    // overlap 2: min over binomial(w, i), i = 2..w-d/2
    CHECK(t_lower(CodeParams::make(10, 4, 4, 20), 5) == 6);
}

TEST_CASE("k_opt minimises k / P_k on its interval")
{
    const std::uint64_t N = std::uint64_t{1} << 22;
    auto r = k_opt(6, 22);
    CHECK(r.lo == 1.0);
    CHECK(r.hi == 1010.0);
    CHECK(r.k_opt >= r.lo);
    CHECK(r.k_opt <= r.hi);
    CHECK_FALSE(r.ratio_not_small);
    CHECK(cost_ratio(r.k_opt, 6, N) <= cost_ratio(2048.0, 6, N));

    std::mt19937_64 rng(12);
    for (int q1 : {14, 17, 20}) {
        std::uint64_t t = std::max<std::uint64_t>(1, (std::uint64_t{1} << q1) / 10000);
        auto res = k_opt(t, q1);
        std::uniform_real_distribution<double> kd(res.lo, res.hi);
        double h = cost_ratio(res.k_opt, t, std::uint64_t{1} << q1);
        for (int i = 0; i < 1000; ++i)
            CHECK(h <= cost_ratio(kd(rng), t, std::uint64_t{1} << q1) * (1 + 1e-12));
    }
    CHECK(k_opt(600, 10).ratio_not_small);
}

TEST_CASE("the unconstrained argmin lies in the rotation-cap interval")
{
    for (int q1 = 10; q1 <= 30; ++q1)
        for (std::uint64_t t : {1u, 2u, 3u, 6u, 24u, 100u, 1000u}) {
            const std::uint64_t N = std::uint64_t{1} << q1;
            if (static_cast<double>(t) / static_cast<double>(N) > 1e-3) continue;
            const double upper = static_cast<double>(k_opt_upper(t, q1));
            auto wide = k_argmin(t, q1, 1.0, 8.0 * upper);
            CHECK(wide.k_opt >= 1.0);
            CHECK(wide.k_opt <= upper);
            auto inside = k_opt(t, q1);
            CHECK(std::abs(inside.k_opt - wide.k_opt) < 1e-6 * upper);
        }
}
