#include "doctest.h"

#include <cmath>
#include <random>

#include "expweight/complexity.hpp"
#include "expweight/experiments.hpp"
#include "oracles.hpp"

using namespace expweight;

namespace {

SpaceConfig lists(double omega, std::vector<double> a, std::vector<double> b,
                  MultiplicitySpec m = MultiplicitySpec::ones())
{
    const auto s = a.size();
    return {omega, WeightFamily::explicit_lists(std::move(a), std::move(b)), std::move(m), s};
}

BigCount both(const SpaceConfig& c, double x)
{
    const BigCount r = info_complexity(c, Budget{x}, CountMethod::recursion);
    const BigCount f = info_complexity(c, Budget{x}, CountMethod::brute_force);
    REQUIRE(r == f);
    return r;
}

oracle::ExactInstance random_exact(std::mt19937_64& rng, std::size_t max_s)
{
    oracle::ExactInstance in;
    const std::size_t s = 1 + rng() % max_s;
    int prev = 20 + rng() % 80;
    for (std::size_t j = 0; j < s; ++j) {
        prev += rng() % 120;
        in.a.push_back(std::to_string(prev / 100) + "." + std::to_string(prev % 100 / 10) +
                       std::to_string(prev % 10));
        in.b.push_back(1 + rng() % 3);
    }
    in.prefix.resize(rng() % 5);
    for (auto& m : in.prefix)
        m = 1 + rng() % 3;
    in.tail = 1 + rng() % 3;
    in.omega = 0.1 + 0.8 * (rng() % 997) / 997.0;
    return in;
}

} // namespace

TEST_CASE("budget_from_eps examples and round trip")
{
    CHECK(budget_from_eps(0.5, 0.0).x == 0.0);
    CHECK(budget_from_eps(0.5, std::log10(0.5)).x == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(budget_from_eps(0.5, -1.75 * std::log10(2.0)).x == doctest::Approx(3.5).epsilon(1e-14));
    CHECK_THROWS_AS(budget_from_eps(0.5, 0.1), ParameterError);
    CHECK_THROWS_AS(budget_from_eps(1.5, -1), ParameterError);
    for (double omega : {0.1, 0.37, 0.5, 0.9})
        for (double l : {-1e-3, -0.7, -12.0, -3000.0}) {
            const double back = eps_log10_from_budget(omega, budget_from_eps(omega, l));
            CHECK(back == doctest::Approx(l).epsilon(1e-12));
        }
    // eps far below the double range stays representable
    CHECK(budget_from_eps(0.5, -1e5).x == doctest::Approx(2e5 * std::log2(10.0)).epsilon(1e-12));
}

TEST_CASE("j_eps examples")
{
    const auto linear = WeightFamily::family({1, 1, 0, 1, 0});
    CHECK(j_eps(linear, Budget{3.5}).j == 3);
    CHECK_FALSE(j_eps(linear, Budget{3.5}).infinite);
    CHECK(j_eps(linear, Budget{3.0}).j == 2);
    CHECK(j_eps(WeightFamily::family({1, 0, 0, 1, 0}), Budget{2}).infinite);
    CHECK(j_eps(WeightFamily::family({1, 2, 1, 1, 0}), Budget{0}).j == 0);
    CHECK(j_eps(WeightFamily::family({1, 0, 0, 1, 0}), Budget{1}).j == 0);
    CHECK(j_eps(WeightFamily::explicit_lists({1, 2, 5}, {1, 1, 1}), Budget{4}).j == 2);

    DeclaredLimits lim;
    lim.lim_a = 2.0;
    CHECK(j_eps(WeightFamily::explicit_lists({1, 1.5}, {1, 1}, lim), Budget{3}).infinite);
    CHECK_THROWS_AS(j_eps(WeightFamily::explicit_lists({1, 1.5}, {1, 1}), Budget{3}), ParameterError);
    // large index: a_j = j^2, x = 1e12 + 1 gives j = 1e6
    CHECK(j_eps(WeightFamily::family({1, 2, 0, 1, 0}), Budget{1e12 + 1}).j == 1000000);
}

TEST_CASE("info_complexity examples")
{
    CHECK(both(lists(0.5, {2, 3, 3}, {1, 1, 2}, MultiplicitySpec({2}, 1)), 1.5) == 8);
    CHECK(both(lists(0.5, {1, 1}, {1, 1}), 3.5) == 10);
    CHECK(both(lists(0.5, {1}, {1}, MultiplicitySpec::korobov()), 2.5) == 5);
    CHECK(both(lists(0.5, {1}, {2}), 2.5) == 2);
    CHECK(both(lists(0.5, {1, 1}, {1, 1}), 0.0) == 0);

    // oracle freezes the same values
    oracle::ExactInstance in;
    in.a = {"1", "1"};
    in.b = {1, 1};
    CHECK(oracle::count(in, "3.5") == 10);
    in.a = {"1"};
    in.b = {1};
    in.prefix = {1};
    in.tail = 2;
    CHECK(oracle::count(in, "2.5") == 5);
}

TEST_CASE("strict boundary: sums equal to x are excluded")
{
    // 0.1 + 0.2 == 0.3 exactly in decimal but not in binary
    const auto c = lists(0.5, {0.1, 0.2}, {1, 1});
    oracle::ExactInstance in;
    in.a = {"0.1", "0.2"};
    in.b = {1, 1};
    for (const char* x : {"0.3", "0.6", "1.5", "2.7", "3"})
        CHECK(both(c, std::stod(x)) == oracle::count(in, x));
}

TEST_CASE("property: recursion and brute force agree with the rational oracle")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        auto in = random_exact(rng, 4);
        const auto c = in.config();
        // budgets on and off exponent sums
        std::vector<std::string> xs = {std::to_string(rng() % 12) + "." + std::to_string(rng() % 10)};
        oracle::Rational on = 0;
        for (std::size_t j = 0; j < in.s(); ++j)
            on += in.cost(j, rng() % 3);
        // decimal form of the rational (denominator divides 1000)
        const oracle::Rational thousandths = on * 1000;
        std::string digits = (numerator(thousandths) / denominator(thousandths)).str();
        while (digits.size() < 4)
            digits = "0" + digits;
        xs.push_back(digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3));
        for (const auto& x : xs) {
            if (std::stod(x) > 14)
                continue;
            CAPTURE(x);
            CHECK(both(c, std::stod(x)) == oracle::count(in, x));
        }
    }
}

TEST_CASE("property: monotone in x and in each a_j")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = random_instance(rng, 3, 15);
        BigCount prev = 0;
        for (double x = 0; x <= inst.x; x += inst.x / 17 + 0.01) {
            const auto n = info_complexity(inst.config, Budget{x}, CountMethod::recursion);
            CHECK(n >= prev);
            prev = n;
        }
        // raise a single a_j of an explicit copy
        const auto& cfg = inst.config;
        std::vector<double> a, b;
        for (std::size_t j = 1; j <= cfg.s; ++j) {
            a.push_back(cfg.weights.a(j));
            b.push_back(cfg.weights.b(j));
        }
        const std::size_t j = rng() % cfg.s;
        auto raised = a;
        raised[j] *= 1.3;
        for (std::size_t i = j + 1; i < raised.size(); ++i)
            raised[i] = std::max(raised[i], raised[i - 1]);
        const SpaceConfig base(cfg.omega, WeightFamily::explicit_lists(a, b), cfg.mult, cfg.s);
        const SpaceConfig up(cfg.omega, WeightFamily::explicit_lists(raised, b), cfg.mult, cfg.s);
        CHECK(info_complexity(up, Budget{inst.x}, CountMethod::recursion) <=
              info_complexity(base, Budget{inst.x}, CountMethod::recursion));
    }
}

TEST_CASE("property: special identities")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = random_instance(rng, 4, 20);
        const auto& cfg = inst.config;
        const auto m0 = cfg.mult.m0();
        // x <= a_1
        const double small = cfg.weights.a(1) * (rng() % 2 ? 1.0 : 0.6);
        CHECK(info_complexity(cfg, Budget{small}, CountMethod::recursion) ==
              boost::multiprecision::pow(BigCount(m0), static_cast<unsigned>(cfg.s)));
        // x <= a_s peels off one factor m_0
        if (cfg.s >= 2) {
            const double x = cfg.weights.a(cfg.s) * 0.9;
            const SpaceConfig lower(cfg.omega, cfg.weights, cfg.mult, cfg.s - 1);
            CHECK(info_complexity(cfg, Budget{x}, CountMethod::recursion) ==
                  m0 * info_complexity(lower, Budget{x}, CountMethod::recursion));
        }
    }
}

TEST_CASE("property: stabilization n(x,s) = m_0^(s-j) n(x,j)")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        FamilyParams p{0.5 + (rng() % 10) / 10.0, 1.0 + rng() % 2, 0, 1.0 + rng() % 2, 0};
        const auto w = WeightFamily::family(p);
        const MultiplicitySpec m({1 + rng() % 3}, 1 + rng() % 2);
        const double x = 1 + (rng() % 60) / 10.0;
        const auto J = j_eps(w, Budget{x});
        REQUIRE_FALSE(J.infinite);
        if (J.j == 0)
            continue;
        const SpaceConfig base(0.5, w, m, J.j);
        const BigCount nJ = info_complexity(base, Budget{x}, CountMethod::recursion);
        for (std::size_t s = J.j; s <= J.j + 10; ++s) {
            const SpaceConfig cs(0.5, w, m, s);
            CHECK(info_complexity(cs, Budget{x}, CountMethod::recursion) ==
                  boost::multiprecision::pow(BigCount(m.m0()), static_cast<unsigned>(s - J.j)) * nJ);
            CHECK(j_eps_capped(cs, Budget{x}) == std::min<std::uint64_t>(s, J.j));
        }
    }
}

TEST_CASE("threads do not change results")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = random_instance(rng, 4, 25);
        CountOptions many;
        many.threads = 1 + rng() % 7;
        CHECK(info_complexity(inst.config, Budget{inst.x}, CountMethod::recursion, many) ==
              info_complexity(inst.config, Budget{inst.x}, CountMethod::recursion));
    }
}

TEST_CASE("large dimension uses big integers")
{
    const SpaceConfig c(0.5, WeightFamily::family({1, 0, 0, 1, 0}), MultiplicitySpec({2}, 1), 100);
    CHECK(info_complexity(c, Budget{0.5}, CountMethod::recursion) == boost::multiprecision::pow(BigCount(2), 100));
    // x slightly above a_1 with a constant: every coordinate takes 0 or 1 with at most one 1
    CHECK(info_complexity(c, Budget{1.5}, CountMethod::recursion) ==
          boost::multiprecision::pow(BigCount(2), 100) + 100 * boost::multiprecision::pow(BigCount(2), 99));
}

TEST_CASE("resource caps and method names")
{
    CHECK(parse_count_method("recursion") == CountMethod::recursion);
    CHECK(parse_count_method("bruteforce") == CountMethod::brute_force);
    CHECK_THROWS_AS(parse_count_method("magic"), ParameterError);
    const SpaceConfig c(0.5, WeightFamily::family({0.01, 0, 0, 1, 0}), MultiplicitySpec::ones(), 6);
    CountOptions tight;
    tight.box_cap = 1e3;
    tight.recursion_cap = 1e3;
    CHECK_THROWS_AS(info_complexity(c, Budget{5}, CountMethod::brute_force, tight), ResourceLimit);
    CHECK_THROWS_AS(info_complexity(c, Budget{5}, CountMethod::recursion, tight), ResourceLimit);
}
