#include "doctest.h"

#include <cmath>
#include <random>

#include "expweight/complexity.hpp"
#include "expweight/spectrum.hpp"
#include "oracles.hpp"

using namespace expweight;

namespace {

SpaceConfig lists(double omega, std::vector<double> a, std::vector<double> b,
                  MultiplicitySpec m = MultiplicitySpec::ones())
{
    const auto s = a.size();
    return {omega, WeightFamily::explicit_lists(std::move(a), std::move(b)), std::move(m), s};
}

} // namespace

TEST_CASE("exponent_sum and eigenvalue examples")
{
    CHECK(exponent_sum(lists(0.5, {1, 2}, {1, 1}), {1, 1}) == 3.0);
    CHECK(exponent_sum(lists(0.5, {1, 1}, {2, 1}), {2, 1}) == 5.0);
    CHECK(exponent_sum(lists(0.5, {1, 1.5}, {2.5, 0.3}), {0, 0}) == 0.0);
    CHECK_THROWS_AS(exponent_sum(lists(0.5, {1, 1}, {1, 1}), {1}), ParameterError);

    CHECK(eigenvalue(lists(0.5, {1, 2}, {1, 1}), {1, 1}) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(eigenvalue(lists(0.3, {1.7, 2}, {0.5, 1}), {0, 0}) == 1.0);
    CHECK(eigenvalue(lists(0.25, {1}, {1}), {1}) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("eigen stream examples")
{
    {
        EigenStream st(lists(0.5, {1, 1}, {1, 1}));
        const double sums[] = {0, 1, 2};
        const double eig[] = {1, 0.5, 0.25};
        const int counts[] = {1, 2, 3};
        for (int i = 0; i < 3; ++i) {
            const auto e = st.next();
            CHECK(e.exponent_sum == sums[i]);
            CHECK(e.eigenvalue == doctest::Approx(eig[i]).epsilon(1e-15));
            CHECK(e.count == counts[i]);
        }
    }
    {
        const double omega = 0.3;
        EigenStream st(lists(omega, {1}, {1}, MultiplicitySpec::korobov()));
        const int counts[] = {1, 2, 2};
        for (int i = 0; i < 3; ++i) {
            const auto e = st.next();
            CHECK(e.exponent_sum == i);
            CHECK(e.eigenvalue == doctest::Approx(std::pow(omega, i)).epsilon(1e-15));
            CHECK(e.count == counts[i]);
        }
    }
    {
        EigenStream st(lists(0.5, {0.7, 1.1, 2}, {1, 2, 0.5}, MultiplicitySpec({3, 1}, 2)));
        const auto e = st.next();
        CHECK(e.exponent_sum == 0.0);
        CHECK(e.eigenvalue == 1.0);
        CHECK(e.count == 27);
    }
}

TEST_CASE("nth_minimal_error examples")
{
    CHECK(nth_minimal_error(lists(0.5, {1, 3}, {2, 1}, MultiplicitySpec({2}, 1)), 0) == 1.0);
    CHECK(nth_minimal_error(lists(0.25, {1}, {1}), 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(nth_minimal_error(lists(0.5, {1, 1}, {1, 1}), 2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // n below m_0^s keeps the top eigenvalue
    CHECK(nth_minimal_error(lists(0.5, {1, 1}, {1, 1}, MultiplicitySpec({2}, 1)), 3) == 1.0);
}

TEST_CASE("property: stream equals the rational enumerate-group-sort oracle")
{
    std::mt19937_64 rng(5);
    const char* as[] = {"0.5", "0.75", "1", "1.25", "1.5", "2", "2.5", "3"};
    for (int trial = 0; trial < 40; ++trial) {
        oracle::ExactInstance in;
        const std::size_t s = 1 + rng() % 3;
        std::vector<std::string> a;
        for (std::size_t j = 0; j < s; ++j)
            a.push_back(as[rng() % 8]);
        std::sort(a.begin(), a.end(), [](auto& p, auto& q) { return std::stod(p) < std::stod(q); });
        in.a = a;
        for (std::size_t j = 0; j < s; ++j)
            in.b.push_back(1 + rng() % 3);
        in.prefix.resize(rng() % 4);
        for (auto& m : in.prefix)
            m = 1 + rng() % 3;
        in.tail = 1 + rng() % 3;
        in.omega = 0.1 + 0.8 * (rng() % 1000) / 1000.0;

        const auto expect = oracle::levels(in, oracle::Rational(20));
        EigenStream st(in.config());
        BigCount cumulative = 0;
        for (const auto& level : expect) {
            const auto e = st.next();
            REQUIRE(e.members == level.members);
            CHECK(e.count == level.count);
            cumulative += level.count;
            CHECK(e.cumulative == cumulative);
            CHECK(e.exponent_sum == doctest::Approx(level.sum.convert_to<double>()).epsilon(1e-15));
        }
        CHECK(st.next().exponent_sum > 20.0);
    }
}

TEST_CASE("property: float-path stream matches direct enumeration within 1e-14")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t s = 1 + rng() % 3;
        std::vector<double> a(s), b(s);
        double prev = 0.4;
        for (std::size_t j = 0; j < s; ++j) {
            prev += U(rng);
            a[j] = prev;
            b[j] = 0.4 + 2.5 * U(rng);
        }
        const auto config = lists(0.1 + 0.8 * U(rng), a, b, MultiplicitySpec({1 + rng() % 3}, 1 + rng() % 2));

        // every k with sum <= 20, summed in long double
        std::map<std::vector<std::uint64_t>, long double> expect;
        std::vector<std::uint64_t> k(s, 0);
        auto rec = [&](auto&& self, std::size_t j, long double partial) -> void {
            if (j == s) {
                expect[k] = partial;
                return;
            }
            for (std::uint64_t v = 0;; ++v) {
                const long double c = v == 0 ? 0.0L : a[j] * std::pow((long double)v, (long double)b[j]);
                if (partial + c > 20.0L - 1e-9L)
                    break;
                k[j] = v;
                self(self, j + 1, partial + c);
            }
            k[j] = 0;
        };
        rec(rec, 0, 0.0L);

        EigenStream st(config);
        std::size_t seen = 0;
        double last = -1;
        while (seen < expect.size()) {
            const auto e = st.next();
            CHECK(e.exponent_sum > last);
            last = e.exponent_sum;
            BigCount count = 0;
            for (const auto& m : e.members) {
                auto it = expect.find(m);
                REQUIRE(it != expect.end());
                CHECK(std::abs(e.exponent_sum - (double)it->second) <= 1e-14 * std::max(1.0, e.exponent_sum));
                count += index_multiplicity(config.mult, m);
                ++seen;
            }
            CHECK(e.count == count);
        }
    }
}

TEST_CASE("property: cumulative count above eps^2 equals the information complexity")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t s = 1 + rng() % 3;
        std::vector<double> a(s), b(s);
        double prev = 0.3;
        for (std::size_t j = 0; j < s; ++j) {
            prev += std::round(100 * U(rng)) / 100;
            a[j] = prev;
            b[j] = trial % 2 ? 1.0 + rng() % 2 : 0.5 + 2 * U(rng);
        }
        const auto config = lists(0.2 + 0.6 * U(rng), a, b, MultiplicitySpec({1 + rng() % 2, 2}, 1 + rng() % 3));
        const double x = 12 * U(rng);
        EigenStream st(config);
        BigCount above = 0;
        for (;;) {
            const auto e = st.next();
            if (!(e.exponent_sum < x))
                break;
            above = e.cumulative;
        }
        CHECK(above == info_complexity(config, Budget{x}, CountMethod::recursion));
    }
}

TEST_CASE("property: nth_minimal_error is nonincreasing")
{
    const auto config = lists(0.4, {0.5, 1.2, 1.7}, {1.5, 1, 2}, MultiplicitySpec({1}, 2));
    double prev = 2;
    for (int n = 0; n < 300; ++n) {
        const double e = nth_minimal_error(config, n);
        CHECK(e <= prev);
        prev = e;
    }
}
