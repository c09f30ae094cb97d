#include "doctest.h"

#include <cmath>
#include <random>

#include "expweight/config_io.hpp"

using namespace expweight;

TEST_CASE("config parsing")
{
    const auto doc = Json::parse(R"({"omega": 0.5, "s": 3,
        "weights": {"family": {"c_a": 1, "v1": 1, "v2": 0, "c_b": 2, "v3": 1}}})");
    const auto c = config_from_json(doc);
    CHECK(c.omega == 0.5);
    CHECK(c.s == 3);
    CHECK(c.mult == MultiplicitySpec::ones());
    CHECK(c.weights.a(3) == 3);
    CHECK(c.weights.b(2) == 4);

    const auto ex = Json::parse(R"({"omega": 0.25, "s": 2, "mult": {"prefix": [1], "tail": 2},
        "weights": {"explicit": {"a": [1, 2], "b": [1, 1], "limits": {"alpha": "inf", "B": 3.5}}}})");
    const auto e = config_from_json(ex);
    CHECK(e.mult == MultiplicitySpec::korobov());
    CHECK(std::isinf(*e.weights.declared().alpha));
    CHECK(*e.weights.declared().B == 3.5);
    CHECK_FALSE(e.weights.declared().B_star);

    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"omega": 1.5, "s": 1,
        "weights": {"family": {"c_a": 1, "v1": 0, "v2": 0, "c_b": 1, "v3": 0}}})")),
                    ParameterError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"omega": 0.5})")), ParameterError);
}

TEST_CASE("property: echo round trip is bit exact")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t s = 1 + rng() % 5;
        WeightFamily w = WeightFamily::family({0.1 + U(rng), U(rng), U(rng), 0.1 + U(rng), 3 * U(rng)});
        if (rng() % 2) {
            std::vector<double> a(s), b(s);
            double acc = U(rng);
            for (std::size_t j = 0; j < s; ++j) {
                acc += U(rng);
                a[j] = acc;
                b[j] = 0.1 + U(rng);
            }
            DeclaredLimits lim;
            if (rng() % 2)
                lim.alpha = std::numeric_limits<double>::infinity();
            if (rng() % 2)
                lim.B = 1 + U(rng);
            w = WeightFamily::explicit_lists(a, b, lim);
        }
        const SpaceConfig c(U(rng) * 0.98 + 0.01, w, MultiplicitySpec({1 + rng() % 3, 1 + rng() % 2}, 1 + rng() % 4),
                            s);
        const auto text = config_to_json(c).dump();
        const auto back = config_from_json(Json::parse(text));
        CHECK(back == c);
        CHECK(config_to_json(back).dump() == text);
    }
}

TEST_CASE("coefficient vectors round trip")
{
    CoefficientVector f{{{{0, 1}, Scalar(0.1, -2.5)}, {{3, 0}, Scalar(1e-300, 0)}}, Basis::unweighted};
    const auto back = coefficients_from_json(Json::parse(coefficients_to_json(f).dump()));
    CHECK(back.basis == Basis::unweighted);
    CHECK(back.entries == f.entries);
    CHECK(json_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(std::isinf(number_or_inf(Json("inf"))));
    CHECK_THROWS_AS(number_or_inf(Json("nan")), ParameterError);
}
