#include "expweight/experiments.hpp"

#include <cmath>

#include "expweight/arithmetic.hpp"
#include "expweight/bounds.hpp"

namespace expweight {

std::vector<double> BudgetGrid::values() const
{
    if (!(x_min > 0) || !(x_max >= x_min) || !std::isfinite(x_max))
        throw ParameterError("grid needs 0 < x_min <= x_max < inf");
    if (points < 3)
        throw ParameterError("grid needs at least 3 points");
    std::vector<double> xs(points);
    const double ratio = std::log(x_max / x_min);
    for (std::size_t i = 0; i < points; ++i)
        xs[i] = x_min * std::exp(ratio * static_cast<double>(i) / static_cast<double>(points - 1));
    xs.front() = x_min;
    xs.back() = x_max;
    return xs;
}

FitResult run_fit_exp(const SpaceConfig& config, const BudgetGrid& grid, const CountOptions& options)
{
    std::vector<double> lx, ln;
    for (double x : grid.values()) {
        const BigCount n = info_complexity(config, Budget{x}, CountMethod::recursion, options);
        if (n == 0)
            continue;
        lx.push_back(std::log(x));
        ln.push_back(std::log(n.convert_to<double>()));
    }
    if (lx.size() < 2)
        throw ParameterError("fewer than two nonzero counts on the grid");
    const double N = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ln[i];
    }
    mx /= N;
    my /= N;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ln[i] - my);
        syy += (ln[i] - my) * (ln[i] - my);
    }
    if (sxx == 0)
        throw ParameterError("degenerate grid");
    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.r_squared = syy == 0 ? 1.0 : sxy * sxy / (sxx * syy);
    r.predicted_B_s = exponents(config).B_s;
    r.points_used = lx.size();
    return r;
}

std::vector<SandwichRow> run_sandwich(const SpaceConfig& config, const std::vector<double>& xs,
                                      const CountOptions& options)
{
    const ExponentArithmetic arith(config);
    std::vector<SandwichRow> rows;
    for (double x : xs) {
        SandwichRow row;
        row.x = x;
        const Budget budget{x};
        row.exact = info_complexity(config, budget, CountMethod::recursion, options);
        if (x == 0) {
            row.lower = 0;
            row.upper = 0;
        } else {
            const bool above_a1 = arith.less(arith.cost(1, 1), arith.budget(x));
            row.lower = lemma1_lower(config, budget, above_a1 ? LowerVariant::IV : LowerVariant::I);
            row.upper = lemma1_upper(config, budget);
        }
        row.ok = row.lower <= row.exact && row.exact <= row.upper;
        if (config.mult.m0() == 1) {
            row.upper_pp14 = pp14_upper(config, budget);
            row.ok = row.ok && row.exact <= *row.upper_pp14;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace expweight

namespace expweight {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// one or two decimals, so integer b gives the exact path
double short_decimal(std::mt19937_64& rng, double lo, double hi)
{
    return std::round(uniform(rng, lo, hi) * 100.0) / 100.0;
}

WeightFamily random_weights(std::mt19937_64& rng, std::size_t s)
{
    switch (pick(rng, 0, 2)) {
    case 0: {
        FamilyParams p;
        p.c_a = short_decimal(rng, 0.3, 2.0);
        p.v1 = static_cast<double>(pick(rng, 0, 2));
        p.v2 = pick(rng, 0, 3) == 0 ? short_decimal(rng, 0.05, 0.6) : 0.0;
        p.c_b = static_cast<double>(pick(rng, 1, 2));
        p.v3 = static_cast<double>(pick(rng, 0, 1));
        return WeightFamily::family(p);
    }
    case 1: {
        FamilyParams p;
        p.c_a = uniform(rng, 0.3, 2.0);
        p.v1 = uniform(rng, 0.0, 1.5);
        p.v2 = 0.0;
        p.c_b = uniform(rng, 0.5, 2.0);
        p.v3 = uniform(rng, 0.0, 1.0);
        return WeightFamily::family(p);
    }
    default: {
        const bool integer_b = pick(rng, 0, 1) == 0;
        std::vector<double> a(s), b(s);
        double prev = 0.2;
        for (std::size_t j = 0; j < s; ++j) {
            prev = short_decimal(rng, prev, prev + 1.5);
            a[j] = prev;
            b[j] = integer_b ? static_cast<double>(pick(rng, 1, 3)) : uniform(rng, 0.5, 3.0);
        }
        return WeightFamily::explicit_lists(a, b);
    }
    }
}

double box_size(const ExponentArithmetic& arith, std::size_t s, double x)
{
    double box = 1.0;
    for (std::size_t j = 1; j <= s; ++j)
        box *= static_cast<double>(arith.feasible_levels_scaled(j, 1, arith.budget(x)) + 1);
    return box;
}

} // namespace

RandomInstance random_instance(std::mt19937_64& rng, std::size_t max_s, double max_x, double box_cap)
{
    const std::size_t s = pick(rng, 1, max_s);
    const double omega = uniform(rng, 0.1, 0.9);
    std::vector<std::uint64_t> prefix(pick(rng, 0, 4));
    for (auto& m : prefix)
        m = pick(rng, 1, 3);
    const MultiplicitySpec mult(prefix, pick(rng, 1, 3));
    SpaceConfig config(omega, random_weights(rng, s), mult, s);

    const ExponentArithmetic arith(config);
    double x = short_decimal(rng, 0.0, max_x);
    while (x > 0.01 && box_size(arith, s, x) > box_cap)
        x = std::round(x * 80.0) / 100.0;
    if (pick(rng, 0, 2) == 0) {
        // land exactly on an exponent sum inside the box
        std::vector<std::uint64_t> k(s);
        for (std::size_t j = 1; j <= s; ++j)
            k[j - 1] = pick(rng, 0, arith.feasible_levels_scaled(j, s, arith.budget(x)));
        const double on = arith.to_double(arith.index_sum(k));
        if (on > 0 && box_size(arith, s, on) <= box_cap)
            x = on;
    }
    return {std::move(config), x};
}

} // namespace expweight
