#include "expweight/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "expweight/arithmetic.hpp"
#include "expweight/limits.hpp"

namespace expweight {

namespace {

BigCount power(std::uint64_t base, std::size_t exp)
{
    return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

// number of j <= s with a_j < x, i.e. min(s, j(eps))
std::size_t active_dimensions(const ExponentArithmetic& arith, std::size_t s, const Exponent& X)
{
    std::size_t J = 0;
    while (J < s && arith.less(arith.cost(J + 1, 1), X))
        ++J;
    return J;
}

void require_positive_budget(Budget budget)
{
    if (!(budget.x > 0.0) || !std::isfinite(budget.x))
        throw ParameterError("bound requires eps in (0,1), i.e. 0 < x < inf");
}

} // namespace

std::string_view to_string(LowerVariant v)
{
    switch (v) {
    case LowerVariant::I:
        return "I";
    case LowerVariant::II:
        return "II";
    case LowerVariant::IV:
        return "IV";
    }
    return "?";
}

BigCount lemma1_lower(const SpaceConfig& config, Budget budget, LowerVariant variant)
{
    require_positive_budget(budget);
    const auto& m = config.mult;
    const std::size_t s = config.s;
    const ExponentArithmetic arith(config);
    const Exponent X = arith.budget(budget.x);

    switch (variant) {
    case LowerVariant::I:
        return power(m.m0(), s);
    case LowerVariant::II: {
        const Exponent corner = arith.index_sum(std::vector<std::uint64_t>(s, 1));
        if (!arith.less(corner, X))
            throw ParameterError("variant II requires x > a_1 + ... + a_s");
        return power(m.m0() + m.at(1), s);
    }
    case LowerVariant::IV: {
        if (!arith.less(arith.cost(1, 1), X))
            throw ParameterError("variant IV requires x > a_1");
        const std::size_t J = active_dimensions(arith, s, X);
        BigCount result = power(m.m0(), s - J);
        for (std::size_t j = 1; j <= J; ++j) {
            const std::uint64_t d = arith.feasible_levels_scaled(j, s, X) - 1;
            result *= BigCount(m.m0()) + BigCount(m.min_positive()) * d;
        }
        return result;
    }
    }
    throw ParameterError("unknown lower-bound variant");
}

BigCount lemma1_lower_general(const SpaceConfig& config, Budget budget, std::span<const double> alpha)
{
    require_positive_budget(budget);
    const std::size_t s = config.s;
    if (alpha.size() != s)
        throw ParameterError("need one alpha_j per dimension");
    for (std::size_t j = 0; j < s; ++j) {
        const double lo = j == 0 ? 0.0 : std::numeric_limits<double>::min();
        if (!(alpha[j] >= lo && alpha[j] < 1.0))
            throw ParameterError("alpha_1 must lie in [0,1) and alpha_j (j >= 2) in (0,1)");
    }
    const auto& m = config.mult;
    const ExponentArithmetic arith(config);
    const Exponent X = arith.budget(budget.x);
    if (!arith.less(arith.cost(1, 1), X))
        throw ParameterError("general lower bound requires x > a_1");

    BigCount result = 1;
    double tail_product = 1.0; // prod_{k>j} alpha_k
    for (std::size_t j = s; j >= 1; --j) {
        const double xj = budget.x * (1.0 - alpha[j - 1]) * tail_product;
        const std::uint64_t levels = arith.feasible_levels(j, arith.zero(), arith.budget(xj));
        const std::uint64_t d = levels == 0 ? 0 : levels - 1;
        result *= BigCount(m.m0()) + BigCount(m.min_positive()) * d;
        tail_product *= alpha[j - 1];
    }
    return result;
}

BigCount lemma1_upper(const SpaceConfig& config, Budget budget)
{
    require_positive_budget(budget);
    const auto& m = config.mult;
    const std::size_t s = config.s;
    const ExponentArithmetic arith(config);
    const Exponent X = arith.budget(budget.x);
    const std::size_t J = active_dimensions(arith, s, X);
    BigCount result = power(m.m0(), s - J);
    for (std::size_t j = 1; j <= J; ++j) {
        const std::uint64_t d = arith.feasible_levels_scaled(j, 1, X) - 1;
        result *= BigCount(m.m0()) + BigCount(m.max_positive()) * d;
    }
    return result;
}

namespace {

struct HardestCase {
    SpaceConfig reduced;
    bool exact_allowed;
};

HardestCase hardest_case(const SpaceConfig& config)
{
    const std::size_t s = config.s;
    const double a1 = config.weights.a(1);
    double b0 = config.weights.b(1);
    for (std::size_t j = 2; j <= s; ++j)
        b0 = std::min(b0, config.weights.b(j));
    const ExponentArithmetic original(config);
    return {SpaceConfig(config.omega,
                        WeightFamily::explicit_lists(std::vector<double>(s, a1), std::vector<double>(s, b0)),
                        config.mult, s),
            original.exact()};
}

} // namespace

std::uint64_t pp14_nonzero_cap(const SpaceConfig& config, Budget budget)
{
    if (!(budget.x >= 0.0) || !std::isfinite(budget.x))
        throw ParameterError("budget x must be finite and >= 0");
    if (budget.x == 0.0)
        return 0;
    const auto hc = hardest_case(config);
    // a_1 k < x  <=>  k < x / a_1 ; count of k >= 1 is ceil(x/a_1) - 1
    const SpaceConfig linear(config.omega,
                             WeightFamily::explicit_lists({config.weights.a(1)}, {1.0}), config.mult, 1);
    const ExponentArithmetic arith(linear, hc.exact_allowed);
    const std::uint64_t nonzero = arith.feasible_levels_scaled(1, 1, arith.budget(budget.x)) - 1;
    return std::min<std::uint64_t>(config.s, nonzero);
}

BigCount pp14_upper(const SpaceConfig& config, Budget budget)
{
    if (config.mult.m0() != 1)
        throw ParameterError("the factorial bound requires m_0 = 1");
    const std::uint64_t A = pp14_nonzero_cap(config, budget);
    if (A == 0)
        return 1;
    const auto hc = hardest_case(config);
    const ExponentArithmetic arith(hc.reduced, hc.exact_allowed);
    const Exponent X = arith.budget(budget.x);

    BigCount result = 1;
    for (std::uint64_t i = 0; i < A; ++i)
        result *= config.s - i;
    for (std::uint64_t j = 1; j <= A; ++j) {
        // n_1 at budget x/j: levels k with j a_1 k^{b_0} < x
        const std::uint64_t K = arith.feasible_levels_scaled(1, j, X);
        result *= config.mult.prefix_count(K);
    }
    return result;
}

double exp_power_tail(double rate, double b, std::uint64_t K)
{
    if (!(rate > 0) || !(b > 0) || K == 0)
        throw ParameterError("tail bound needs rate > 0, b > 0, K >= 1");
    const double Kd = static_cast<double>(K);
    const double Kb = std::pow(Kd, b);
    if (b >= 1.0) {
        // k^b >= K^b + (k - K) for k >= K >= 1
        return std::exp(-rate * Kb) / -std::expm1(-rate);
    }
    // decreasing summand: sum_{k>=K} f(k) <= f(K) + int_K^inf f
    const double inv_b = 1.0 / b;
    const double integral =
        boost::math::tgamma(inv_b, rate * Kb) / (b * std::pow(rate, inv_b));
    return std::exp(-rate * Kb) + integral;
}

TauSum sum_tau(const SpaceConfig& config, double tau, double tail_tol)
{
    if (!(tau > 0) || !std::isfinite(tau))
        throw ParameterError("tau must be positive");
    if (!(tail_tol > 0))
        throw ParameterError("tail tolerance must be positive");
    const std::size_t s = config.s;
    const auto& m = config.mult;
    const double lio = config.log_inv_omega();
    constexpr std::uint64_t kMaxTerms = 10'000'000;

    std::vector<double> rate(s), bexp(s);
    for (std::size_t j = 1; j <= s; ++j) {
        rate[j - 1] = tau * config.weights.a(j) * lio;
        bexp[j - 1] = config.weights.b(j);
    }

    double delta = tail_tol / static_cast<double>(s);
    for (int attempt = 0; attempt < 80; ++attempt) {
        double log_product = 0.0;
        double log_excess = 0.0; // sum log1p(t_j / F_j)
        double terms = 0.0;
        for (std::size_t j = 0; j < s; ++j) {
            double factor = static_cast<double>(m.m0());
            std::uint64_t K = 1;
            double tail = static_cast<double>(m.max_positive()) * exp_power_tail(rate[j], bexp[j], K);
            while (tail > delta) {
                factor += static_cast<double>(m.at(K)) *
                          std::exp(-rate[j] * std::pow(static_cast<double>(K), bexp[j]));
                ++K;
                if (K > kMaxTerms)
                    throw ResourceLimit("sum_tau series needs more than 1e7 terms");
                tail = static_cast<double>(m.max_positive()) * exp_power_tail(rate[j], bexp[j], K);
            }
            log_product += std::log(factor);
            log_excess += std::log1p(tail / factor);
            terms += static_cast<double>(K);
        }
        const double value = std::exp(log_product);
        const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * (terms + s) * value;
        const double error = value * std::expm1(log_excess) + rounding;
        if (error <= tail_tol)
            return {value, error};
        delta /= 4.0;
    }
    throw ResourceLimit("sum_tau tolerance is unreachable in double precision");
}

ExponentReport exponents(const SpaceConfig& config)
{
    ExponentReport r;
    const std::size_t s = config.s;
    for (std::size_t j = 1; j <= s; ++j)
        r.B_s += 1.0 / config.weights.b(j);
    r.p_s_star = 1.0 / r.B_s;

    const LimitSet lim = resolve_limits(config.weights);
    r.B = lim.B;
    r.B_star = lim.B_star;
    if (lim.B && std::isfinite(*lim.B))
        r.p_star_uexp = 1.0 / *lim.B;

    const double lio = config.log_inv_omega();
    r.t_star_qpt_upper = 2.0 / (config.weights.a(1) * lio);
    if (config.weights.is_family()) {
        const auto& p = config.weights.params();
        r.t_star_qpt_exact = p.v1 == 0 && p.v2 == 0 && p.v3 == 0;
    } else {
        const auto& a = config.weights.a_list();
        const auto& b = config.weights.b_list();
        r.t_star_qpt_exact = std::all_of(a.begin(), a.end(), [&](double v) { return v == a.front(); }) &&
                             std::all_of(b.begin(), b.end(), [&](double v) { return v == b.front(); });
    }

    const auto& m = config.mult;
    if (m.m0() != 1)
        return r;
    if (lim.alpha && *lim.alpha > 0)
        r.p_star_spt = std::isinf(*lim.alpha) ? 0.0 : 2.0 / (*lim.alpha * lio);

    const auto interval = [&](double base, double rate) -> std::pair<double, double> {
        if (std::isinf(rate))
            return {base, base};
        const double lo = std::max(base, std::log(1.0 + static_cast<double>(m.at(1))) / rate);
        const double hi = base + std::log(1.0 + static_cast<double>(m.max_positive())) / rate;
        return {lo, hi};
    };
    if (lim.B_star && std::isfinite(*lim.B_star) && lim.alpha_ecqpt && *lim.alpha_ecqpt > 0)
        r.ec_qpt_interval = interval(*lim.B_star, *lim.alpha_ecqpt);
    if (lim.B && std::isfinite(*lim.B) && lim.alpha_star && *lim.alpha_star > 0)
        r.ec_spt_interval = interval(*lim.B, *lim.alpha_star);
    return r;
}

} // namespace expweight
