#include "expweight/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <thread>
#include <vector>

#include "expweight/arithmetic.hpp"

namespace expweight {

Budget budget_from_eps(double omega, double eps_log10)
{
    if (!(omega > 0.0 && omega < 1.0))
        throw ParameterError("omega must lie strictly inside (0,1)");
    if (!(eps_log10 <= 0.0))
        throw ParameterError("eps must be <= 1 (log10(eps) <= 0)");
    if (eps_log10 == 0.0)
        return {0.0};
    return {(-2.0 * eps_log10 * std::log(10.0)) / -std::log(omega)};
}

double eps_log10_from_budget(double omega, Budget budget)
{
    if (!(omega > 0.0 && omega < 1.0))
        throw ParameterError("omega must lie strictly inside (0,1)");
    if (!(budget.x >= 0.0))
        throw ParameterError("budget x must be >= 0");
    return budget.x * std::log(omega) / (2.0 * std::log(10.0));
}

CutoffIndex j_eps(const WeightFamily& weights, Budget budget)
{
    const double x = budget.x;
    if (!(x > weights.a(1)))
        return {false, 0};

    if (!weights.is_family()) {
        const auto& a = weights.a_list();
        const auto below = std::lower_bound(a.begin(), a.end(), x); // first a_j >= x
        if (below != a.end())
            return {false, static_cast<std::uint64_t>(below - a.begin())};
        const auto lim = weights.declared().lim_a;
        if (lim && *lim < x)
            return {true, 0};
        throw ParameterError("j(eps) lies beyond the explicit weight list and lim a_j is not declared "
                             "below x");
    }

    const auto& p = weights.params();
    if (p.v1 == 0 && p.v2 == 0)
        return {true, 0}; // a_j = c_a < x for every j

    // a_j increases to infinity: largest j with a_j < x
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    std::uint64_t lo = 1, hi = 2;
    while (weights.a(hi) < x) {
        lo = hi;
        if (hi >= cap / 2)
            throw ResourceLimit("j(eps) exceeds 2^62");
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (weights.a(mid) < x ? lo : hi) = mid;
    }
    return {false, lo};
}

std::uint64_t j_eps_capped(const SpaceConfig& config, Budget budget)
{
    const ExponentArithmetic arith(config);
    const Exponent X = arith.budget(budget.x);
    std::uint64_t j = 0;
    while (j < config.s && arith.less(arith.cost(j + 1, 1), X))
        ++j;
    return j;
}

std::string_view to_string(CountMethod m)
{
    return m == CountMethod::recursion ? "recursion" : "bruteforce";
}

CountMethod parse_count_method(std::string_view name)
{
    if (name == "recursion")
        return CountMethod::recursion;
    if (name == "bruteforce" || name == "brute_force" || name == "brute-force")
        return CountMethod::brute_force;
    throw ParameterError("unknown count method '" + std::string(name) + "'");
}

namespace {

class Counter {
public:
    Counter(const SpaceConfig& config, const ExponentArithmetic& arith, const Exponent& X, double cap)
        : config_(config), arith_(arith), X_(X), cap_(cap)
    {
        m0_powers_.push_back(1);
        for (std::size_t j = 1; j <= config.s; ++j)
            m0_powers_.push_back(m0_powers_.back() * config.mult.m0());
    }

    BigCount count(std::size_t j, const Exponent& partial) const
    {
        // a_1 is the cheapest nonzero step, so past it only k = 0 remains
        if (!arith_.less(arith_.add(partial, arith_.cost(1, 1)), X_))
            return m0_powers_[j];
        if (j == 1) {
            const std::uint64_t K = arith_.feasible_levels(1, partial, X_);
            return BigCount(config_.mult.prefix_count(K));
        }
        BigCount total = 0;
        for (std::uint64_t k = 0;; ++k) {
            const Exponent p = arith_.add(partial, arith_.cost(j, k));
            if (!arith_.less(p, X_))
                break;
            if (static_cast<double>(++work_) > cap_)
                throw ResourceLimit("recursion exceeded its node cap");
            total += count(j - 1, p) * config_.mult.at(k);
        }
        return total;
    }

private:
    const SpaceConfig& config_;
    const ExponentArithmetic& arith_;
    Exponent X_;
    double cap_;
    std::vector<BigCount> m0_powers_;
    mutable std::atomic<std::uint64_t> work_{0};
};

BigCount by_recursion(const SpaceConfig& config, const ExponentArithmetic& arith, const Exponent& X,
                      const CountOptions& options)
{
    const std::size_t s = config.s;
    const Counter counter(config, arith, X, options.recursion_cap);
    if (s == 1 || options.threads <= 1)
        return counter.count(s, arith.zero());

    // outer loop split by stride; integer sums are order independent
    const std::uint64_t outer = arith.feasible_levels(s, arith.zero(), X);
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(options.threads, std::max<std::uint64_t>(outer, 1)));
    std::vector<BigCount> partial(nthreads, 0);
    std::vector<std::exception_ptr> failure(nthreads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::uint64_t k = t; k < outer; k += nthreads) {
                    const Exponent p = arith.add(arith.zero(), arith.cost(s, k));
                    partial[t] += counter.count(s - 1, p) * config.mult.at(k);
                }
            } catch (...) {
                failure[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (const auto& f : failure)
        if (f)
            std::rethrow_exception(f);
    BigCount total = 0;
    for (const auto& c : partial)
        total += c;
    return total;
}

BigCount by_brute_force(const SpaceConfig& config, const ExponentArithmetic& arith, const Exponent& X,
                        const CountOptions& options)
{
    const std::size_t s = config.s;
    std::vector<std::uint64_t> upper(s);
    double box = 1.0;
    for (std::size_t j = 1; j <= s; ++j) {
        upper[j - 1] = arith.feasible_levels_scaled(j, 1, X); // inclusive bound of the box
        box *= static_cast<double>(upper[j - 1] + 1);
    }
    if (box > options.box_cap)
        throw ResourceLimit("brute-force box has about " + std::to_string(box) + " points, above the cap");

    std::vector<std::vector<Exponent>> costs(s);
    for (std::size_t j = 1; j <= s; ++j)
        for (std::uint64_t k = 0; k <= upper[j - 1]; ++k)
            costs[j - 1].push_back(arith.cost(j, k));

    BigCount total = 0;
    std::vector<std::uint64_t> k(s, 0);
    while (true) {
        Exponent sum = arith.zero();
        for (std::size_t j = s; j >= 1; --j)
            sum = arith.add(sum, costs[j - 1][k[j - 1]]);
        if (arith.less(sum, X)) {
            std::uint64_t weight = 1;
            bool small = true;
            for (std::size_t j = 0; j < s && small; ++j) {
                const std::uint64_t m = config.mult.at(k[j]);
                if (weight > (std::uint64_t{1} << 62) / m)
                    small = false;
                else
                    weight *= m;
            }
            if (small) {
                total += weight;
            } else {
                BigCount w = 1;
                for (auto kj : k)
                    w *= config.mult.at(kj);
                total += w;
            }
        }
        std::size_t j = 0;
        while (j < s && k[j] == upper[j]) {
            k[j] = 0;
            ++j;
        }
        if (j == s)
            break;
        ++k[j];
    }
    return total;
}

} // namespace

BigCount info_complexity(const SpaceConfig& config, Budget budget, CountMethod method,
                         const CountOptions& options)
{
    if (!(budget.x >= 0.0) || !std::isfinite(budget.x))
        throw ParameterError("budget x must be finite and >= 0");
    if (budget.x == 0.0)
        return 0;
    const ExponentArithmetic arith(config);
    const Exponent X = arith.budget(budget.x);
    return method == CountMethod::recursion ? by_recursion(config, arith, X, options)
                                            : by_brute_force(config, arith, X, options);
}

} // namespace expweight
