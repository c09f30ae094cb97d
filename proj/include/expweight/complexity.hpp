#pragma once

// Information complexity n(eps, APP_s) = sum over A(eps, s) of m_{k_1}...m_{k_s},
// A(eps, s) = { k : sum_j a_j k_j^{b_j} < x(eps) }, evaluated in budget space.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "expweight/params.hpp"

namespace expweight {

/// x(eps) = log(eps^-2) / log(omega^-1).
struct Budget {
    double x = 0.0;
};

/// eps is passed as log10(eps) so that eps far below double range stays usable.
Budget budget_from_eps(double omega, double eps_log10);
double eps_log10_from_budget(double omega, Budget budget);

/// j(eps) = sup{ j : x > a_j }. Zero when x <= a_1.
struct CutoffIndex {
    bool infinite = false;
    std::uint64_t j = 0;
};

CutoffIndex j_eps(const WeightFamily& weights, Budget budget);
/// min(s, j(eps)), computed from a_1..a_s only.
std::uint64_t j_eps_capped(const SpaceConfig& config, Budget budget);

enum class CountMethod { recursion, brute_force };

std::string_view to_string(CountMethod m);
CountMethod parse_count_method(std::string_view name);

struct CountOptions {
    unsigned threads = 1;
    /// Cap on the number of recursion nodes visited.
    double recursion_cap = 2e9;
    /// Cap on the brute-force box size.
    double box_cap = 2e8;
};

BigCount info_complexity(const SpaceConfig& config, Budget budget, CountMethod method,
                         const CountOptions& options = {});

} // namespace expweight
