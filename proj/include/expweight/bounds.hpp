#pragma once

// Certified lower and upper bounds on n(eps, APP_s), the sum of powered
// eigenvalues, and the convergence / tractability exponents.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "expweight/complexity.hpp"
#include "expweight/params.hpp"

namespace expweight {

enum class LowerVariant { I, II, IV };

std::string_view to_string(LowerVariant v);

/// I:  m_0^s                                            (x > 0)
/// II: (m_0 + m_1)^s                                    (x > a_1 + ... + a_s)
/// IV: m_0^s prod_{j<=min(s,j(eps))} (1 + m_min/m_0 (ceil((x/(a_j s))^{1/b_j}) - 1))   (x > a_1)
///
/// Every product is evaluated as prod (m_0 + m d_j) times a power of m_0, so
/// the results are exact integers.
BigCount lemma1_lower(const SpaceConfig& config, Budget budget, LowerVariant variant);

/// Lower bound with arbitrary alpha_j in [0, 1), one per dimension.
BigCount lemma1_lower_general(const SpaceConfig& config, Budget budget, std::span<const double> alpha);

/// m_0^s prod_{j<=min(s,j(eps))} (1 + m_max/m_0 (ceil((x/a_j)^{1/b_j}) - 1)); m_0^s when x <= a_1.
BigCount lemma1_upper(const SpaceConfig& config, Budget budget);

/// s!/(s - A)! prod_{j=1}^{A} n_1(x/j) for the hardest-case problem a_j = a_1,
/// b_j = min b_j, where A = min(s, ceil(x/a_1) - 1) bounds the number of
/// nonzero coordinates of any feasible index. Requires m_0 = 1.
BigCount pp14_upper(const SpaceConfig& config, Budget budget);

/// Number of nonzero coordinates A used by pp14_upper.
std::uint64_t pp14_nonzero_cap(const SpaceConfig& config, Budget budget);

/// Certified bound on sum_{k>=K} exp(-rate k^b) for K >= 1.
double exp_power_tail(double rate, double b, std::uint64_t K);

struct TauSum {
    double value;       // lower estimate from the truncated series
    double error_bound; // value <= true sum <= value + error_bound
};

/// prod_j (m_0 + sum_{k>=1} m_k omega^{tau a_j k^{b_j}}) = sum_k lambda_{s,k}^tau.
TauSum sum_tau(const SpaceConfig& config, double tau, double tail_tol);

struct ExponentReport {
    double B_s = 0;                  // sum_{j<=s} 1/b_j
    std::optional<double> B;         // +inf allowed; empty when unknown
    std::optional<double> B_star;
    double p_s_star = 0;             // 1/B_s
    std::optional<double> p_star_uexp;
    double t_star_qpt_upper = 0;     // 2/(a_1 log(1/omega))
    bool t_star_qpt_exact = false;   // constant a and b
    std::optional<double> p_star_spt;
    std::optional<std::pair<double, double>> ec_qpt_interval;
    std::optional<std::pair<double, double>> ec_spt_interval;
};

ExponentReport exponents(const SpaceConfig& config);

} // namespace expweight
