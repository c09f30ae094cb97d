#pragma once

// Eigenvalues omega^{sum_j a_j k_j^{b_j}} of W_s = APP_s^* APP_s, grouped into
// distinct levels and emitted in decreasing order.

#include <cstddef>
#include <cstdint>
#include <queue>
#include <vector>

#include "expweight/arithmetic.hpp"
#include "expweight/params.hpp"

namespace expweight {

/// Level multi-index k = [k_1, ..., k_s].
using MultiIndex = std::vector<std::uint64_t>;

/// sum_j a_j k_j^{b_j}.
double exponent_sum(const SpaceConfig& config, const MultiIndex& k);
/// omega^{exponent_sum(k)}; equals 1 exactly for k = 0.
double eigenvalue(const SpaceConfig& config, const MultiIndex& k);

/// Product of the level multiplicities m_{k_1} ... m_{k_s}.
BigCount index_multiplicity(const MultiplicitySpec& mult, const MultiIndex& k);

struct EigenEntry {
    Exponent exponent;     // in the stream's arithmetic
    double exponent_sum = 0.0;
    double eigenvalue = 1.0;
    BigCount count;        // eigenvalue multiplicity
    BigCount cumulative;   // multiplicities emitted up to and including this level
    std::vector<MultiIndex> members; // level multi-indices, ascending lexicographic
};

/// Infinite stream of distinct eigenvalue levels in strictly decreasing order.
///
/// Best-first search over NN_0^s. Each nonzero multi-index has exactly one
/// parent (decrement its first nonzero coordinate), so children are generated
/// without a visited set: k spawns k + e_j for j up to its first nonzero
/// coordinate. Costs are increasing in every k_j, so the frontier minimum is
/// the global minimum of everything not yet emitted.
class EigenStream {
public:
    explicit EigenStream(const SpaceConfig& config, std::size_t frontier_cap = 50'000'000);
    // the frontier comparator points at arith_
    EigenStream(const EigenStream&) = delete;
    EigenStream& operator=(const EigenStream&) = delete;

    EigenEntry next();

    const BigCount& emitted() const noexcept { return emitted_; }
    std::size_t levels_emitted() const noexcept { return levels_; }
    const ExponentArithmetic& arithmetic() const noexcept { return arith_; }
    const SpaceConfig& config() const noexcept { return config_; }

private:
    struct Node {
        Exponent exponent;
        MultiIndex k;
    };
    struct Later {
        const ExponentArithmetic* arith;
        bool operator()(const Node& x, const Node& y) const
        {
            if (arith->less(y.exponent, x.exponent))
                return true;
            if (arith->less(x.exponent, y.exponent))
                return false;
            return y.k < x.k;
        }
    };

    void push_children(const Node& node);

    SpaceConfig config_;
    ExponentArithmetic arith_;
    std::priority_queue<Node, std::vector<Node>, Later> frontier_;
    std::size_t frontier_cap_;
    BigCount emitted_ = 0;
    std::size_t levels_ = 0;
};

/// e(n, APP_s) = sqrt(lambda_{s,n+1}) over the multiplicity-expanded sequence.
double nth_minimal_error(const SpaceConfig& config, const BigCount& n,
                         std::size_t level_budget = 10'000'000);

} // namespace expweight
