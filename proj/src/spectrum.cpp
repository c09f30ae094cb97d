#include "expweight/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace expweight {

double exponent_sum(const SpaceConfig& config, const MultiIndex& k)
{
    const ExponentArithmetic arith(config);
    return arith.to_double(arith.index_sum(k));
}

double eigenvalue(const SpaceConfig& config, const MultiIndex& k)
{
    const double e = exponent_sum(config, k);
    return e == 0.0 ? 1.0 : std::pow(config.omega, e);
}

BigCount index_multiplicity(const MultiplicitySpec& mult, const MultiIndex& k)
{
    BigCount c = 1;
    for (auto kj : k)
        c *= mult.at(kj);
    return c;
}

EigenStream::EigenStream(const SpaceConfig& config, std::size_t frontier_cap)
    : config_(config), arith_(config), frontier_(Later{&arith_}), frontier_cap_(frontier_cap)
{
    frontier_.push(Node{arith_.zero(), MultiIndex(config.s, 0)});
}

void EigenStream::push_children(const Node& node)
{
    const auto& k = node.k;
    std::size_t first_nonzero = k.size() - 1;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] != 0) {
            first_nonzero = i;
            break;
        }
    }
    for (std::size_t j = 0; j <= first_nonzero; ++j) {
        Node child{{}, k};
        ++child.k[j];
        child.exponent = arith_.index_sum(child.k);
        frontier_.push(std::move(child));
    }
    if (frontier_.size() > frontier_cap_)
        throw ResourceLimit("eigenvalue frontier exceeds its size cap");
}

EigenEntry EigenStream::next()
{
    EigenEntry entry;
    Node top = frontier_.top();
    frontier_.pop();
    entry.exponent = top.exponent;
    entry.count = 0;
    entry.members.push_back(top.k);
    push_children(top);
    // children can tie with the level in float mode, so they are drained too
    while (!frontier_.empty() && arith_.equal(frontier_.top().exponent, entry.exponent)) {
        Node same = frontier_.top();
        frontier_.pop();
        entry.members.push_back(same.k);
        push_children(same);
    }
    std::sort(entry.members.begin(), entry.members.end());
    for (const auto& k : entry.members)
        entry.count += index_multiplicity(config_.mult, k);

    entry.exponent_sum = arith_.to_double(entry.exponent);
    entry.eigenvalue = entry.exponent_sum == 0.0
                           ? 1.0
                           : std::pow(config_.omega, entry.exponent_sum);
    emitted_ += entry.count;
    entry.cumulative = emitted_;
    ++levels_;
    return entry;
}

double nth_minimal_error(const SpaceConfig& config, const BigCount& n, std::size_t level_budget)
{
    if (n < 0)
        throw ParameterError("n must be >= 0");
    EigenStream stream(config);
    for (std::size_t level = 0; level < level_budget; ++level) {
        const EigenEntry e = stream.next();
        if (e.cumulative > n)
            return std::sqrt(e.eigenvalue);
    }
    throw ResourceLimit("n exceeds the eigenvalue enumeration budget");
}

} // namespace expweight
