#pragma once

// Tractability verdicts from the iff-conditions on (alpha, alpha*, alpha_ECQPT,
// lim a_j, lim log a_j / log j, B, B*) and m_0.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "expweight/bounds.hpp"
#include "expweight/limits.hpp"
#include "expweight/params.hpp"

namespace expweight {

enum class Verdict { yes, no, unknown };

std::string_view to_string(Verdict v);

enum class Notion { EXP, UEXP, WT, UWT, QPT, PT, SPT, EC_WT, EC_UWT, EC_QPT, EC_PT, EC_SPT };

inline constexpr std::array<Notion, 12> all_notions = {
    Notion::EXP, Notion::UEXP,  Notion::WT,     Notion::UWT,   Notion::QPT,   Notion::PT,
    Notion::SPT, Notion::EC_WT, Notion::EC_UWT, Notion::EC_QPT, Notion::EC_PT, Notion::EC_SPT};

std::string_view to_string(Notion n);

/// (t1,t2)-WT holds iff t1 > 1 or m_0 = 1.
bool wt_holds(double t1, double t2, std::uint64_t m0);
/// EC-(t1,t2)-WT holds iff t1 > 1, or t2 > 1 and m_0 = 1.
bool ec_wt_holds(double t1, double t2, std::uint64_t m0);

struct Region {
    std::string condition; // general form
    std::string given_m0;  // specialized to the instance's m_0
};

struct TractabilityReport {
    std::array<Verdict, 12> verdicts{};
    Region wt_t1t2;
    Region ec_wt_t1t2;
    ExponentReport exponents;
    LimitSet limits;

    Verdict operator[](Notion n) const { return verdicts[static_cast<std::size_t>(n)]; }
};

/// Exponents are reported for dimension s.
TractabilityReport classify(const WeightFamily& weights, const MultiplicitySpec& mult, double omega,
                            std::size_t s = 1);

/// Empty when every implication of the hierarchy holds, otherwise the first
/// violated implication, e.g. "SPT => PT".
std::string check_implications(const TractabilityReport& report);

} // namespace expweight
