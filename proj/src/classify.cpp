#include "expweight/classify.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace expweight {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

SeriesValue power_series_sum(double c_b, double v)
{
    if (!(c_b > 0) || !(v > 1))
        throw ParameterError("power series sum needs c_b > 0 and v > 1");
    // Euler-Maclaurin with the head summed exactly up to N - 1
    constexpr int N = 1000;
    double head = 0.0;
    for (int j = N - 1; j >= 1; --j)
        head += std::pow(static_cast<double>(j), -v);
    const double n = N;
    const double fN = std::pow(n, -v);
    const double tail = n * fN / (v - 1.0) + fN / 2.0 + v * fN / n / 12.0 -
                        v * (v + 1.0) * (v + 2.0) * fN / (n * n * n) / 720.0;
    const double next = v * (v + 1.0) * (v + 2.0) * (v + 3.0) * (v + 4.0) * fN / std::pow(n, 5) / 30240.0;
    const double value = (head + tail) / c_b;
    const double error = (next + 4.0 * N * std::numeric_limits<double>::epsilon() * (head + tail)) / c_b;
    return {value, error};
}

namespace {

// sup_s B_s / (1 + log s) for b_j = c_b j^v with v >= 1. For s' > s,
// B_{s'} <= B_s + (log s' - log s)/c_b, so every later ratio is at most
// max(B_s / (1 + log s), 1/c_b); the scan stops once that cannot beat the best.
double b_star_scan(double c_b, double v)
{
    double partial = 0.0;
    double best = 0.0;
    for (std::uint64_t s = 1; s <= 10'000'000; ++s) {
        const double sd = static_cast<double>(s);
        partial += 1.0 / (c_b * std::pow(sd, v));
        const double ratio = partial / (1.0 + std::log(sd));
        best = std::max(best, ratio);
        if (std::max(ratio, 1.0 / c_b) <= best)
            return best;
    }
    throw ResourceLimit("B* scan did not terminate");
}

} // namespace

LimitSet family_limits(const FamilyParams& p)
{
    LimitSet l;
    const bool growing = p.v1 > 0 || p.v2 > 0;
    l.alpha = growing ? kInf : 0.0;
    l.lim_a = growing ? kInf : p.c_a;
    l.lim_log_ratio = p.v2 > 0 ? kInf : p.v1;
    l.alpha_star = p.v2;
    l.alpha_ecqpt = p.v2 > 0 ? kInf : 0.0;
    if (p.v3 > 1) {
        const auto sum = power_series_sum(p.c_b, p.v3);
        l.B = sum.value;
        l.B_error = sum.error;
    } else {
        l.B = kInf;
    }
    l.B_star = p.v3 >= 1 ? b_star_scan(p.c_b, p.v3) : kInf;
    l.B_star_finite = std::isfinite(*l.B_star);
    return l;
}

namespace {

using Field = std::optional<double> LimitSet::*;

struct Rule {
    Field antecedent;
    bool (*holds)(double);
    Field consequent;
    bool (*consistent)(double);
    double implied;
    const char* text;
};

bool positive(double v) { return v > 0; }
bool finite(double v) { return std::isfinite(v); }
bool infinite(double v) { return std::isinf(v); }
bool zero(double v) { return v == 0; }

// a_j nondecreasing and positive, so each quantity's growth forces the next.
const Rule kRules[] = {
    {&LimitSet::alpha_star, positive, &LimitSet::alpha_ecqpt, infinite, kInf, "alpha* > 0 => alpha_ECQPT = inf"},
    {&LimitSet::alpha_ecqpt, positive, &LimitSet::lim_log_ratio, infinite, kInf,
     "alpha_ECQPT > 0 => lim log a_j/log j = inf"},
    {&LimitSet::lim_log_ratio, positive, &LimitSet::alpha, infinite, kInf, "lim log a_j/log j > 0 => alpha = inf"},
    {&LimitSet::alpha, positive, &LimitSet::lim_a, infinite, kInf, "alpha > 0 => lim a_j = inf"},
    {&LimitSet::lim_a, finite, &LimitSet::alpha, zero, 0.0, "lim a_j < inf => alpha = 0"},
    {&LimitSet::alpha, finite, &LimitSet::lim_log_ratio, zero, 0.0, "alpha < inf => lim log a_j/log j = 0"},
    {&LimitSet::lim_log_ratio, finite, &LimitSet::alpha_ecqpt, zero, 0.0,
     "lim log a_j/log j < inf => alpha_ECQPT = 0"},
    {&LimitSet::alpha_ecqpt, finite, &LimitSet::alpha_star, zero, 0.0, "alpha_ECQPT < inf => alpha* = 0"},
    {&LimitSet::B_star, infinite, &LimitSet::B, infinite, kInf, "B* = inf => B = inf"},
};

void check_range(const std::optional<double>& v, const char* name)
{
    if (v && (std::isnan(*v) || *v < 0))
        throw ParameterError(std::string("declared limit ") + name + " must be >= 0");
}

} // namespace

LimitSet resolve_limits(const WeightFamily& weights)
{
    if (weights.is_family())
        return family_limits(weights.params());

    const DeclaredLimits& d = weights.declared();
    LimitSet l;
    l.alpha = d.alpha;
    l.alpha_star = d.alpha_star;
    l.alpha_ecqpt = d.alpha_ecqpt;
    l.lim_a = d.lim_a;
    l.lim_log_ratio = d.lim_log_ratio;
    l.B = d.B;
    l.B_star = d.B_star;
    check_range(l.alpha, "alpha");
    check_range(l.alpha_star, "alpha_star");
    check_range(l.alpha_ecqpt, "alpha_ecqpt");
    check_range(l.lim_a, "lim_a");
    check_range(l.lim_log_ratio, "lim_log_ratio");
    check_range(l.B, "B");
    check_range(l.B_star, "B_star");
    if (l.lim_a && !(*l.lim_a >= weights.a(1)))
        throw ParameterError("declared lim a_j is below a_1");

    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : kRules) {
            const auto& ante = l.*(r.antecedent);
            if (!ante || !r.holds(*ante))
                continue;
            auto& cons = l.*(r.consequent);
            if (!cons) {
                cons = r.implied;
                changed = true;
            } else if (!r.consistent(*cons)) {
                throw ParameterError(std::string("declared limits contradict: ") + r.text);
            }
        }
    }
    if (l.B && std::isfinite(*l.B) && l.B_star && std::isinf(*l.B_star))
        throw ParameterError("declared limits contradict: B < inf => B* < inf");
    if (l.B_star)
        l.B_star_finite = std::isfinite(*l.B_star);
    else if (l.B && std::isfinite(*l.B))
        l.B_star_finite = true;
    return l;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes:
        return "YES";
    case Verdict::no:
        return "NO";
    case Verdict::unknown:
        return "UNKNOWN";
    }
    return "?";
}

std::string_view to_string(Notion n)
{
    switch (n) {
    case Notion::EXP: return "EXP";
    case Notion::UEXP: return "UEXP";
    case Notion::WT: return "WT";
    case Notion::UWT: return "UWT";
    case Notion::QPT: return "QPT";
    case Notion::PT: return "PT";
    case Notion::SPT: return "SPT";
    case Notion::EC_WT: return "EC_WT";
    case Notion::EC_UWT: return "EC_UWT";
    case Notion::EC_QPT: return "EC_QPT";
    case Notion::EC_PT: return "EC_PT";
    case Notion::EC_SPT: return "EC_SPT";
    }
    return "?";
}

bool wt_holds(double t1, double /*t2*/, std::uint64_t m0) { return t1 > 1 || m0 == 1; }

bool ec_wt_holds(double t1, double t2, std::uint64_t m0) { return t1 > 1 || (t2 > 1 && m0 == 1); }

namespace {

Verdict known(bool b) { return b ? Verdict::yes : Verdict::no; }

// Three-valued conjunction: NO dominates UNKNOWN.
Verdict all_of(std::initializer_list<Verdict> vs)
{
    bool unknown = false;
    for (Verdict v : vs) {
        if (v == Verdict::no)
            return Verdict::no;
        unknown |= v == Verdict::unknown;
    }
    return unknown ? Verdict::unknown : Verdict::yes;
}

Verdict test(const std::optional<double>& v, bool (*pred)(double))
{
    return v ? known(pred(*v)) : Verdict::unknown;
}

} // namespace

TractabilityReport classify(const WeightFamily& weights, const MultiplicitySpec& mult, double omega,
                            std::size_t s)
{
    if (!(omega > 0 && omega < 1))
        throw ParameterError("omega must lie in (0,1)");
    const SpaceConfig config(omega, weights, mult, s);

    TractabilityReport r;
    r.limits = resolve_limits(weights);
    r.exponents = exponents(config);
    const LimitSet& l = r.limits;

    const Verdict m0_one = known(mult.m0() == 1);
    const Verdict B_finite = test(l.B, finite);
    const Verdict B_star_finite = l.B_star_finite ? known(*l.B_star_finite) : Verdict::unknown;

    auto set = [&](Notion n, Verdict v) { r.verdicts[static_cast<std::size_t>(n)] = v; };
    set(Notion::EXP, Verdict::yes);
    set(Notion::UEXP, B_finite);
    set(Notion::WT, m0_one);
    set(Notion::UWT, m0_one);
    set(Notion::QPT, m0_one);
    set(Notion::PT, all_of({m0_one, test(l.alpha, positive)}));
    set(Notion::SPT, all_of({m0_one, test(l.alpha, positive)}));
    set(Notion::EC_WT, all_of({m0_one, test(l.lim_a, infinite)}));
    set(Notion::EC_UWT, all_of({m0_one, test(l.lim_log_ratio, infinite)}));
    set(Notion::EC_QPT, all_of({m0_one, B_star_finite, test(l.alpha_ecqpt, positive)}));
    set(Notion::EC_PT, all_of({m0_one, B_finite, test(l.alpha_star, positive)}));
    set(Notion::EC_SPT, all_of({m0_one, B_finite, test(l.alpha_star, positive)}));

    r.wt_t1t2.condition = "t1>1 or m0==1";
    r.ec_wt_t1t2.condition = "t1>1 or (t2>1 and m0==1)";
    if (mult.m0() == 1) {
        r.wt_t1t2.given_m0 = "all t1>0, t2>0";
        r.ec_wt_t1t2.given_m0 = "t1>1 or t2>1";
    } else {
        r.wt_t1t2.given_m0 = "t1>1";
        r.ec_wt_t1t2.given_m0 = "t1>1";
    }
    return r;
}

std::string check_implications(const TractabilityReport& report)
{
    static const std::pair<Notion, Notion> chain[] = {
        {Notion::SPT, Notion::PT},          {Notion::PT, Notion::QPT},
        {Notion::QPT, Notion::UWT},         {Notion::UWT, Notion::WT},
        {Notion::EC_SPT, Notion::EC_PT},    {Notion::EC_PT, Notion::EC_QPT},
        {Notion::EC_QPT, Notion::EC_UWT},   {Notion::EC_UWT, Notion::EC_WT},
        {Notion::EC_SPT, Notion::SPT},      {Notion::EC_PT, Notion::PT},
        {Notion::EC_QPT, Notion::QPT},      {Notion::EC_UWT, Notion::UWT},
        {Notion::EC_WT, Notion::WT},        {Notion::UEXP, Notion::EXP},
    };
    for (const auto& [from, to] : chain) {
        // YES must not lead to NO; UNKNOWN on either side is undecided
        if (report[from] == Verdict::yes && report[to] == Verdict::no)
            return std::string(to_string(from)) + " => " + std::string(to_string(to));
    }
    return {};
}

} // namespace expweight
