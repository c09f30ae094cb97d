#include "expweight/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "expweight/bounds.hpp"

namespace expweight {

namespace {

constexpr double kPi = std::numbers::pi;

Scalar root_of_unity(std::uint64_t p, unsigned base)
{
    p %= base;
    if (p == 0)
        return 1.0;
    if (2 * p == base)
        return -1.0;
    if (4 * p == base)
        return {0.0, 1.0};
    if (4 * p == 3 * base)
        return {0.0, -1.0};
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(p) / base);
}

void require_unit_interval(double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw ParameterError("point must lie in [0,1]");
}

std::uint64_t as_sequence_index(double x)
{
    if (!(x >= 0) || x != std::floor(x) || x > 9.0e15)
        throw ParameterError("l2 sequence points must be nonnegative integers");
    return static_cast<std::uint64_t>(x);
}

// e_0(x), ..., e_{N-1}(x)
std::vector<Scalar> basis_values(const SpaceKind& kind, std::uint64_t N, double x)
{
    std::vector<Scalar> v(N);
    if (kind.tag == SpaceTag::HERMITE) {
        double prev = 0.0, cur = 1.0;
        for (std::uint64_t k = 0; k < N; ++k) {
            v[k] = cur;
            const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) /
                                std::sqrt(static_cast<double>(k + 1));
            prev = cur;
            cur = next;
        }
        return v;
    }
    for (std::uint64_t k = 0; k < N; ++k)
        v[k] = basis_eval(kind, k, x);
    return v;
}

} // namespace

SpaceKind SpaceKind::parse(std::string_view name)
{
    SpaceKind kind;
    if (name == "l2seq")
        kind.tag = SpaceTag::L2SEQ;
    else if (name == "hermite")
        kind.tag = SpaceTag::HERMITE;
    else if (name == "korobov")
        kind.tag = SpaceTag::KOROBOV;
    else if (name == "cosine")
        kind.tag = SpaceTag::COSINE;
    else if (name == "walsh")
        kind.tag = SpaceTag::WALSH;
    else if (name.starts_with("walsh:")) {
        kind.tag = SpaceTag::WALSH;
        const std::string digits(name.substr(6));
        try {
            const long base = std::stol(digits);
            if (base < 2 || base > 1 << 16)
                throw ParameterError("Walsh base must be >= 2");
            kind.walsh_base = static_cast<unsigned>(base);
        } catch (const std::logic_error&) {
            throw ParameterError("bad Walsh base '" + digits + "'");
        }
    } else {
        throw ParameterError("unknown space kind '" + std::string(name) + "'");
    }
    return kind;
}

std::string SpaceKind::name() const
{
    switch (tag) {
    case SpaceTag::L2SEQ: return "l2seq";
    case SpaceTag::HERMITE: return "hermite";
    case SpaceTag::KOROBOV: return "korobov";
    case SpaceTag::COSINE: return "cosine";
    case SpaceTag::WALSH: return "walsh:" + std::to_string(walsh_base);
    }
    return "?";
}

MultiplicitySpec SpaceKind::multiplicity() const
{
    return tag == SpaceTag::KOROBOV ? MultiplicitySpec::korobov() : MultiplicitySpec::ones();
}

void SpaceKind::check(const SpaceConfig& config) const
{
    if (tag == SpaceTag::WALSH && walsh_base < 2)
        throw ParameterError("Walsh base must be >= 2");
    const MultiplicitySpec want = multiplicity();
    for (std::uint64_t k = 0; k <= std::max<std::size_t>(config.mult.prefix().size(), 2); ++k)
        if (config.mult.at(k) != want.at(k))
            throw ParameterError("space " + name() + " requires its own multiplicity sequence");
    if (config.mult.tail() != want.tail())
        throw ParameterError("space " + name() + " requires its own multiplicity sequence");
}

Scalar basis_eval(const SpaceKind& kind, std::uint64_t n, double x)
{
    switch (kind.tag) {
    case SpaceTag::L2SEQ:
        return as_sequence_index(x) == n ? 1.0 : 0.0;
    case SpaceTag::HERMITE:
        if (!std::isfinite(x))
            throw ParameterError("Hermite point must be finite");
        return basis_values(kind, n + 1, x)[n];
    case SpaceTag::KOROBOV: {
        require_unit_interval(x);
        // n = 2h - 1 -> +h, n = 2h -> -h
        const double h = n == 0 ? 0.0 : (n % 2 == 1 ? 1.0 : -1.0) * static_cast<double>((n + 1) / 2);
        const double t = h * x - std::floor(h * x);
        return std::polar(1.0, 2.0 * kPi * t);
    }
    case SpaceTag::COSINE:
        require_unit_interval(x);
        return n == 0 ? 1.0 : std::sqrt(2.0) * std::cos(kPi * static_cast<double>(n) * x);
    case SpaceTag::WALSH: {
        require_unit_interval(x);
        const unsigned base = kind.walsh_base;
        if (x == 1.0)
            return 1.0;
        std::uint64_t phase = 0;
        double y = x;
        for (std::uint64_t k = n; k != 0; k /= base) {
            y *= base;
            const double digit = std::floor(y);
            y -= digit;
            phase += (k % base) * static_cast<std::uint64_t>(digit);
        }
        return root_of_unity(phase, base);
    }
    }
    throw ParameterError("unknown space kind");
}

Scalar walsh_eval_grid(unsigned base, std::uint64_t k, std::uint64_t i, unsigned m)
{
    if (base < 2)
        throw ParameterError("Walsh base must be >= 2");
    std::uint64_t denom = 1;
    for (unsigned t = 0; t < m; ++t)
        denom *= base;
    if (i > denom)
        throw ParameterError("grid point outside [0,1]");
    if (i == denom)
        return 1.0;
    // xi_t = t-th digit of i / base^m after the point
    std::uint64_t phase = 0;
    std::uint64_t place = denom;
    for (std::uint64_t kk = k; kk != 0 && place > 1; kk /= base) {
        place /= base;
        phase += (kk % base) * ((i / place) % base);
    }
    return root_of_unity(phase, base);
}

double basis_envelope(const SpaceKind& kind, double x)
{
    switch (kind.tag) {
    case SpaceTag::COSINE:
        return std::sqrt(2.0);
    case SpaceTag::HERMITE:
        // Cramer's inequality
        return std::pow(2.0 * kPi, 0.25) * std::exp(x * x / 4.0);
    default:
        return 1.0;
    }
}

double position_eigenvalue(const SpaceConfig& config, const MultiIndex& n)
{
    if (n.size() != config.s)
        throw ParameterError("position length does not match dimension");
    MultiIndex k(n.size());
    for (std::size_t j = 0; j < n.size(); ++j)
        k[j] = config.mult.level_of(n[j]);
    return eigenvalue(config, k);
}

Scalar weighted_basis_eval(const SpaceKind& kind, const SpaceConfig& config, const MultiIndex& n,
                           const std::vector<double>& x)
{
    kind.check(config);
    if (n.size() != config.s || x.size() != config.s)
        throw ParameterError("index and point must have length s");
    Scalar v = std::sqrt(position_eigenvalue(config, n));
    for (std::size_t j = 0; j < n.size(); ++j)
        v *= basis_eval(kind, n[j], x[j]);
    return v;
}

namespace {

struct Factor {
    Scalar value;
    double tail;
    std::uint64_t levels;
};

// sum over levels k < K of omega^{a k^b} sum_{i in level k} e_i(x) conj(e_i(y))
Factor kernel_factor(const SpaceKind& kind, const SpaceConfig& config, std::size_t j, double x, double y,
                     double delta)
{
    const auto& m = config.mult;
    const double a = config.weights.a(j);
    const double b = config.weights.b(j);
    const double rate = a * config.log_inv_omega();
    const double env = basis_envelope(kind, x) * basis_envelope(kind, y) * static_cast<double>(m.max_positive());
    if (!std::isfinite(env))
        throw ParameterError("point too far out for the kernel envelope");

    std::uint64_t K = 1;
    while (env * exp_power_tail(rate, b, K) > delta) {
        K *= 2;
        if (K > 1'000'000)
            throw ResourceLimit("kernel tail tolerance unreachable within the level cap");
    }
    // shrink back to the smallest sufficient K
    std::uint64_t lo = K / 2 + 1, hi = K;
    while (K > 1 && lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (env * exp_power_tail(rate, b, mid) <= delta)
            hi = mid;
        else
            lo = mid + 1;
    }
    if (K > 1)
        K = hi;

    const std::uint64_t N = m.prefix_count(K);
    const auto ex = basis_values(kind, N, x);
    const auto ey = basis_values(kind, N, y);
    Scalar sum = 0.0;
    for (std::uint64_t k = K; k-- > 0;) {
        const double w = k == 0 ? 1.0 : std::exp(-rate * std::pow(static_cast<double>(k), b));
        Scalar level = 0.0;
        for (std::uint64_t i = m.prefix_count(k); i < m.prefix_count(k + 1); ++i)
            level += ex[i] * std::conj(ey[i]);
        sum += w * level;
    }
    return {sum, env * exp_power_tail(rate, b, K), K};
}

} // namespace

KernelValue kernel_eval(const SpaceKind& kind, const SpaceConfig& config, const std::vector<double>& x,
                        const std::vector<double>& y, double tail_tol, Basis basis)
{
    kind.check(config);
    if (x.size() != config.s || y.size() != config.s)
        throw ParameterError("kernel points must have length s");
    if (!(tail_tol > 0))
        throw ParameterError("tail tolerance must be positive");

    KernelValue out;
    if (kind.tag == SpaceTag::L2SEQ) {
        // delta kernel, weighted by lambda at the shared position
        MultiIndex n(config.s);
        out.value = 1.0;
        for (std::size_t j = 0; j < config.s; ++j) {
            n[j] = as_sequence_index(x[j]);
            if (n[j] != as_sequence_index(y[j]))
                out.value = 0.0;
        }
        if (basis == Basis::weighted && out.value != 0.0)
            out.value = position_eigenvalue(config, n);
        out.levels.assign(config.s, 0);
        return out;
    }
    if (basis == Basis::unweighted)
        throw ParameterError("the unweighted " + kind.name() + " space has no reproducing kernel");

    double delta = tail_tol / static_cast<double>(config.s);
    for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<Factor> factors;
        factors.reserve(config.s);
        for (std::size_t j = 1; j <= config.s; ++j)
            factors.push_back(kernel_factor(kind, config, j, x[j - 1], y[j - 1], delta));
        // |prod (F_j + e_j) - prod F_j| <= prod (|F_j| + t_j) - prod |F_j|
        double with_tail = 1.0, without = 1.0;
        Scalar value = 1.0;
        for (const auto& f : factors) {
            with_tail *= std::abs(f.value) + f.tail;
            without *= std::abs(f.value);
            value *= f.value;
        }
        const double error = with_tail - without + 1e-15 * with_tail;
        if (error <= tail_tol) {
            out.value = value;
            out.tail_bound = error;
            for (const auto& f : factors)
                out.levels.push_back(f.levels);
            return out;
        }
        delta /= 4.0;
    }
    throw ResourceLimit("kernel tail tolerance unreachable");
}

CoefficientVector to_weighted(const CoefficientVector& f, const SpaceConfig& config)
{
    if (f.basis == Basis::weighted)
        return f;
    CoefficientVector g;
    g.basis = Basis::weighted;
    for (const auto& [n, u] : f.entries)
        g.entries[n] = u / std::sqrt(position_eigenvalue(config, n));
    return g;
}

CoefficientVector to_unweighted(const CoefficientVector& f, const SpaceConfig& config)
{
    if (f.basis == Basis::unweighted)
        return f;
    CoefficientVector g;
    g.basis = Basis::unweighted;
    for (const auto& [n, c] : f.entries)
        g.entries[n] = c * std::sqrt(position_eigenvalue(config, n));
    return g;
}

double hs_norm(const CoefficientVector& f, const SpaceConfig& config)
{
    double sum = 0.0;
    for (const auto& [n, c] : to_weighted(f, config).entries)
        sum += std::norm(c);
    return std::sqrt(sum);
}

double l2_norm(const CoefficientVector& f, const SpaceConfig& config)
{
    double sum = 0.0;
    for (const auto& [n, u] : to_unweighted(f, config).entries)
        sum += std::norm(u);
    return std::sqrt(sum);
}

std::vector<EigenPosition> leading_positions(const SpaceConfig& config, std::uint64_t count,
                                             std::uint64_t expansion_cap)
{
    std::vector<EigenPosition> out;
    if (count == 0)
        return out;
    const auto& m = config.mult;
    EigenStream stream(config);
    while (out.size() < count) {
        const EigenEntry level = stream.next();
        if (level.count > expansion_cap)
            throw ResourceLimit("eigenvalue level too large to expand into positions");
        std::vector<MultiIndex> positions;
        for (const auto& k : level.members) {
            // cartesian product of [r_{k_j}, r_{k_j + 1})
            MultiIndex n(k.size());
            for (std::size_t j = 0; j < k.size(); ++j)
                n[j] = m.prefix_count(k[j]);
            while (true) {
                positions.push_back(n);
                std::size_t j = k.size();
                while (j-- > 0) {
                    if (++n[j] < m.prefix_count(k[j] + 1))
                        break;
                    n[j] = m.prefix_count(k[j]);
                }
                if (j == static_cast<std::size_t>(-1))
                    break;
            }
        }
        std::sort(positions.begin(), positions.end());
        for (auto& n : positions) {
            if (out.size() == count)
                break;
            out.push_back({std::move(n), level.eigenvalue});
        }
    }
    return out;
}

Truncation truncate_optimal(const SpaceConfig& config, const CoefficientVector& f, std::uint64_t n)
{
    const auto positions = leading_positions(config, n + 1);
    std::set<MultiIndex> kept;
    for (std::uint64_t i = 0; i < n; ++i)
        kept.insert(positions[i].n);

    Truncation t;
    t.approximation.basis = Basis::weighted;
    for (const auto& [idx, c] : to_weighted(f, config).entries)
        if (kept.count(idx))
            t.approximation.entries.emplace(idx, c);
    t.certificate.n_used = n;
    t.certificate.eigen_cutoff = positions[n].eigenvalue;
    t.certificate.worst_case_error = std::sqrt(positions[n].eigenvalue);
    return t;
}

} // namespace expweight
