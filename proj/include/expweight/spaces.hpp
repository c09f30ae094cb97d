#pragma once

// The five concrete spaces: l2 sequences, Hermite, Korobov, cosine and Walsh.
// Basis and weighted-basis evaluation, reproducing kernels with certified
// tails, and the optimal algorithm A_n^* that keeps the n leading coefficients.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "expweight/params.hpp"
#include "expweight/spectrum.hpp"

namespace expweight {

using Scalar = std::complex<double>;

enum class SpaceTag { L2SEQ, HERMITE, KOROBOV, COSINE, WALSH };

struct SpaceKind {
    SpaceTag tag = SpaceTag::L2SEQ;
    unsigned walsh_base = 2; // WALSH only

    /// "l2seq", "hermite", "korobov", "cosine", "walsh" or "walsh:<base>".
    static SpaceKind parse(std::string_view name);
    std::string name() const;

    /// (1; tail 2) for KOROBOV, all ones otherwise.
    MultiplicitySpec multiplicity() const;
    /// Throws ParameterError when config.mult is not the kind's sequence.
    void check(const SpaceConfig& config) const;
};

/// e_n(x). For L2SEQ the point x is a sequence index.
Scalar basis_eval(const SpaceKind& kind, std::uint64_t n, double x);

/// wal_k at x = i / base^m, computed from exact integer digits.
Scalar walsh_eval_grid(unsigned base, std::uint64_t k, std::uint64_t i, unsigned m);

/// Upper bound on |e_n(x)| over all n.
double basis_envelope(const SpaceKind& kind, double x);

/// prod_j omega^{a_j k(n_j)^{b_j} / 2} e_{n_j}(x_j).
Scalar weighted_basis_eval(const SpaceKind& kind, const SpaceConfig& config, const MultiIndex& n,
                           const std::vector<double>& x);

/// Eigenvalue lambda of basis position n: omega^{sum_j a_j k(n_j)^{b_j}}.
double position_eigenvalue(const SpaceConfig& config, const MultiIndex& n);

enum class Basis { unweighted, weighted };

struct KernelValue {
    Scalar value;
    double tail_bound = 0.0; // |value - K(x,y)| <= tail_bound
    std::vector<std::uint64_t> levels; // truncation level per coordinate
};

/// K_{s,a,b}(x, y). Only the weighted kernels exist, except for L2SEQ.
KernelValue kernel_eval(const SpaceKind& kind, const SpaceConfig& config, const std::vector<double>& x,
                        const std::vector<double>& y, double tail_tol, Basis basis = Basis::weighted);

/// Finitely supported coefficients of f, either <f, e_n> (unweighted) or
/// <f, e_{n,a,b}>_H (weighted).
struct CoefficientVector {
    std::map<MultiIndex, Scalar> entries;
    Basis basis = Basis::weighted;
};

CoefficientVector to_weighted(const CoefficientVector& f, const SpaceConfig& config);
CoefficientVector to_unweighted(const CoefficientVector& f, const SpaceConfig& config);

/// Norm in the weighted space H_s.
double hs_norm(const CoefficientVector& f, const SpaceConfig& config);
/// Norm in the ambient L2 space, i.e. of APP_s f.
double l2_norm(const CoefficientVector& f, const SpaceConfig& config);

struct EigenPosition {
    MultiIndex n;
    double eigenvalue;
};

/// The first `count` basis positions in eigenvalue order; inside a level the
/// positions are ascending lexicographic.
std::vector<EigenPosition> leading_positions(const SpaceConfig& config, std::uint64_t count,
                                             std::uint64_t expansion_cap = 10'000'000);

struct ErrorCertificate {
    double worst_case_error = 1.0; // sqrt(eigen_cutoff)
    std::uint64_t n_used = 0;
    double eigen_cutoff = 1.0;     // lambda_{s, n_used + 1}
};

struct Truncation {
    CoefficientVector approximation;
    ErrorCertificate certificate;
};

/// A_n^* f: the coefficients of f on the n leading positions.
Truncation truncate_optimal(const SpaceConfig& config, const CoefficientVector& f, std::uint64_t n);

} // namespace expweight
