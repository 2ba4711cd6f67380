#pragma once

#include <cstddef>
#include <vector>

#include "gwalsh/basis.hpp"
#include "gwalsh/linalg.hpp"

namespace gwalsh {

/// Indices whose moduli exceed the threshold, sorted ascending.
struct SupportSet {
    std::vector<std::size_t> indices;
    double tol = 0.0;

    std::size_t size() const { return indices.size(); }
};

/// Default threshold 1e-9 * ||v||_inf: zeros of a transform arise from exact
/// cancellation and sit many orders below entry scale.
SupportSet support(const std::vector<cplx>& v, double tol = -1.0);

/// alpha = min(1, -2 log_N max|a_ij|); alpha = 1 iff sqrt(N)*A is Hadamard.
struct UncertaintyProfile {
    std::size_t n = 0;
    double alpha = 0.0;
    double max_entry = 0.0;
    bool hadamard = false;

    /// Uncertainty lower bound N^{p*alpha} for tensor power p.
    double bound(std::size_t p) const;
};

UncertaintyProfile alpha_of(const WalshMatrix& a);

struct UncertaintyReport {
    std::size_t supp_f = 0;
    std::size_t supp_tf = 0;
    std::size_t product = 0;
    double bound = 0.0;
    bool holds = false;
};

/// Verify |supp f| * |supp Tf| >= N^{p alpha} with Tf the analysis transform.
UncertaintyReport check_uncertainty(const WalshMatrix& a, std::size_t p,
                                    const GridSignal& f, double tol = -1.0);

/// Exact uncertainty constant min_{f != 0} |supp f| * |supp Af|, via the
/// subset-kernel search: a support pair (S, T) is feasible iff the submatrix
/// A[T^c, S] has a nontrivial kernel. Pairs are scanned in increasing product
/// order, ties broken lexicographically on (|S|*|T|, S, T).
struct MuResult {
    std::size_t mu = 0;
    std::vector<std::size_t> witness_signal_support;
    std::vector<std::size_t> witness_transform_support;
};

inline constexpr std::size_t kMuBruteForceLimit = 12;

MuResult mu_bruteforce(const ComplexMatrix& m, double tol = 1e-8);

struct MuBounds {
    double lower = 0.0;  // 1/M^{2p}
    double upper = 0.0;  // mu(A)^p
};

MuBounds mu_bounds(const WalshMatrix& a, std::size_t p);

/// Exhaustive check of the Hadamard minor-rank property: with N1*N2 < N and
/// n = N - N2, every n x N1 submatrix of sqrt(N)*A has rank N1.
bool hadamard_minor_rank(const WalshMatrix& a, std::size_t n1, std::size_t n2);

}  // namespace gwalsh
