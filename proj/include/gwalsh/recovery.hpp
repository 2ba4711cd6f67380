#pragma once

#include <cstddef>
#include <vector>

#include "gwalsh/basis.hpp"
#include "gwalsh/linalg.hpp"
#include "gwalsh/uncertainty.hpp"

namespace gwalsh {

/// Transform coefficients with a subset of frequencies erased. coeffs holds
/// the observed analysis transform, zero outside the observed set.
struct PuncturedSpectrum {
    std::vector<cplx> coeffs;
    std::vector<std::size_t> observed;  // sorted index set B
    std::size_t nf = 0;                 // declared upper bound on |supp f|
    ComplexMatrix generator;            // the validated N x N matrix
    double generator_tol = kDefaultTol;
    std::size_t resolution = 0;

    std::size_t missing() const;  // N_w = N^p - |B|
};

/// Forward-transform f, erase the given coefficient indices, record the rest.
PuncturedSpectrum puncture(const WalshMatrix& a, std::size_t p, const GridSignal& f,
                           const std::vector<std::size_t>& erase);

/// The recovery precondition 2 * N_f * N_w < N^{p alpha}.
bool uniqueness_ok(std::size_t nf, std::size_t nw, const UncertaintyProfile& profile,
                   std::size_t p);

struct RecoveryResult {
    GridSignal signal;
    double residual = 0.0;
    bool unique = false;
};

inline constexpr std::size_t kRecoveryBruteForceLimit = 64;

/// Sparsity-constrained recovery: enumerate supports S with |S| <= nf, solve
/// the observed constraints (conj(A)^{tensor p})[B,S] v = coeffs[B] by least
/// squares, and return the global minimizer. The minimizer reported on a tie
/// is the one with the lexicographically smallest support; the unique flag is
/// cleared when a tied support yields a genuinely different signal.
RecoveryResult recover(const PuncturedSpectrum& ps, double tol = 1e-7);

}  // namespace gwalsh
