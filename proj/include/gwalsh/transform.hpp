#pragma once

#include <cstddef>
#include <vector>

#include "gwalsh/basis.hpp"
#include "gwalsh/kernels.hpp"
#include "gwalsh/linalg.hpp"

namespace gwalsh {

enum class Direction { analysis, synthesis };

/// Precomputed p-stage factorized transform for a fixed generator. The only
/// cached state is the N x N stage kernel: conj(A) for analysis, A^T for
/// synthesis. Stage k acts as I_{N^k} (x) kernel (x) I_{N^{p-1-k}}.
class TransformPlan {
public:
    TransformPlan(const WalshMatrix& a, std::size_t p, Direction dir);

    std::size_t n() const { return kernel_.rows(); }
    std::size_t resolution() const { return p_; }
    Direction direction() const { return dir_; }
    const ComplexMatrix& kernel() const { return kernel_; }
    std::size_t length() const { return len_; }

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

private:
    ComplexMatrix kernel_;
    std::size_t p_;
    Direction dir_;
    std::size_t len_;
};

TransformPlan plan(const WalshMatrix& a, std::size_t p, Direction dir);

/// One factor I_{N^k} (x) kernel (x) I_{N^{p-1-k}} applied to a vector of
/// length N^p (p inferred from v.size()).
std::vector<cplx> stage_apply(const ComplexMatrix& kernel, std::size_t k,
                              const std::vector<cplx>& v);

/// Unitary analysis transform: conj(A)^{tensor p} * f.
std::vector<cplx> forward(const TransformPlan& pl, const GridSignal& f);

/// Inverse of forward: applies (A^T)^{tensor p}.
GridSignal inverse(const TransformPlan& pl, const std::vector<cplx>& coeffs);

/// Dense-matrix oracle for forward, limited to N^p <= kMaxExplicitRows.
std::vector<cplx> forward_naive(const WalshMatrix& a, std::size_t p, const GridSignal& f);

/// Rescale unitary-convention coefficients to genuine L^2[0,1] inner products
/// <f, W_n> (multiplies by N^{-p/2}).
std::vector<cplx> scale_to_l2(std::vector<cplx> coeffs, std::size_t n, std::size_t p);

/// Map A-basis coefficients to B-basis coefficients via the per-stage kernel
/// conj(B A^*).
std::vector<cplx> change_basis(const WalshMatrix& a, const WalshMatrix& b, std::size_t p,
                               const std::vector<cplx>& coeffs_a);

/// Operation count of the factorized transform: N^p * p * N.
std::size_t op_count(std::size_t n, std::size_t p);

}  // namespace gwalsh
