#include "gwalsh/transform.hpp"

#include <cmath>

namespace gwalsh {

TransformPlan::TransformPlan(const WalshMatrix& a, std::size_t p, Direction dir)
    : kernel_(dir == Direction::analysis ? a.matrix().conj() : a.matrix().transpose()),
      p_(p),
      dir_(dir),
      len_(pow_n(a.n(), p)) {
    if (p < 1) throw error("plan: resolution must be >= 1");
}

std::vector<cplx> TransformPlan::apply(const std::vector<cplx>& v) const {
    if (v.size() != len_) throw error("transform: signal length != N^p");
    const std::size_t n = kernel_.rows();
    const auto stage = kernels::active_stage_fn();
    std::vector<cplx> buf_a = v, buf_b(len_);
    const cplx* kdata = kernel_.data().data();
    // analysis runs stages k = p-1 .. 0, synthesis the reverse
    for (std::size_t s = 0; s < p_; ++s) {
        const std::size_t k = dir_ == Direction::analysis ? p_ - 1 - s : s;
        std::size_t block = 1;
        for (std::size_t t = 0; t < k; ++t) block *= n;
        const std::size_t outer = len_ / (block * n);
        stage(kdata, n, block, outer, buf_a.data(), buf_b.data());
        buf_a.swap(buf_b);
    }
    return buf_a;
}

TransformPlan plan(const WalshMatrix& a, std::size_t p, Direction dir) {
    return TransformPlan(a, p, dir);
}

std::vector<cplx> stage_apply(const ComplexMatrix& kernel, std::size_t k,
                              const std::vector<cplx>& v) {
    if (kernel.rows() != kernel.cols()) throw error("stage_apply: kernel not square");
    const std::size_t n = kernel.rows();
    std::size_t block = 1;
    for (std::size_t t = 0; t < k; ++t) block *= n;
    if (v.size() % (block * n) != 0)
        throw error("stage_apply: length is not a multiple of N^{k+1}");
    std::vector<cplx> out(v.size());
    kernels::active_stage_fn()(kernel.data().data(), n, block, v.size() / (block * n),
                               v.data(), out.data());
    return out;
}

std::vector<cplx> forward(const TransformPlan& pl, const GridSignal& f) {
    if (pl.direction() != Direction::analysis) throw error("forward: plan is not analysis");
    if (f.base != pl.n() || f.length() != pl.length())
        throw error("forward: signal does not match plan");
    return pl.apply(f.values);
}

GridSignal inverse(const TransformPlan& pl, const std::vector<cplx>& coeffs) {
    if (pl.direction() != Direction::synthesis) throw error("inverse: plan is not synthesis");
    return GridSignal{pl.n(), pl.resolution(), pl.apply(coeffs)};
}

std::vector<cplx> forward_naive(const WalshMatrix& a, std::size_t p, const GridSignal& f) {
    ComplexMatrix t = kron_power(a.matrix().conj(), p);
    return t.matvec(f.values);
}

std::vector<cplx> scale_to_l2(std::vector<cplx> coeffs, std::size_t n, std::size_t p) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(pow_n(n, p)));
    for (cplx& z : coeffs) z *= scale;
    return coeffs;
}

std::vector<cplx> change_basis(const WalshMatrix& a, const WalshMatrix& b, std::size_t p,
                               const std::vector<cplx>& coeffs_a) {
    if (a.n() != b.n()) throw error("change_basis: generators have different sizes");
    const std::size_t n = a.n();
    const std::size_t len = pow_n(n, p);
    if (coeffs_a.size() != len) throw error("change_basis: coefficient length != N^p");
    ComplexMatrix kernel = (b.matrix() * a.matrix().adjoint()).conj();
    std::vector<cplx> buf_a = coeffs_a, buf_b(len);
    const auto stage = kernels::active_stage_fn();
    std::size_t block = pow_n(n, p - 1);
    for (std::size_t s = 0; s < p; ++s) {
        stage(kernel.data().data(), n, block, len / (block * n), buf_a.data(), buf_b.data());
        buf_a.swap(buf_b);
        block /= n;
    }
    return buf_a;
}

std::size_t op_count(std::size_t n, std::size_t p) { return pow_n(n, p) * p * n; }

}  // namespace gwalsh
