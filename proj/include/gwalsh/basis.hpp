#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gwalsh/linalg.hpp"

namespace gwalsh {

/// Base-N digit word of fixed length, least significant digit first. Digit
/// word (n1,...,np) stands for n = n1 + N*n2 + ... + N^{p-1}*np.
struct DigitWord {
    std::size_t base = 2;
    std::vector<std::uint8_t> digits;

    std::size_t length() const { return digits.size(); }
    /// Most-significant-first rendering, for display.
    std::string to_string_msf() const;
};

DigitWord to_digits(std::size_t n, std::size_t base, std::size_t len);
std::size_t from_digits(const DigitWord& w);

/// N^p with overflow check against the explicit-size limit when `bounded`.
std::size_t pow_n(std::size_t base, std::size_t p);

/// Complex vector of length N^p. Index k corresponds to the grid cell whose
/// base-N digit word is the little-endian expansion of k: a point
/// x = x1/N + x2/N^2 + ... lives in the cell with index x1 + N*x2 + ... +
/// N^{p-1}*xp.
struct GridSignal {
    std::size_t base = 2;
    std::size_t resolution = 0;
    std::vector<cplx> values;

    std::size_t length() const { return values.size(); }
    /// Squared grid norm: sum |v_k|^2 / N^p, the discrete L^2[0,1] norm of the
    /// piecewise-constant function.
    double grid_norm_sq() const;
};

GridSignal make_signal(std::size_t base, std::size_t resolution, std::vector<cplx> values);

/// Cell index of a point x in [0,1) at resolution p, digit-word convention.
std::size_t cell_index(double x, std::size_t base, std::size_t p);

/// m_i(x) = sqrt(N) * a_{i, floor(N x)}.
cplx filter_value(const WalshMatrix& a, std::size_t i, double x);

/// Pointwise value W_n(x) = sqrt(N^p) * a_{n1 x1} ... a_{np xp}.
cplx walsh_eval(const WalshMatrix& a, std::size_t n, double x, std::size_t p);

/// Grid vector of W_n at resolution p: entry k = sqrt(N^p) * A^{tensor p}[n,k].
GridSignal walsh_grid_vector(const WalshMatrix& a, std::size_t n, std::size_t p);

/// Cuntz isometry at finite resolution: (S_i v)[x1 + N*w] = sqrt(N) * a_{i,x1} * v[w].
GridSignal apply_S(const WalshMatrix& a, std::size_t i, const GridSignal& v);

/// Adjoint: (S_i^* v)[w] = (1/sqrt(N)) * sum_{x1} conj(a_{i,x1}) * v[x1 + N*w].
GridSignal apply_S_adjoint(const WalshMatrix& a, std::size_t i, const GridSignal& v);

}  // namespace gwalsh
