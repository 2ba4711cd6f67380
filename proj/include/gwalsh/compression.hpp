#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gwalsh/linalg.hpp"

namespace gwalsh {

/// An invertible length-preserving map packaged for the compression harness.
struct OrthogonalTransform {
    std::string name;
    std::size_t size = 0;
    std::function<std::vector<cplx>(const std::vector<cplx>&)> apply;
    std::function<std::vector<cplx>(const std::vector<cplx>&)> invert;
};

/// Dense matrix transform (inverse = adjoint).
OrthogonalTransform matrix_transform(std::string name, const ComplexMatrix& m);

/// Fast generalized Walsh transform of a validated generator at resolution p.
OrthogonalTransform walsh_transform(std::string name, const WalshMatrix& a, std::size_t p);

struct VariancePoint {
    std::size_t component = 0;       // original coefficient index
    double normalized_variance = 0;  // |y_i|^2 / sum_j |y_j|^2
};

/// Squared coefficient magnitudes normalized by total energy, sorted
/// descending, ties by lower index.
std::vector<VariancePoint> variance_curve(const std::vector<cplx>& y);

struct CompressionReport {
    std::string transform_name;
    std::size_t kept = 0;
    std::vector<std::size_t> kept_indices;      // the m highest-variance components
    std::vector<VariancePoint> curve;           // full sorted variance distribution
    double error = 0.0;                         // ||x - x_reconstructed||^2
    std::vector<double> reconstruction;         // real part of the inverse
};

/// Keep the m highest-variance components of Tx, zero the rest, reconstruct.
/// `orthogonality_tol` bounds | ||Tx|| - ||x|| |; pass a looser value for
/// approximately-unitary generators.
CompressionReport compress(const OrthogonalTransform& t, const std::vector<double>& x,
                           std::size_t m, double orthogonality_tol = 1e-8);

/// Rank-one Karhunen-Loeve transform of a fixed signal: first row x/||x||,
/// completed to an orthonormal set by Gram-Schmidt over the standard basis.
OrthogonalTransform kl_transform(const std::vector<double>& x);

/// Orthonormal DCT-II matrix: row k, col j = c_k cos(pi (2j+1) k / (2n)).
ComplexMatrix dct_matrix(std::size_t n);

/// The length-n test signal with values i/(3i+1) when 9 | i and i/(i+1)
/// otherwise, i = 1..n.
std::vector<double> high_variation_signal(std::size_t n);

}  // namespace gwalsh
