#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwalsh {

using cplx = std::complex<double>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix conj() const;
    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    std::vector<cplx> matvec(const std::vector<cplx>& v) const;

    /// Largest entry modulus.
    double max_abs() const;
    /// max_{ij} |(this * this^* - I)_{ij}|; requires square.
    double unitary_error() const;
    /// Submatrix with the given row/column index lists.
    ComplexMatrix submatrix(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const;

    bool all_finite() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

// Explicit tensor-power matrices are a test oracle only; the fast path has no
// such limit.
inline constexpr std::size_t kMaxExplicitRows = 4096;

/// Tensor product with index split (i1 + a.rows*i2, j1 + a.cols*j2) ->
/// a[i1,j1] * b[i2,j2]: the first factor varies along the least significant
/// digit.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Left-associated p-fold tensor power, p >= 1.
ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t p);

/// Pivot count of column-pivoted elimination with threshold tol * largest
/// pivot.
std::size_t numerical_rank(const ComplexMatrix& m, double tol);

inline constexpr double kDefaultTol = 1e-10;

/// N x N unitary matrix whose first row is constant 1/sqrt(N); the generator
/// of a generalized Walsh basis.
class WalshMatrix {
public:
    std::size_t n() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double tol() const { return tol_; }

    const cplx& at(std::size_t i, std::size_t j) const { return matrix_.at(i, j); }

private:
    friend WalshMatrix validate_walsh(const ComplexMatrix&, double);
    WalshMatrix(ComplexMatrix m, double tol) : matrix_(std::move(m)), tol_(tol) {}
    ComplexMatrix matrix_;
    double tol_;
};

struct validation_error : error {
    enum class kind { not_square, first_row_not_constant, not_unitary };
    validation_error(kind k, const std::string& msg, double deviation = 0.0)
        : error(msg), k(k), deviation(deviation) {}
    kind k;
    double deviation;
};

WalshMatrix validate_walsh(const ComplexMatrix& matrix, double tol = kDefaultTol);

/// True iff every entry has modulus 1/sqrt(N) within tol, i.e. sqrt(N)*A is
/// Hadamard.
bool is_hadamard_scaled(const WalshMatrix& a, double tol = kDefaultTol);

}  // namespace gwalsh
