#include "gwalsh/linalg.hpp"

#include <cmath>
#include <utility>

namespace gwalsh {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw error("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                    " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::adjoint() const { return transpose().conj(); }

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("matrix product: inner dimensions differ");
    ComplexMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = at(i, k);
            for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

std::vector<cplx> ComplexMatrix::matvec(const std::vector<cplx>& v) const {
    if (v.size() != cols_) throw error("matvec: length mismatch");
    std::vector<cplx> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx acc = 0.0;
        const cplx* row = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
        r[i] = acc;
    }
    return r;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::unitary_error() const {
    if (rows_ != cols_) throw error("unitary_error: matrix not square");
    ComplexMatrix g = *this * adjoint();
    double dev = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            cplx d = g.at(i, j) - (i == j ? cplx(1.0) : cplx(0.0));
            dev = std::max(dev, std::abs(d));
        }
    return dev;
}

ComplexMatrix ComplexMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                       const std::vector<std::size_t>& col_idx) const {
    ComplexMatrix r(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            r.at(i, j) = at(row_idx[i], col_idx[j]);
    return r;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxExplicitRows)
        throw error("kron: result would have " + std::to_string(rows) + " rows (limit " +
                    std::to_string(kMaxExplicitRows) + ")");
    ComplexMatrix r(rows, cols);
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
            const cplx bij = b.at(i2, j2);
            for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
                for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
                    r.at(i1 + a.rows() * i2, j1 + a.cols() * j2) = a.at(i1, j1) * bij;
        }
    return r;
}

ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t p) {
    if (p < 1) throw error("kron_power: p must be >= 1");
    ComplexMatrix r = a;
    for (std::size_t k = 1; k < p; ++k) r = kron(a, r);
    return r;
}

std::size_t numerical_rank(const ComplexMatrix& m, double tol) {
    ComplexMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::size_t rank = 0;
    double largest_pivot = 0.0;
    std::vector<double> pivots;
    std::size_t r = 0;
    for (std::size_t step = 0; step < cols && r < rows; ++step) {
        // full pivot search over the remaining block
        std::size_t pi = r, pj = 0;
        double pmag = 0.0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                double mag = std::abs(w.at(i, j));
                if (mag > pmag) { pmag = mag; pi = i; pj = j; }
            }
        if (pmag == 0.0) break;
        pivots.push_back(pmag);
        largest_pivot = std::max(largest_pivot, pmag);
        if (pi != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(pi, j), w.at(r, j));
        const cplx piv = w.at(r, pj);
        for (std::size_t i = r + 1; i < rows; ++i) {
            cplx factor = w.at(i, pj) / piv;
            for (std::size_t j = 0; j < cols; ++j) w.at(i, j) -= factor * w.at(r, j);
            w.at(i, pj) = 0.0;
        }
        for (std::size_t j = 0; j < cols; ++j) w.at(r, j) = 0.0;  // retire the row
        ++r;
    }
    for (double pv : pivots)
        if (pv > tol * largest_pivot) ++rank;
    return rank;
}

WalshMatrix validate_walsh(const ComplexMatrix& matrix, double tol) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 2)
        throw validation_error(validation_error::kind::not_square,
                              "validate_walsh: need a square matrix with N >= 2, got " +
                                  std::to_string(matrix.rows()) + "x" +
                                  std::to_string(matrix.cols()));
    if (!matrix.all_finite())
        throw validation_error(validation_error::kind::not_square,
                              "validate_walsh: matrix has non-finite entries");
    const std::size_t n = matrix.rows();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    double row_dev = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        row_dev = std::max(row_dev, std::abs(matrix.at(0, j) - cplx(inv_sqrt_n)));
    if (row_dev > tol)
        throw validation_error(validation_error::kind::first_row_not_constant,
                              "validate_walsh: first row deviates from 1/sqrt(N) by " +
                                  std::to_string(row_dev),
                              row_dev);
    double udev = matrix.unitary_error();
    if (udev > tol)
        throw validation_error(validation_error::kind::not_unitary,
                              "validate_walsh: ||A A* - I||_max = " + std::to_string(udev),
                              udev);
    return WalshMatrix(matrix, tol);
}

bool is_hadamard_scaled(const WalshMatrix& a, double tol) {
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(a.n()));
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            if (std::abs(std::abs(a.at(i, j)) - inv_sqrt_n) > tol) return false;
    return true;
}

}  // namespace gwalsh
