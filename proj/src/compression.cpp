#include "gwalsh/compression.hpp"

#include <algorithm>
#include <cmath>

#include "gwalsh/transform.hpp"

namespace gwalsh {

OrthogonalTransform matrix_transform(std::string name, const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw error("matrix_transform: matrix not square");
    OrthogonalTransform t;
    t.name = std::move(name);
    t.size = m.rows();
    ComplexMatrix inv = m.adjoint();
    t.apply = [m](const std::vector<cplx>& v) { return m.matvec(v); };
    t.invert = [inv](const std::vector<cplx>& v) { return inv.matvec(v); };
    return t;
}

OrthogonalTransform walsh_transform(std::string name, const WalshMatrix& a, std::size_t p) {
    OrthogonalTransform t;
    t.name = std::move(name);
    t.size = pow_n(a.n(), p);
    const auto ana = plan(a, p, Direction::analysis);
    const auto syn = plan(a, p, Direction::synthesis);
    t.apply = [ana](const std::vector<cplx>& v) { return ana.apply(v); };
    t.invert = [syn](const std::vector<cplx>& v) { return syn.apply(v); };
    return t;
}

std::vector<VariancePoint> variance_curve(const std::vector<cplx>& y) {
    double total = 0.0;
    for (const cplx& z : y) total += std::norm(z);
    if (total == 0.0) throw error("variance_curve: zero signal");
    std::vector<VariancePoint> curve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        curve[i] = {i, std::norm(y[i]) / total};
    std::stable_sort(curve.begin(), curve.end(),
                     [](const VariancePoint& a, const VariancePoint& b) {
                         return a.normalized_variance > b.normalized_variance;
                     });
    return curve;
}

CompressionReport compress(const OrthogonalTransform& t, const std::vector<double>& x,
                           std::size_t m, double orthogonality_tol) {
    if (x.size() != t.size) throw error("compress: signal length != transform size");
    if (m < 1 || m > x.size()) throw error("compress: kept count out of range");
    std::vector<cplx> xc(x.begin(), x.end());
    std::vector<cplx> y = t.apply(xc);

    double nx = 0.0, ny = 0.0;
    for (double v : x) nx += v * v;
    for (const cplx& z : y) ny += std::norm(z);
    if (std::abs(std::sqrt(ny) - std::sqrt(nx)) > orthogonality_tol * std::max(1.0, std::sqrt(nx)))
        throw error("compress: transform is not orthogonal on this signal (||Tx|| deviates by " +
                    std::to_string(std::abs(std::sqrt(ny) - std::sqrt(nx))) + ")");

    CompressionReport rep;
    rep.transform_name = t.name;
    rep.kept = m;
    rep.curve = variance_curve(y);
    rep.kept_indices.reserve(m);
    std::vector<cplx> y_kept(y.size(), 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t idx = rep.curve[k].component;
        rep.kept_indices.push_back(idx);
        y_kept[idx] = y[idx];
    }
    std::vector<cplx> xr = t.invert(y_kept);
    double imag_residue = 0.0;
    rep.reconstruction.resize(x.size());
    rep.error = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        imag_residue = std::max(imag_residue, std::abs(xr[i].imag()));
        rep.reconstruction[i] = xr[i].real();
        const double d = x[i] - rep.reconstruction[i];
        rep.error += d * d;
    }
    if (imag_residue > 1e-9 * std::max(1.0, std::sqrt(nx)))
        throw error("compress: reconstruction has imaginary residue " +
                    std::to_string(imag_residue));
    return rep;
}

OrthogonalTransform kl_transform(const std::vector<double>& x) {
    const std::size_t n = x.size();
    double norm_x = 0.0;
    for (double v : x) norm_x += v * v;
    norm_x = std::sqrt(norm_x);
    if (norm_x == 0.0) throw error("kl_transform: zero signal");

    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    std::vector<double> first(n);
    for (std::size_t i = 0; i < n; ++i) first[i] = x[i] / norm_x;
    rows.push_back(std::move(first));
    for (std::size_t e = 0; e < n && rows.size() < n; ++e) {
        std::vector<double> v(n, 0.0);
        v[e] = 1.0;
        for (const auto& r : rows) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += r[i] * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * r[i];
        }
        double nv = 0.0;
        for (double c : v) nv += c * c;
        nv = std::sqrt(nv);
        if (nv <= 1e-8) continue;  // near-parallel to the span so far
        for (double& c : v) c /= nv;
        rows.push_back(std::move(v));
    }
    if (rows.size() != n) throw error("kl_transform: completion failed");

    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return matrix_transform("kl", m);
}

ComplexMatrix dct_matrix(std::size_t n) {
    if (n < 1) throw error("dct_matrix: n must be >= 1");
    ComplexMatrix m(n, n);
    const double c0 = std::sqrt(1.0 / static_cast<double>(n));
    const double ck = std::sqrt(2.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            m.at(k, j) = (k == 0 ? c0 : ck) *
                         std::cos(M_PI * (2.0 * j + 1.0) * k / (2.0 * n));
    return m;
}

std::vector<double> high_variation_signal(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double fi = static_cast<double>(i);
        x[i - 1] = (i % 9 == 0) ? fi / (3.0 * fi + 1.0) : fi / (fi + 1.0);
    }
    return x;
}

}  // namespace gwalsh
