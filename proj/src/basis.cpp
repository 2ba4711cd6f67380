#include "gwalsh/basis.hpp"

#include <cmath>

namespace gwalsh {

std::string DigitWord::to_string_msf() const {
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (!s.empty()) s += '.';
        s += std::to_string(static_cast<unsigned>(*it));
    }
    return s;
}

std::size_t pow_n(std::size_t base, std::size_t p) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < p; ++k) {
        if (r > (std::size_t{1} << 40) / base) throw error("pow_n: N^p overflows the supported range");
        r *= base;
    }
    return r;
}

DigitWord to_digits(std::size_t n, std::size_t base, std::size_t len) {
    if (base < 2) throw error("to_digits: base must be >= 2");
    const std::size_t limit = pow_n(base, len);
    if (n >= limit)
        throw error("to_digits: " + std::to_string(n) + " out of range for " +
                    std::to_string(len) + " base-" + std::to_string(base) + " digits");
    DigitWord w;
    w.base = base;
    w.digits.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
        w.digits[k] = static_cast<std::uint8_t>(n % base);
        n /= base;
    }
    return w;
}

std::size_t from_digits(const DigitWord& w) {
    std::size_t n = 0;
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
        if (*it >= w.base) throw error("from_digits: digit out of range");
        n = n * w.base + *it;
    }
    return n;
}

double GridSignal::grid_norm_sq() const {
    double s = 0.0;
    for (const cplx& z : values) s += std::norm(z);
    return s / static_cast<double>(pow_n(base, resolution));
}

GridSignal make_signal(std::size_t base, std::size_t resolution, std::vector<cplx> values) {
    if (values.size() != pow_n(base, resolution))
        throw error("make_signal: length " + std::to_string(values.size()) +
                    " != N^p = " + std::to_string(pow_n(base, resolution)));
    return GridSignal{base, resolution, std::move(values)};
}

std::size_t cell_index(double x, std::size_t base, std::size_t p) {
    if (!(x >= 0.0 && x < 1.0)) throw error("cell_index: x must lie in [0,1)");
    // digits x1, x2, ... by repeated scaling; floor semantics at dyadic points
    std::size_t idx = 0;
    std::size_t weight = 1;
    double y = x;
    for (std::size_t k = 0; k < p; ++k) {
        y *= static_cast<double>(base);
        auto digit = static_cast<std::size_t>(y);
        if (digit >= base) digit = base - 1;
        y -= static_cast<double>(digit);
        idx += digit * weight;
        weight *= base;
    }
    return idx;
}

cplx filter_value(const WalshMatrix& a, std::size_t i, double x) {
    if (i >= a.n()) throw error("filter_value: row index out of range");
    if (!(x >= 0.0 && x < 1.0)) throw error("filter_value: x must lie in [0,1)");
    auto j = static_cast<std::size_t>(x * static_cast<double>(a.n()));
    if (j >= a.n()) j = a.n() - 1;
    return std::sqrt(static_cast<double>(a.n())) * a.at(i, j);
}

cplx walsh_eval(const WalshMatrix& a, std::size_t n, double x, std::size_t p) {
    const std::size_t N = a.n();
    const std::size_t len = pow_n(N, p);
    if (n >= len) throw error("walsh_eval: n out of range for resolution p");
    DigitWord nd = to_digits(n, N, p);
    DigitWord xd = to_digits(cell_index(x, N, p), N, p);
    cplx prod = std::sqrt(static_cast<double>(len));
    for (std::size_t k = 0; k < p; ++k) prod *= a.at(nd.digits[k], xd.digits[k]);
    return prod;
}

GridSignal walsh_grid_vector(const WalshMatrix& a, std::size_t n, std::size_t p) {
    const std::size_t N = a.n();
    const std::size_t len = pow_n(N, p);
    if (n >= len) throw error("walsh_grid_vector: n out of range");
    DigitWord nd = to_digits(n, N, p);
    std::vector<cplx> v(len);
    const double scale = std::sqrt(static_cast<double>(len));
    for (std::size_t k = 0; k < len; ++k) {
        DigitWord kd = to_digits(k, N, p);
        cplx prod = scale;
        for (std::size_t d = 0; d < p; ++d) prod *= a.at(nd.digits[d], kd.digits[d]);
        v[k] = prod;
    }
    return GridSignal{N, p, std::move(v)};
}

GridSignal apply_S(const WalshMatrix& a, std::size_t i, const GridSignal& v) {
    const std::size_t N = a.n();
    if (i >= N) throw error("apply_S: row index out of range");
    if (v.base != N) throw error("apply_S: signal base differs from matrix size");
    const double root_n = std::sqrt(static_cast<double>(N));
    std::vector<cplx> out(v.length() * N);
    for (std::size_t w = 0; w < v.length(); ++w)
        for (std::size_t x1 = 0; x1 < N; ++x1)
            out[x1 + N * w] = root_n * a.at(i, x1) * v.values[w];
    return GridSignal{N, v.resolution + 1, std::move(out)};
}

GridSignal apply_S_adjoint(const WalshMatrix& a, std::size_t i, const GridSignal& v) {
    const std::size_t N = a.n();
    if (i >= N) throw error("apply_S_adjoint: row index out of range");
    if (v.base != N) throw error("apply_S_adjoint: signal base differs from matrix size");
    if (v.resolution == 0) throw error("apply_S_adjoint: resolution must be >= 1");
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(N));
    std::vector<cplx> out(v.length() / N);
    for (std::size_t w = 0; w < out.size(); ++w) {
        cplx acc = 0.0;
        for (std::size_t x1 = 0; x1 < N; ++x1)
            acc += std::conj(a.at(i, x1)) * v.values[x1 + N * w];
        out[w] = inv_root_n * acc;
    }
    return GridSignal{N, v.resolution - 1, std::move(out)};
}

}  // namespace gwalsh
