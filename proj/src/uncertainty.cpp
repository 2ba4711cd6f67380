#include "gwalsh/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "gwalsh/transform.hpp"

namespace gwalsh {

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& c, std::size_t n) {
    std::vector<std::size_t> r;
    r.reserve(n - c.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pos < c.size() && c[pos] == i)
            ++pos;
        else
            r.push_back(i);
    }
    return r;
}

}  // namespace

SupportSet support(const std::vector<cplx>& v, double tol) {
    if (tol < 0.0) {
        double maxmag = 0.0;
        for (const cplx& z : v) maxmag = std::max(maxmag, std::abs(z));
        tol = 1e-9 * maxmag;
    }
    SupportSet s;
    s.tol = tol;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > tol) s.indices.push_back(i);
    return s;
}

double UncertaintyProfile::bound(std::size_t p) const {
    return std::pow(static_cast<double>(n), static_cast<double>(p) * alpha);
}

UncertaintyProfile alpha_of(const WalshMatrix& a) {
    UncertaintyProfile prof;
    prof.n = a.n();
    prof.max_entry = a.matrix().max_abs();
    prof.alpha = std::min(1.0, -2.0 * std::log(prof.max_entry) /
                                   std::log(static_cast<double>(a.n())));
    prof.hadamard = is_hadamard_scaled(a, a.tol() > 0 ? std::max(a.tol(), 1e-9) : 1e-9);
    return prof;
}

UncertaintyReport check_uncertainty(const WalshMatrix& a, std::size_t p,
                                    const GridSignal& f, double tol) {
    SupportSet sf = support(f.values, tol);
    if (sf.indices.empty()) throw error("check_uncertainty: zero signal");
    std::vector<cplx> tf = forward(plan(a, p, Direction::analysis), f);
    SupportSet stf = support(tf, tol);
    UncertaintyReport r;
    r.supp_f = sf.size();
    r.supp_tf = stf.size();
    r.product = r.supp_f * r.supp_tf;
    r.bound = alpha_of(a).bound(p);
    // tiny slack: the bound is N^{p alpha} computed in floating point
    r.holds = static_cast<double>(r.product) >= r.bound - 1e-9;
    return r;
}

MuResult mu_bruteforce(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw error("mu_bruteforce: matrix not square");
    const std::size_t n = m.rows();
    if (n > kMuBruteForceLimit)
        throw error("mu_bruteforce: size " + std::to_string(n) + " exceeds limit " +
                    std::to_string(kMuBruteForceLimit));
    if (m.unitary_error() > std::max(tol, 1e-6))
        throw error("mu_bruteforce: matrix is not unitary within tolerance");

    for (std::size_t product = 1; product <= n * n; ++product) {
        MuResult best;
        for (std::size_t s = 1; s <= n; ++s) {
            if (product % s != 0) continue;
            const std::size_t t = product / s;
            if (t < 1 || t > n) continue;
            auto sig = first_combination(s);
            do {
                auto tra = first_combination(t);
                do {
                    auto rows = complement(tra, n);
                    bool feasible = rows.size() < s ||
                                    numerical_rank(m.submatrix(rows, sig), 1e-10) < s;
                    if (feasible) {
                        // lexicographic (S, T) tiebreak within this product
                        if (best.mu == 0 ||
                            std::lexicographical_compare(
                                sig.begin(), sig.end(),
                                best.witness_signal_support.begin(),
                                best.witness_signal_support.end()) ||
                            (sig == best.witness_signal_support &&
                             std::lexicographical_compare(
                                 tra.begin(), tra.end(),
                                 best.witness_transform_support.begin(),
                                 best.witness_transform_support.end()))) {
                            best.mu = product;
                            best.witness_signal_support = sig;
                            best.witness_transform_support = tra;
                        }
                        break;  // no smaller (S,T) for this S at this product
                    }
                } while (next_combination(tra, n));
            } while (next_combination(sig, n));
        }
        if (best.mu != 0) return best;
    }
    throw error("mu_bruteforce: no feasible support pair (unreachable for unitary input)");
}

MuBounds mu_bounds(const WalshMatrix& a, std::size_t p) {
    const double m = a.matrix().max_abs();
    MuBounds b;
    b.lower = std::pow(1.0 / (m * m), static_cast<double>(p));
    b.upper = std::pow(static_cast<double>(mu_bruteforce(a.matrix()).mu),
                       static_cast<double>(p));
    return b;
}

bool hadamard_minor_rank(const WalshMatrix& a, std::size_t n1, std::size_t n2) {
    const std::size_t n = a.n();
    if (!is_hadamard_scaled(a, 1e-9))
        throw error("hadamard_minor_rank: sqrt(N)*A is not a Hadamard matrix");
    if (n > 8) throw error("hadamard_minor_rank: exhaustive check limited to N <= 8");
    if (n1 * n2 >= n || n1 < 1 || n2 < 1)
        throw error("hadamard_minor_rank: need N1*N2 < N with N1, N2 >= 1");
    const std::size_t rows_taken = n - n2;
    ComplexMatrix scaled = a.matrix();
    const double root_n = std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled.at(i, j) = root_n * a.at(i, j);

    auto rows = first_combination(rows_taken);
    do {
        auto cols = first_combination(n1);
        do {
            if (numerical_rank(scaled.submatrix(rows, cols), 1e-8) != n1) return false;
        } while (next_combination(cols, n));
    } while (next_combination(rows, n));
    return true;
}

}  // namespace gwalsh
