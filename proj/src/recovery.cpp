#include "gwalsh/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

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

// Solve the hermitian positive semidefinite system G v = rhs by row-pivoted
// elimination; components in the numerical null space are set to zero.
std::vector<cplx> solve_normal(ComplexMatrix g, std::vector<cplx> rhs) {
    const std::size_t s = g.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < s; ++i) scale = std::max(scale, std::abs(g.at(i, i)));
    const double thresh = 1e-12 * std::max(scale, 1e-300);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < s && r < s; ++col) {
        std::size_t pi = r;
        double pmag = 0.0;
        for (std::size_t i = r; i < s; ++i) {
            double mag = std::abs(g.at(i, col));
            if (mag > pmag) { pmag = mag; pi = i; }
        }
        if (pmag <= thresh) continue;  // numerically dependent column, variable stays 0
        if (pi != r) {
            for (std::size_t j = 0; j < s; ++j) std::swap(g.at(pi, j), g.at(r, j));
            std::swap(rhs[pi], rhs[r]);
        }
        const cplx piv = g.at(r, col);
        for (std::size_t i = r + 1; i < s; ++i) {
            cplx factor = g.at(i, col) / piv;
            if (factor == cplx(0.0)) continue;
            for (std::size_t j = col; j < s; ++j) g.at(i, j) -= factor * g.at(r, j);
            rhs[i] -= factor * rhs[r];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<cplx> x(s, 0.0);
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t col = pivot_cols[k];
        cplx acc = rhs[k];
        for (std::size_t j = col + 1; j < s; ++j) acc -= g.at(k, j) * x[j];
        x[col] = acc / g.at(k, col);
    }
    return x;
}

}  // namespace

std::size_t PuncturedSpectrum::missing() const { return coeffs.size() - observed.size(); }

PuncturedSpectrum puncture(const WalshMatrix& a, std::size_t p, const GridSignal& f,
                           const std::vector<std::size_t>& erase) {
    PuncturedSpectrum ps;
    ps.generator = a.matrix();
    ps.generator_tol = a.tol();
    ps.resolution = p;
    ps.nf = support(f.values).size();
    ps.coeffs = forward(plan(a, p, Direction::analysis), f);
    std::vector<bool> erased(ps.coeffs.size(), false);
    for (std::size_t k : erase) {
        if (k >= ps.coeffs.size()) throw error("puncture: erase index out of range");
        erased[k] = true;
    }
    for (std::size_t k = 0; k < ps.coeffs.size(); ++k) {
        if (erased[k])
            ps.coeffs[k] = 0.0;
        else
            ps.observed.push_back(k);
    }
    return ps;
}

bool uniqueness_ok(std::size_t nf, std::size_t nw, const UncertaintyProfile& profile,
                   std::size_t p) {
    if (nf < 1) throw error("uniqueness_ok: nf must be >= 1");
    return 2.0 * static_cast<double>(nf) * static_cast<double>(nw) < profile.bound(p);
}

RecoveryResult recover(const PuncturedSpectrum& ps, double tol) {
    const WalshMatrix gen = validate_walsh(ps.generator, ps.generator_tol);
    const std::size_t len = ps.coeffs.size();
    const std::size_t p = ps.resolution;
    if (len != pow_n(gen.n(), p)) throw error("recover: coefficient length != N^p");
    if (len > kRecoveryBruteForceLimit && ps.nf > 3)
        throw error("recover: problem too large for brute-force support search");

    const auto synth = plan(gen, p, Direction::synthesis);
    if (ps.missing() == 0) {
        RecoveryResult r;
        r.signal = inverse(synth, ps.coeffs);
        r.residual = 0.0;
        r.unique = true;
        return r;
    }

    // columns of conj(A)^{tensor p} restricted to the observed rows
    const auto ana = plan(gen, p, Direction::analysis);
    std::vector<std::vector<cplx>> cols(len);
    for (std::size_t j = 0; j < len; ++j) {
        std::vector<cplx> delta(len, 0.0);
        delta[j] = 1.0;
        std::vector<cplx> full = ana.apply(delta);
        cols[j].reserve(ps.observed.size());
        for (std::size_t bi : ps.observed) cols[j].push_back(full[bi]);
    }
    std::vector<cplx> b;
    b.reserve(ps.observed.size());
    for (std::size_t bi : ps.observed) b.push_back(ps.coeffs[bi]);

    auto solve_on = [&](const std::vector<std::size_t>& s,
                        double* residual) -> std::vector<cplx> {
        const std::size_t m = ps.observed.size();
        ComplexMatrix g(s.size(), s.size());
        std::vector<cplx> rhs(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                cplx acc = 0.0;
                for (std::size_t r = 0; r < m; ++r)
                    acc += std::conj(cols[s[i]][r]) * cols[s[j]][r];
                g.at(i, j) = acc;
            }
            cplx acc = 0.0;
            for (std::size_t r = 0; r < m; ++r) acc += std::conj(cols[s[i]][r]) * b[r];
            rhs[i] = acc;
        }
        std::vector<cplx> v = solve_normal(std::move(g), std::move(rhs));
        double res = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            cplx d = -b[r];
            for (std::size_t i = 0; i < s.size(); ++i) d += cols[s[i]][r] * v[i];
            res += std::norm(d);
        }
        *residual = std::sqrt(res);
        return v;
    };

    struct Candidate {
        double residual;
        std::vector<std::size_t> sup;
    };
    std::vector<Candidate> all;
    double min_res = std::numeric_limits<double>::infinity();
    const std::size_t max_size = std::min(ps.nf, len);
    for (std::size_t sz = 1; sz <= max_size; ++sz) {
        std::vector<std::size_t> sup(sz);
        for (std::size_t i = 0; i < sz; ++i) sup[i] = i;
        do {
            double res;
            solve_on(sup, &res);
            all.push_back({res, sup});
            min_res = std::min(min_res, res);
        } while (next_combination(sup, len));
    }

    const UncertaintyProfile prof = alpha_of(gen);
    if (uniqueness_ok(ps.nf, ps.missing(), prof, p) && min_res > tol)
        throw error("recover: no support of the declared sparsity fits the observed "
                    "coefficients (residual " + std::to_string(min_res) + ")");

    // lexicographically smallest support among residual-ties within tol
    const std::vector<std::size_t>* best_sup = nullptr;
    for (const Candidate& c : all) {
        if (c.residual > min_res + tol) continue;
        if (!best_sup || std::lexicographical_compare(c.sup.begin(), c.sup.end(),
                                                      best_sup->begin(), best_sup->end()))
            best_sup = &c.sup;
    }

    double best_res;
    std::vector<cplx> best_v = solve_on(*best_sup, &best_res);
    std::vector<cplx> best_sig(len, 0.0);
    for (std::size_t i = 0; i < best_sup->size(); ++i) best_sig[(*best_sup)[i]] = best_v[i];

    bool unique = true;
    for (const Candidate& c : all) {
        if (c.residual > min_res + tol || &c.sup == best_sup) continue;
        double res;
        std::vector<cplx> v = solve_on(c.sup, &res);
        double diff = 0.0;
        std::vector<cplx> sig(len, 0.0);
        for (std::size_t i = 0; i < c.sup.size(); ++i) sig[c.sup[i]] = v[i];
        for (std::size_t k = 0; k < len; ++k) diff = std::max(diff, std::abs(sig[k] - best_sig[k]));
        if (diff > 1e-6) { unique = false; break; }
    }

    RecoveryResult r;
    r.signal = GridSignal{gen.n(), p, std::move(best_sig)};
    r.residual = best_res;
    r.unique = unique;
    return r;
}

}  // namespace gwalsh
