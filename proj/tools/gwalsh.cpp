#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwalsh/compression.hpp"
#include "gwalsh/io.hpp"
#include "gwalsh/recovery.hpp"
#include "gwalsh/transform.hpp"
#include "gwalsh/uncertainty.hpp"

using namespace gwalsh;

namespace {

ComplexMatrix load_matrix(const std::string& source) {
    if (auto m = io::builtin_matrix(source)) return *m;
    return io::parse_matrix_file(source);
}

WalshMatrix load_walsh(const std::string& source, double tol_override) {
    const double tol = tol_override > 0 ? tol_override : io::builtin_tol(source);
    return validate_walsh(load_matrix(source), tol);
}

GridSignal load_signal(const std::string& path, std::size_t base, std::size_t p) {
    io::SignalData sd = io::parse_signal_file(path);
    const std::size_t use_base = sd.base.value_or(base);
    std::size_t use_p = sd.resolution.value_or(p);
    if (use_p == 0) {
        // infer the resolution from the length
        std::size_t len = 1, q = 0;
        while (len < sd.values.size()) { len *= use_base; ++q; }
        if (len != sd.values.size())
            throw error("signal length " + std::to_string(sd.values.size()) +
                        " is not a power of " + std::to_string(use_base));
        use_p = q;
    }
    return make_signal(use_base, use_p, std::move(sd.values));
}

std::vector<double> load_real_signal(const std::string& path) {
    io::SignalData sd = io::parse_signal_file(path);
    std::vector<double> x;
    x.reserve(sd.values.size());
    for (const cplx& z : sd.values) {
        if (z.imag() != 0.0) throw error("compress expects a real-valued signal");
        x.push_back(z.real());
    }
    return x;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::size_t infer_resolution(std::size_t base, std::size_t len) {
    std::size_t r = 1, p = 0;
    while (r < len) { r *= base; ++p; }
    if (r != len)
        throw error("signal length " + std::to_string(len) + " is not a power of " +
                    std::to_string(base));
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Walsh transform toolkit"};
    app.require_subcommand(1);

    std::string matrix_src, matrix_b_src, input, output, tsv_path, mask_path, coeffs_path;
    double tol_override = -1.0, x_point = 0.0, keep_fraction = 0.0;
    std::size_t p = 0, n_index = 0, nf = 0;
    unsigned long long seed = 0;
    std::vector<std::string> compare;

    auto add_matrix = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--matrix", matrix_src,
                                    "builtin (walsh2|gw3a|gw3b|gw4|dct:n) or file path");
        if (required) opt->required();
    };
    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol_override, "validation tolerance override");
    };

    auto* c_check = app.add_subcommand("check", "validate a generator and report its profile");
    add_matrix(c_check);
    add_tol(c_check);

    auto* c_transform = app.add_subcommand("transform", "forward generalized Walsh transform");
    add_matrix(c_transform);
    add_tol(c_transform);
    c_transform->add_option("-p,--resolution", p, "resolution (levels)");
    c_transform->add_option("--input", input, "signal file")->required();
    c_transform->add_option("--output", output, "coefficient file (default stdout)");

    auto* c_inverse = app.add_subcommand("inverse", "inverse transform");
    add_matrix(c_inverse);
    add_tol(c_inverse);
    c_inverse->add_option("-p,--resolution", p, "resolution (levels)");
    c_inverse->add_option("--input", input, "coefficient file")->required();
    c_inverse->add_option("--output", output, "signal file (default stdout)");

    auto* c_eval = app.add_subcommand("eval", "evaluate W_n at a point");
    add_matrix(c_eval);
    add_tol(c_eval);
    c_eval->add_option("-n,--index", n_index, "basis index")->required();
    c_eval->add_option("-x,--point", x_point, "point in [0,1)")->required();
    c_eval->add_option("-p,--resolution", p, "resolution")->required();

    auto* c_change = app.add_subcommand("change-basis", "map A-basis coefficients to B-basis");
    add_matrix(c_change);
    add_tol(c_change);
    c_change->add_option("--matrix-b", matrix_b_src, "target generator")->required();
    c_change->add_option("-p,--resolution", p, "resolution");
    c_change->add_option("--input", input, "A-basis coefficient file")->required();
    c_change->add_option("--output", output, "B-basis coefficient file (default stdout)");

    auto* c_unc = app.add_subcommand("uncertainty", "uncertainty profile and signal check");
    add_matrix(c_unc);
    add_tol(c_unc);
    c_unc->add_option("-p,--resolution", p, "resolution")->required();
    c_unc->add_option("--input", input, "optional signal to check");

    auto* c_mu = app.add_subcommand("mu", "brute-force uncertainty constant");
    add_matrix(c_mu);
    add_tol(c_mu);

    auto* c_recover = app.add_subcommand("recover", "sparse recovery from punctured spectrum");
    add_matrix(c_recover);
    add_tol(c_recover);
    c_recover->add_option("-p,--resolution", p, "resolution");
    c_recover->add_option("--coeffs", coeffs_path, "observed coefficient file")->required();
    c_recover->add_option("--mask", mask_path, "observed index file")->required();
    c_recover->add_option("--nf", nf, "declared sparsity bound")->required();
    c_recover->add_option("--output", output, "recovered signal file (default stdout)");

    auto* c_compress = app.add_subcommand("compress", "variance-criterion compression");
    c_compress->add_option("--matrix", compare,
                           "one or more transforms: builtin, file path, dct:n, or kl")
        ->required();
    add_tol(c_compress);
    c_compress->add_option("--input", input, "real signal file")->required();
    c_compress->add_option("--keep-fraction", keep_fraction, "fraction of components kept")
        ->required();
    c_compress->add_option("--tsv", tsv_path, "variance curve TSV output path");
    c_compress->add_option("--output", output, "reconstruction file for the first transform");

    auto* c_bench = app.add_subcommand("bench", "time the fast transform");
    add_matrix(c_bench);
    add_tol(c_bench);
    c_bench->add_option("-p,--resolution", p, "resolution")->required();
    c_bench->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            UncertaintyProfile prof = alpha_of(a);
            std::printf("unitary=ok first_row=ok hadamard=%s alpha=%.6g M=%.12g\n",
                        prof.hadamard ? "yes" : "no", prof.alpha, prof.max_entry);
        } else if (c_transform->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            GridSignal f = load_signal(input, a.n(), p);
            auto coeffs = forward(plan(a, f.resolution, Direction::analysis), f);
            std::string text = io::serialize_coeffs(coeffs, f.base, f.resolution);
            if (output.empty()) std::fputs(text.c_str(), stdout);
            else io::write_file(output, text);
        } else if (c_inverse->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            io::SignalData sd = io::parse_signal_file(input);
            const std::size_t res =
                sd.resolution.value_or(p ? p : infer_resolution(a.n(), sd.values.size()));
            GridSignal f = inverse(plan(a, res, Direction::synthesis), sd.values);
            std::string text = io::serialize_signal(f);
            if (output.empty()) std::fputs(text.c_str(), stdout);
            else io::write_file(output, text);
        } else if (c_eval->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            std::printf("%s\n", io::format_complex(walsh_eval(a, n_index, x_point, p)).c_str());
        } else if (c_change->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            WalshMatrix b = load_walsh(matrix_b_src, tol_override);
            io::SignalData sd = io::parse_signal_file(input);
            const std::size_t res =
                sd.resolution.value_or(p ? p : infer_resolution(a.n(), sd.values.size()));
            auto out_coeffs = change_basis(a, b, res, sd.values);
            std::string text = io::serialize_coeffs(out_coeffs, a.n(), res);
            if (output.empty()) std::fputs(text.c_str(), stdout);
            else io::write_file(output, text);
        } else if (c_unc->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            UncertaintyProfile prof = alpha_of(a);
            MuResult mu = mu_bruteforce(a.matrix());
            std::printf("N=%zu M=%.12g alpha=%.6g mu=%zu bound(%zu)=%.12g\n", a.n(),
                        prof.max_entry, prof.alpha, mu.mu, p, prof.bound(p));
            auto print_set = [](const char* label, const std::vector<std::size_t>& s) {
                std::printf("%s={", label);
                for (std::size_t i = 0; i < s.size(); ++i)
                    std::printf(i ? ",%zu" : "%zu", s[i]);
                std::printf("}\n");
            };
            print_set("witness_signal_support", mu.witness_signal_support);
            print_set("witness_transform_support", mu.witness_transform_support);
            if (!input.empty()) {
                GridSignal f = load_signal(input, a.n(), p);
                UncertaintyReport rep = check_uncertainty(a, f.resolution, f);
                std::printf("supp_f=%zu supp_Tf=%zu product=%zu holds=%s\n", rep.supp_f,
                            rep.supp_tf, rep.product, rep.holds ? "yes" : "no");
            }
        } else if (c_mu->parsed()) {
            MuResult mu = mu_bruteforce(load_matrix(matrix_src));
            std::printf("mu=%zu\n", mu.mu);
        } else if (c_recover->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            io::SignalData sd = io::parse_signal_file(coeffs_path);
            PuncturedSpectrum ps;
            ps.generator = a.matrix();
            ps.generator_tol = a.tol();
            ps.resolution =
                sd.resolution.value_or(p ? p : infer_resolution(a.n(), sd.values.size()));
            ps.coeffs = sd.values;
            ps.observed = io::parse_index_file(mask_path);
            std::sort(ps.observed.begin(), ps.observed.end());
            ps.nf = nf;
            for (std::size_t k = 0, oi = 0; k < ps.coeffs.size(); ++k) {
                if (oi < ps.observed.size() && ps.observed[oi] == k) ++oi;
                else ps.coeffs[k] = 0.0;
            }
            RecoveryResult res = recover(ps);
            std::string text = io::serialize_signal(res.signal);
            std::fprintf(stderr, "residual=%.6g unique=%s\n", res.residual,
                         res.unique ? "yes" : "no");
            if (output.empty()) std::fputs(text.c_str(), stdout);
            else io::write_file(output, text);
        } else if (c_compress->parsed()) {
            std::vector<double> x = load_real_signal(input);
            if (keep_fraction <= 0.0 || keep_fraction > 1.0)
                throw error("keep-fraction must be in (0,1]");
            const auto m =
                std::max<std::size_t>(1, std::llround(keep_fraction * double(x.size())));
            std::vector<CompressionReport> reports;
            for (const std::string& name : compare) {
                OrthogonalTransform t;
                double otol = 1e-8;
                if (name == "kl") {
                    t = kl_transform(x);
                } else if (name.rfind("dct:", 0) == 0) {
                    ComplexMatrix mat = *io::builtin_matrix(name);
                    if (mat.rows() != x.size())
                        throw error("dct size does not match the signal length");
                    t = matrix_transform(name, mat);
                } else {
                    auto bm = io::builtin_matrix(name);
                    ComplexMatrix mat = bm ? *bm : io::parse_matrix_file(name);
                    const double tol = tol_override > 0 ? tol_override : io::builtin_tol(name);
                    WalshMatrix w = validate_walsh(mat, tol);
                    const std::size_t res = infer_resolution(w.n(), x.size());
                    t = walsh_transform(name, w, res);
                    // approximately-unitary generators drift by ~tol per stage
                    otol = std::max(otol, w.tol() * double(res));
                }
                reports.push_back(compress(t, x, m, otol));
            }
            std::vector<std::vector<double>> curve_rows;
            const CompressionReport& first = reports.front();
            for (std::size_t k = 0; k < first.curve.size(); ++k)
                curve_rows.push_back({double(k + 1), double(first.curve[k].component),
                                      first.curve[k].normalized_variance});
            if (!tsv_path.empty())
                io::emit_tsv({"rank", "component_index", "normalized_variance"}, curve_rows,
                             tsv_path);
            if (!output.empty()) {
                std::string text;
                for (double v : first.reconstruction) text += fmt(v) + "\n";
                io::write_file(output, text);
            }
            std::vector<const CompressionReport*> order;
            for (const auto& r : reports) order.push_back(&r);
            std::stable_sort(order.begin(), order.end(),
                             [](auto* a, auto* b) { return a->error < b->error; });
            std::printf("transform\tkept\terror\trmse\n");
            for (const auto* r : order)
                std::printf("%s\t%zu\t%s\t%s\n", r->transform_name.c_str(), r->kept,
                            fmt(r->error).c_str(),
                            fmt(std::sqrt(r->error / double(x.size()))).c_str());
        } else if (c_bench->parsed()) {
            WalshMatrix a = load_walsh(matrix_src, tol_override);
            const std::size_t len = pow_n(a.n(), p);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            std::vector<cplx> v(len);
            for (cplx& z : v) z = {dist(rng), dist(rng)};
            GridSignal f{a.n(), p, v};
            auto pl = plan(a, p, Direction::analysis);
            auto time_best = [](auto&& fn) {
                double best = 1e300;
                double total = 0.0;
                do {
                    auto t0 = std::chrono::steady_clock::now();
                    fn();
                    auto t1 = std::chrono::steady_clock::now();
                    double dt = std::chrono::duration<double>(t1 - t0).count();
                    best = std::min(best, dt);
                    total += dt;
                } while (total < 0.2);
                return best;
            };
            const double fast = time_best([&] { forward(pl, f); });
            std::printf("backend=%s\n", kernels::backend_name(kernels::active_backend()).c_str());
            std::printf("fast_seconds=%.6g op_count=%zu\n", fast, op_count(a.n(), p));
            if (len <= kMaxExplicitRows) {
                ComplexMatrix t = kron_power(a.matrix().conj(), p);
                const double naive = time_best([&] { t.matvec(f.values); });
                std::printf("naive_matvec_seconds=%.6g speedup=%.3g\n", naive, naive / fast);
            } else {
                std::printf("naive_matvec_seconds=skipped (N^p > %zu)\n", kMaxExplicitRows);
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
