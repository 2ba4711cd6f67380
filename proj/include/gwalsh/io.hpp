#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwalsh/basis.hpp"
#include "gwalsh/linalg.hpp"

namespace gwalsh::io {

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t line)
        : error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

/// Complex literal: `a`, `a+bi`, `a-bi`, `bi` or `i` (decimals only, no
/// internal spaces).
cplx parse_complex(const std::string& token);
std::string format_complex(const cplx& z);

// Matrix file: `#` comments, first non-comment line N, then N rows of N
// whitespace-separated complex literals.
ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix parse_matrix_file(const std::string& path);
std::string serialize_matrix(const ComplexMatrix& m);

struct SignalData {
    std::vector<cplx> values;
    std::optional<std::size_t> base;
    std::optional<std::size_t> resolution;
    bool coeffs = false;  // header started with `coeffs`
};

// Signal file: `#` comments, optional header `base=N resolution=p`
// (`coeffs base=N resolution=p convention=unitary` for coefficient files),
// then one complex literal per line.
SignalData parse_signal(const std::string& text);
SignalData parse_signal_file(const std::string& path);
std::string serialize_signal(const GridSignal& s);
std::string serialize_coeffs(const std::vector<cplx>& coeffs, std::size_t base,
                             std::size_t resolution);

/// Mask file: one observed index per line, `#` comments.
std::vector<std::size_t> parse_index_file(const std::string& path);

/// Tab-separated table with a header row, LF endings, 12 significant digits.
std::string render_tsv(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows);
void emit_tsv(const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows, const std::string& path);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Builtin generators: walsh2, gw3a, gw3b, gw4, dct:n.
std::optional<ComplexMatrix> builtin_matrix(const std::string& name);
/// Validation tolerance appropriate for a builtin (gw3b is only approximately
/// unitary).
double builtin_tol(const std::string& name);

}  // namespace gwalsh::io
