#include "gwalsh/io.hpp"

#include "gwalsh/compression.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gwalsh::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// content lines with original 1-based line numbers, comments and blanks removed
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t num = 0;
    while (std::getline(in, line)) {
        ++num;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) out.emplace_back(num, line);
    }
    return out;
}

double parse_real(const std::string& s, bool& ok) {
    if (s.empty()) { ok = false; return 0.0; }
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (...) {
        ok = false;
        return 0.0;
    }
    ok = pos == s.size();
    return v;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

cplx parse_complex(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw error("empty complex literal");
    bool ok = true;
    if (t.back() == 'i' || t.back() == 'I') {
        // split off the real part: last +/- not at position 0 and not after e/E
        std::size_t split = std::string::npos;
        for (std::size_t k = t.size() - 1; k > 0; --k) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        std::string re_str, im_str;
        if (split == std::string::npos) {
            re_str = "0";
            im_str = t.substr(0, t.size() - 1);
        } else {
            re_str = t.substr(0, split);
            im_str = t.substr(split, t.size() - 1 - split);
        }
        if (im_str.empty() || im_str == "+" || im_str == "-") im_str += "1";
        bool ok2 = true;
        const double re = parse_real(re_str, ok);
        const double im = parse_real(im_str, ok2);
        if (!ok || !ok2) throw error("bad complex literal '" + t + "'");
        return {re, im};
    }
    const double re = parse_real(t, ok);
    if (!ok) throw error("bad complex literal '" + t + "'");
    return {re, 0.0};
}

std::string format_complex(const cplx& z) {
    if (z.imag() == 0.0) return fmt12(z.real());
    std::string s = fmt12(z.real());
    std::string im = fmt12(z.imag());
    if (!im.empty() && im[0] != '-') s += '+';
    return s + im + "i";
}

ComplexMatrix parse_matrix(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("matrix file is empty", 1);
    std::size_t cursor = 0;
    bool ok = true;
    const double nval = parse_real(lines[cursor].second, ok);
    if (!ok || nval < 1 || nval != std::floor(nval))
        throw parse_error("expected matrix dimension N", lines[cursor].first);
    const auto n = static_cast<std::size_t>(nval);
    ++cursor;
    if (lines.size() - cursor != n)
        throw parse_error("expected " + std::to_string(n) + " matrix rows, found " +
                              std::to_string(lines.size() - cursor),
                          lines.back().first);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i, ++cursor) {
        std::istringstream row(lines[cursor].second);
        std::string tok;
        std::size_t j = 0;
        while (row >> tok) {
            if (j >= n)
                throw parse_error("row has more than " + std::to_string(n) + " entries",
                                  lines[cursor].first);
            try {
                m.at(i, j) = parse_complex(tok);
            } catch (const error& e) {
                throw parse_error(e.what(), lines[cursor].first);
            }
            ++j;
        }
        if (j != n)
            throw parse_error("row has " + std::to_string(j) + " entries, expected " +
                                  std::to_string(n),
                              lines[cursor].first);
    }
    return m;
}

ComplexMatrix parse_matrix_file(const std::string& path) {
    return parse_matrix(read_file(path));
}

std::string serialize_matrix(const ComplexMatrix& m) {
    std::string out = std::to_string(m.rows()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_complex(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

SignalData parse_signal(const std::string& text) {
    auto lines = content_lines(text);
    SignalData sd;
    std::size_t cursor = 0;
    if (!lines.empty() &&
        (lines[0].second.rfind("base=", 0) == 0 || lines[0].second.rfind("coeffs", 0) == 0)) {
        std::istringstream hdr(lines[0].second);
        std::string tok;
        while (hdr >> tok) {
            if (tok == "coeffs") {
                sd.coeffs = true;
            } else if (tok.rfind("base=", 0) == 0) {
                sd.base = std::stoul(tok.substr(5));
            } else if (tok.rfind("resolution=", 0) == 0) {
                sd.resolution = std::stoul(tok.substr(11));
            } else if (tok.rfind("convention=", 0) == 0) {
                if (tok != "convention=unitary")
                    throw parse_error("unknown coefficient convention '" + tok + "'",
                                      lines[0].first);
            } else {
                throw parse_error("unknown header field '" + tok + "'", lines[0].first);
            }
        }
        ++cursor;
    }
    for (; cursor < lines.size(); ++cursor) {
        try {
            sd.values.push_back(parse_complex(lines[cursor].second));
        } catch (const error& e) {
            throw parse_error(e.what(), lines[cursor].first);
        }
    }
    if (sd.base && sd.resolution &&
        sd.values.size() != pow_n(*sd.base, *sd.resolution))
        throw parse_error("signal has " + std::to_string(sd.values.size()) +
                              " values but header says N^p = " +
                              std::to_string(pow_n(*sd.base, *sd.resolution)),
                          lines.empty() ? 1 : lines.back().first);
    return sd;
}

SignalData parse_signal_file(const std::string& path) {
    return parse_signal(read_file(path));
}

std::string serialize_signal(const GridSignal& s) {
    std::string out = "base=" + std::to_string(s.base) +
                      " resolution=" + std::to_string(s.resolution) + "\n";
    for (const cplx& z : s.values) out += format_complex(z) + "\n";
    return out;
}

std::string serialize_coeffs(const std::vector<cplx>& coeffs, std::size_t base,
                             std::size_t resolution) {
    std::string out = "coeffs base=" + std::to_string(base) +
                      " resolution=" + std::to_string(resolution) +
                      " convention=unitary\n";
    for (const cplx& z : coeffs) out += format_complex(z) + "\n";
    return out;
}

std::vector<std::size_t> parse_index_file(const std::string& path) {
    auto lines = content_lines(read_file(path));
    std::vector<std::size_t> idx;
    for (const auto& [num, text] : lines) {
        bool ok = true;
        const double v = parse_real(text, ok);
        if (!ok || v < 0 || v != std::floor(v))
            throw parse_error("expected a nonnegative index", num);
        idx.push_back(static_cast<std::size_t>(v));
    }
    return idx;
}

std::string render_tsv(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) out += '\t';
        out += header[j];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += '\t';
            out += fmt12(row[j]);
        }
        out += '\n';
    }
    return out;
}

void emit_tsv(const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows, const std::string& path) {
    write_file(path, render_tsv(header, rows));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw error("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<ComplexMatrix> builtin_matrix(const std::string& name) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    if (name == "walsh2")
        return ComplexMatrix(2, 2, {s2, s2, s2, -s2});
    if (name == "gw3a")
        return ComplexMatrix(3, 3, {s3, s3, s3, 0.0, s2, -s2, -2.0 * s6, s6, s6});
    if (name == "gw3b")
        return ComplexMatrix(3, 3, {s3, s3, s3, -0.2, -0.58, 0.78, -0.79, 0.57, 0.22});
    if (name == "gw4")
        return ComplexMatrix(4, 4, {0.5, 0.5, 0.5, 0.5, s2, -s2, 0.0, 0.0, 0.0, 0.0, s2,
                                    -s2, 0.5, 0.5, -0.5, -0.5});
    if (name.rfind("dct:", 0) == 0) return dct_matrix(std::stoul(name.substr(4)));
    return std::nullopt;
}

double builtin_tol(const std::string& name) {
    // gw3b's rows miss unit norm by up to 1.52e-2
    return name == "gw3b" ? 2e-2 : kDefaultTol;
}

}  // namespace gwalsh::io
