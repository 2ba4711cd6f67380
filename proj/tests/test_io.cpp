#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwalsh/io.hpp"
#include "test_util.hpp"

using namespace gwalsh;
namespace io = gwalsh::io;

TEST_CASE("complex literals") {
    CHECK(io::parse_complex("1.5") == cplx(1.5, 0.0));
    CHECK(io::parse_complex("-2") == cplx(-2.0, 0.0));
    CHECK(io::parse_complex("3i") == cplx(0.0, 3.0));
    CHECK(io::parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(io::parse_complex("i") == cplx(0.0, 1.0));
    CHECK(io::parse_complex("1+2i") == cplx(1.0, 2.0));
    CHECK(io::parse_complex("1.5-0.5i") == cplx(1.5, -0.5));
    CHECK(io::parse_complex("-1e-3+2.5e2i") == cplx(-1e-3, 250.0));
    CHECK(io::parse_complex(" 0.25 ") == cplx(0.25, 0.0));
    CHECK_THROWS_AS(io::parse_complex(""), error);
    CHECK_THROWS_AS(io::parse_complex("abc"), error);
    CHECK_THROWS_AS(io::parse_complex("1+2"), error);
}

TEST_CASE("complex round trip through format") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int t = 0; t < 200; ++t) {
        cplx z{d(rng), rng() % 3 ? d(rng) : 0.0};
        cplx back = io::parse_complex(io::format_complex(z));
        CHECK(std::abs(back - z) < 1e-9 * (1.0 + std::abs(z)));
    }
    CHECK(io::format_complex(cplx(1.0, 0.0)) == "1");
    CHECK(io::format_complex(cplx(0.5, -0.25)) == "0.5-0.25i");
    CHECK(io::format_complex(cplx(0.0, 2.0)) == "0+2i");
}

TEST_CASE("matrix serialization round trip") {
    std::mt19937_64 rng(72);
    ComplexMatrix m = testutil::random_matrix(rng, 3, 3);
    ComplexMatrix back = io::parse_matrix(io::serialize_matrix(m));
    CHECK(testutil::max_entry_diff(m, back) < 1e-9);
}

TEST_CASE("matrix parsing accepts comments and rejects malformed input") {
    ComplexMatrix m = io::parse_matrix("# generator\n2\n0.5 0.5\n0.5 -0.5  # trailing\n");
    CHECK(m.rows() == 2);
    CHECK(m.at(1, 1) == cplx(-0.5, 0.0));

    CHECK_THROWS_AS(io::parse_matrix(""), io::parse_error);
    CHECK_THROWS_AS(io::parse_matrix("x\n1 0\n0 1\n"), io::parse_error);
    CHECK_THROWS_AS(io::parse_matrix("2\n1 0\n"), io::parse_error);          // missing row
    CHECK_THROWS_AS(io::parse_matrix("2\n1 0 0\n0 1\n"), io::parse_error);   // long row
    CHECK_THROWS_AS(io::parse_matrix("2\n1\n0 1\n"), io::parse_error);       // short row
    try {
        io::parse_matrix("2\n1 0\n0 oops\n");
        FAIL("should not parse");
    } catch (const io::parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("signal parsing with and without header") {
    io::SignalData plain = io::parse_signal("1\n2\n-0.5\n");
    CHECK_FALSE(plain.base.has_value());
    CHECK(plain.values.size() == 3);
    CHECK_FALSE(plain.coeffs);

    io::SignalData hdr = io::parse_signal("base=3 resolution=2\n1\n2\n3\n4\n5\n6\n7\n8\n9\n");
    CHECK(hdr.base == 3);
    CHECK(hdr.resolution == 2);
    CHECK(hdr.values.size() == 9);

    io::SignalData co = io::parse_signal("coeffs base=2 resolution=1 convention=unitary\ni\n-i\n");
    CHECK(co.coeffs);
    CHECK(co.values[0] == cplx(0.0, 1.0));

    CHECK_THROWS_AS(io::parse_signal("base=2 resolution=2\n1\n2\n3\n"), io::parse_error);
    CHECK_THROWS_AS(io::parse_signal("base=2 resolution=1 convention=banana\n1\n2\n"),
                    io::parse_error);
    CHECK_THROWS_AS(io::parse_signal("base=2 wibble=3\n1\n2\n"), io::parse_error);
}

TEST_CASE("signal serialization round trip") {
    GridSignal s{3, 2, {1.0, cplx(0, 1), 2.0, 3.0, -1.0, 0.5, cplx(1, -1), 0.0, 9.0}};
    io::SignalData back = io::parse_signal(io::serialize_signal(s));
    CHECK(back.base == 3);
    CHECK(back.resolution == 2);
    CHECK(testutil::max_abs_diff(back.values, s.values) < 1e-9);

    io::SignalData cb = io::parse_signal(io::serialize_coeffs(s.values, 3, 2));
    CHECK(cb.coeffs);
    CHECK(testutil::max_abs_diff(cb.values, s.values) < 1e-9);
}

TEST_CASE("tsv rendering") {
    std::string tsv = io::render_tsv({"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}});
    CHECK(tsv == "a\tb\n1\t0.5\n2\t0.25\n");
}

TEST_CASE("builtin matrices") {
    CHECK(io::builtin_matrix("walsh2").has_value());
    CHECK(io::builtin_matrix("gw3a").has_value());
    CHECK(io::builtin_matrix("gw3b").has_value());
    CHECK(io::builtin_matrix("gw4").has_value());
    CHECK_FALSE(io::builtin_matrix("nope").has_value());
    ComplexMatrix d = *io::builtin_matrix("dct:8");
    CHECK(d.rows() == 8);
    CHECK(d.unitary_error() < 1e-10);
    // every builtin generator validates at its published tolerance
    for (const char* name : {"walsh2", "gw3a", "gw3b", "gw4"})
        CHECK_NOTHROW(validate_walsh(*io::builtin_matrix(name), io::builtin_tol(name)));
}

TEST_CASE("file round trip") {
    const std::string path = "/tmp/gwalsh_io_test.txt";
    io::write_file(path, "hello\n");
    CHECK(io::read_file(path) == "hello\n");
    CHECK_THROWS_AS(io::read_file("/nonexistent/nope"), error);

    io::write_file(path, "3\n7\n0\n");
    CHECK(io::parse_index_file(path) == std::vector<std::size_t>{3, 7, 0});
    io::write_file(path, "3\n-1\n");
    CHECK_THROWS_AS(io::parse_index_file(path), io::parse_error);
}
