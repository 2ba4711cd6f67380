#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gwalsh/compression.hpp"
#include "gwalsh/transform.hpp"
#include "test_util.hpp"

using namespace gwalsh;
using testutil::fixture;

TEST_CASE("variance_curve sorts descending with stable ties") {
    std::vector<cplx> y = {1.0, 3.0, cplx(0.0, 3.0), 2.0};
    auto curve = variance_curve(y);
    CHECK(curve[0].component == 1);  // |3|^2 first, tie broken by lower index
    CHECK(curve[1].component == 2);
    CHECK(curve[2].component == 3);
    CHECK(curve[3].component == 0);
    double total = 0.0;
    for (const auto& pt : curve) total += pt.normalized_variance;
    CHECK(total == doctest::Approx(1.0));
    CHECK(curve[0].normalized_variance == doctest::Approx(9.0 / 23.0));
    CHECK_THROWS_AS(variance_curve(std::vector<cplx>(3, 0.0)), error);
}

TEST_CASE("dct_matrix is orthonormal") {
    for (std::size_t n : {1u, 4u, 8u, 256u})
        CHECK(dct_matrix(n).unitary_error() < 1e-10);
    // first row constant 1/sqrt(n)
    ComplexMatrix d = dct_matrix(8);
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(d.at(0, j).real() == doctest::Approx(1.0 / std::sqrt(8.0)));
}

TEST_CASE("high_variation_signal values") {
    std::vector<double> x = high_variation_signal(20);
    CHECK(x[0] == doctest::Approx(0.5));           // 1/2
    CHECK(x[1] == doctest::Approx(2.0 / 3.0));     // 2/3
    CHECK(x[8] == doctest::Approx(9.0 / 28.0));    // i=9: 9/(27+1)
    CHECK(x[17] == doctest::Approx(18.0 / 55.0));  // i=18
    CHECK(x[16] == doctest::Approx(17.0 / 18.0));
}

TEST_CASE("keeping everything reconstructs exactly") {
    std::vector<double> x = high_variation_signal(16);
    WalshMatrix h = fixture("walsh2");
    for (const OrthogonalTransform& t :
         {walsh_transform("walsh", h, 4), matrix_transform("dct", dct_matrix(16)),
          kl_transform(x)}) {
        CompressionReport rep = compress(t, x, 16);
        CHECK(rep.error < 1e-18);
        for (std::size_t i = 0; i < 16; ++i)
            CHECK(rep.reconstruction[i] == doctest::Approx(x[i]));
    }
}

TEST_CASE("error equals the discarded transform energy") {
    std::mt19937_64 rng(61);
    std::vector<double> x = high_variation_signal(64);
    OrthogonalTransform t = matrix_transform("dct", dct_matrix(64));
    std::vector<cplx> y = t.apply(std::vector<cplx>(x.begin(), x.end()));
    for (std::size_t m : {1u, 7u, 32u, 63u}) {
        CompressionReport rep = compress(t, x, m);
        double discarded = 0.0;
        for (std::size_t k = m; k < rep.curve.size(); ++k)
            discarded += std::norm(y[rep.curve[k].component]);
        CHECK(rep.error == doctest::Approx(discarded).epsilon(1e-9));
        CHECK(rep.kept_indices.size() == m);
    }
}

TEST_CASE("rank-one KL concentrates the fixed signal in one coefficient") {
    std::vector<double> x = high_variation_signal(32);
    OrthogonalTransform t = kl_transform(x);
    CompressionReport rep = compress(t, x, 1);
    CHECK(rep.kept_indices == std::vector<std::size_t>{0});
    CHECK(rep.error < 1e-18);
    CHECK(rep.curve[0].normalized_variance == doctest::Approx(1.0));
}

TEST_CASE("compress rejects non-orthogonal transforms and bad sizes") {
    std::vector<double> x = high_variation_signal(4);
    ComplexMatrix bad = ComplexMatrix::identity(4);
    bad.at(0, 0) = 2.0;
    CHECK_THROWS_AS(compress(matrix_transform("bad", bad), x, 2), error);
    OrthogonalTransform id = matrix_transform("id", ComplexMatrix::identity(4));
    CHECK_THROWS_AS(compress(id, x, 0), error);
    CHECK_THROWS_AS(compress(id, x, 5), error);
    CHECK_THROWS_AS(compress(id, high_variation_signal(3), 2), error);
}

TEST_CASE("paper orderings at length 256") {
    std::vector<double> x = high_variation_signal(256);
    WalshMatrix h = fixture("walsh2");
    WalshMatrix g4 = fixture("gw4");

    CompressionReport dct = compress(matrix_transform("dct", dct_matrix(256)), x, 115);
    CompressionReport wal = compress(walsh_transform("walsh", h, 8), x, 115);
    CompressionReport gw = compress(walsh_transform("gw4", g4, 4), x, 115);
    CHECK(dct.error < wal.error);
    CHECK(wal.error < gw.error);

    // removing 45% reproduces the reported magnitudes
    CompressionReport dct2 = compress(matrix_transform("dct", dct_matrix(256)), x, 141);
    CompressionReport wal2 = compress(walsh_transform("walsh", h, 8), x, 141);
    CompressionReport gw2 = compress(walsh_transform("gw4", g4, 4), x, 141);
    const double target[3] = {0.01, 0.08, 0.33};
    const double got[3] = {dct2.error, wal2.error, gw2.error};
    for (int i = 0; i < 3; ++i) {
        CHECK(got[i] > target[i] / 3.0);
        CHECK(got[i] < target[i] * 3.0);
    }
}

TEST_CASE("length-729 extension with 90 percent removed") {
    std::vector<double> x = high_variation_signal(729);
    WalshMatrix a = fixture("gw3a");
    WalshMatrix b = fixture("gw3b");
    const std::size_t keep = 73;  // round(0.1 * 729)
    CompressionReport ra = compress(walsh_transform("gw3a", a, 6), x, keep);
    CompressionReport rb =
        compress(walsh_transform("gw3b", b, 6), x, keep, b.tol() * 6);
    CHECK(ra.error < rb.error);

    std::vector<double> x2 = high_variation_signal(256);
    const std::size_t keep2 = 26;  // round(0.1 * 256)
    double others[3] = {
        compress(matrix_transform("dct", dct_matrix(256)), x2, keep2).error,
        compress(walsh_transform("walsh", fixture("walsh2"), 8), x2, keep2).error,
        compress(walsh_transform("gw4", fixture("gw4"), 4), x2, keep2).error,
    };
    for (double e : others) {
        CHECK(ra.error < e);
        CHECK(rb.error < e);
    }
}
