#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwalsh/transform.hpp"
#include "test_util.hpp"

using namespace gwalsh;
using testutil::fixture;

namespace {

WalshMatrix fixture_for(std::size_t base) {
    return base == 2 ? fixture("walsh2") : base == 3 ? fixture("gw3a") : fixture("gw4");
}

}  // namespace

TEST_CASE("forward matches the dense tensor-power oracle") {
    std::mt19937_64 rng(31);
    for (std::size_t base : {2u, 3u, 4u}) {
        WalshMatrix a = fixture_for(base);
        for (std::size_t p = 1; p <= 4; ++p) {
            if (pow_n(base, p) > kMaxExplicitRows) break;
            TransformPlan pl = plan(a, p, Direction::analysis);
            for (int trial = 0; trial < 5; ++trial) {
                GridSignal f{base, p, testutil::random_vector(rng, pow_n(base, p))};
                CHECK(testutil::max_abs_diff(forward(pl, f), forward_naive(a, p, f)) <
                      1e-10);
            }
        }
    }
}

TEST_CASE("forward on a random constant-first-row unitary generator") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t base = 2 + rng() % 3;
        WalshMatrix a = validate_walsh(testutil::random_unitary(rng, base, true), 1e-8);
        std::size_t p = 1 + rng() % 3;
        TransformPlan pl = plan(a, p, Direction::analysis);
        GridSignal f{base, p, testutil::random_vector(rng, pow_n(base, p))};
        CHECK(testutil::max_abs_diff(forward(pl, f), forward_naive(a, p, f)) < 1e-10);
    }
}

TEST_CASE("round trip and Parseval") {
    std::mt19937_64 rng(33);
    for (std::size_t base : {2u, 3u, 4u}) {
        WalshMatrix a = fixture_for(base);
        for (std::size_t p = 1; p <= 5; ++p) {
            TransformPlan ana = plan(a, p, Direction::analysis);
            TransformPlan syn = plan(a, p, Direction::synthesis);
            GridSignal f{base, p, testutil::random_vector(rng, pow_n(base, p))};
            std::vector<cplx> y = forward(ana, f);
            CHECK(testutil::norm2(y) == doctest::Approx(testutil::norm2(f.values)));
            GridSignal back = inverse(syn, y);
            CHECK(back.base == base);
            CHECK(back.resolution == p);
            CHECK(testutil::max_abs_diff(back.values, f.values) < 1e-10);
        }
    }
}

TEST_CASE("analysis of a basis function is a scaled Dirac") {
    WalshMatrix a = fixture("gw3a");
    const std::size_t p = 3, len = 27;
    TransformPlan pl = plan(a, p, Direction::analysis);
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t n = rng() % len;
        std::vector<cplx> y = forward(pl, walsh_grid_vector(a, n, p));
        const double scale = std::sqrt(static_cast<double>(len));
        for (std::size_t k = 0; k < len; ++k) {
            cplx expected = k == n ? cplx(scale) : cplx(0.0);
            CHECK(std::abs(y[k] - expected) < 1e-10);
        }
    }
}

TEST_CASE("constant signal concentrates on coefficient zero") {
    WalshMatrix a = fixture("walsh2");
    GridSignal ones{2, 3, std::vector<cplx>(8, 1.0)};
    std::vector<cplx> y = forward(plan(a, 3, Direction::analysis), ones);
    CHECK(std::abs(y[0] - cplx(std::sqrt(8.0))) < 1e-12);
    for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(y[k]) < 1e-12);
}

TEST_CASE("scale_to_l2 gives true inner products") {
    // <1, W_0> = 1 for the constant function
    WalshMatrix a = fixture("gw3a");
    GridSignal ones{3, 2, std::vector<cplx>(9, 1.0)};
    std::vector<cplx> ip = scale_to_l2(forward(plan(a, 2, Direction::analysis), ones), 3, 2);
    CHECK(std::abs(ip[0] - cplx(1.0)) < 1e-12);
}

TEST_CASE("stage_apply composes to the full transform") {
    std::mt19937_64 rng(35);
    WalshMatrix a = fixture("gw3a");
    const std::size_t p = 3;
    ComplexMatrix kernel = a.matrix().conj();
    GridSignal f{3, p, testutil::random_vector(rng, 27)};
    std::vector<cplx> v = f.values;
    for (std::size_t k = p; k-- > 0;) v = stage_apply(kernel, k, v);
    CHECK(testutil::max_abs_diff(v, forward_naive(a, p, f)) < 1e-10);
}

TEST_CASE("change_basis maps coefficients between generators") {
    std::mt19937_64 rng(36);
    WalshMatrix a = fixture("gw3a");
    WalshMatrix b = validate_walsh(testutil::random_unitary(rng, 3, true), 1e-8);
    for (std::size_t p = 1; p <= 4; ++p) {
        GridSignal f{3, p, testutil::random_vector(rng, pow_n(3, p))};
        std::vector<cplx> ca = forward(plan(a, p, Direction::analysis), f);
        std::vector<cplx> cb = forward(plan(b, p, Direction::analysis), f);
        CHECK(testutil::max_abs_diff(change_basis(a, b, p, ca), cb) < 1e-9);
    }
}

TEST_CASE("op_count formula") {
    CHECK(op_count(2, 1) == 4);
    CHECK(op_count(2, 12) == 4096u * 12 * 2);
    CHECK(op_count(3, 6) == 729u * 6 * 3);
}

TEST_CASE("plan rejects mismatched signals") {
    WalshMatrix a = fixture("walsh2");
    TransformPlan pl = plan(a, 2, Direction::analysis);
    GridSignal wrong{2, 3, std::vector<cplx>(8, 0.0)};
    CHECK_THROWS_AS(forward(pl, wrong), error);
    CHECK_THROWS_AS(inverse(plan(a, 2, Direction::synthesis), std::vector<cplx>(3, 0.0)),
                    error);
    CHECK_THROWS_AS(forward(pl, GridSignal{3, 2, std::vector<cplx>(9, 0.0)}), error);
}
