#include "geninv/exact_matrix.hpp"
#include "geninv/fp.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using geninv::ExactMatrix;
using geninv::GaussianRational;

namespace {
const ExactMatrix kA{{1, 1}, {0, 0}};
}

TEST_CASE("rref on canonical inputs") {
    auto id = ExactMatrix::identity(2);
    auto r1 = rref(id);
    CHECK(r1.reduced == id);
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r1.transform == id);

    auto r2 = rref(ExactMatrix::zero(2, 2));
    CHECK(r2.reduced == ExactMatrix::zero(2, 2));
    CHECK(r2.pivots.empty());
    CHECK(r2.transform == id);

    auto r3 = rref(kA);
    CHECK(r3.reduced == kA);
    CHECK(r3.pivots == std::vector<std::size_t>{0});
    CHECK(r3.transform == id);
}

TEST_CASE("rref transform is invertible and reproduces the input") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix(rng, n, n);
        auto r = rref(a);
        CHECK(r.transform * a == r.reduced);
        auto tinv = geninv::try_inverse(r.transform);
        REQUIRE(tinv.has_value());
        CHECK(tinv.value() * r.reduced == a);
    }
}

TEST_CASE("rank on canonical inputs and against the minor oracle") {
    CHECK(geninv::rank(ExactMatrix::identity(3)) == 3);
    CHECK(geninv::rank(ExactMatrix::zero(3, 3)) == 0);
    CHECK(geninv::rank(kA) == 1);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 3;   // minors are exponential, keep small
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, t % (n + 1));
        CHECK(geninv::rank(a) == testsupport::rank_by_minors(a));
    }
}

TEST_CASE("rank is invariant under star and Gram products") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, t % (n + 1));
        ExactMatrix as = star(a);
        CHECK(geninv::rank(a) == geninv::rank(as));
        CHECK(geninv::rank(a) == geninv::rank(a * as));
        CHECK(geninv::rank(a) == geninv::rank(as * a));
    }
}

TEST_CASE("rank factorization") {
    auto f1 = geninv::rank_factorize(kA);
    CHECK(f1.f == ExactMatrix{{1}, {0}});
    CHECK(f1.g == ExactMatrix{{1, 1}});
    CHECK(f1.rank == 1);

    auto f2 = geninv::rank_factorize(ExactMatrix::identity(2));
    CHECK(f2.f == ExactMatrix::identity(2));
    CHECK(f2.g == ExactMatrix::identity(2));

    ExactMatrix ones{{1, 1}, {1, 1}};
    auto f3 = geninv::rank_factorize(ones);
    CHECK(f3.f == ExactMatrix{{1}, {1}});
    CHECK(f3.g == ExactMatrix{{1, 1}});
    CHECK(f3.f * f3.g == ones);

    CHECK_THROWS_AS(geninv::rank_factorize(ExactMatrix::zero(2, 2)), geninv::ZeroMatrixError);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        auto fac = geninv::rank_factorize(a);
        CHECK(fac.f * fac.g == a);
        CHECK(geninv::rank(fac.f) == fac.rank);
        CHECK(geninv::rank(fac.g) == fac.rank);
    }
}

TEST_CASE("inner inverses satisfy a x a = a exactly") {
    CHECK(geninv::inner_inverse(ExactMatrix::identity(2)) == ExactMatrix::identity(2));
    CHECK(geninv::inner_inverse(ExactMatrix::zero(2, 2)) == ExactMatrix::zero(2, 2));

    GaussianRational half(geninv::Rational(1, 2));
    ExactMatrix expected{{half, 0}, {half, 0}};
    CHECK(geninv::inner_inverse(kA) == expected);

    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, t % (n + 1));
        ExactMatrix x = geninv::inner_inverse(a);
        ExactMatrix y = geninv::alternate_inner_inverse(a);
        CHECK(a * x * a == a);
        CHECK(a * y * a == a);
    }

    // the two canonical choices really are different in general
    CHECK(geninv::alternate_inner_inverse(kA) == ExactMatrix{{1, 0}, {0, 0}});
    CHECK_FALSE(geninv::alternate_inner_inverse(kA) == geninv::inner_inverse(kA));
}

TEST_CASE("index at most one") {
    CHECK_FALSE(geninv::index_at_most_one(ExactMatrix{{0, 1}, {0, 0}}));
    CHECK(geninv::index_at_most_one(kA));                       // idempotent
    CHECK(geninv::index_at_most_one(ExactMatrix{{1, 1}, {1, 1}}));
    CHECK(geninv::index_at_most_one(ExactMatrix::zero(3, 3)));

    // equivalent route: g*f invertible from the rank factorization
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        auto fac = geninv::rank_factorize(a);
        bool gf_invertible = geninv::try_inverse(fac.g * fac.f).has_value();
        CHECK(geninv::index_at_most_one(a) == gf_invertible);
    }
    ExactMatrix nil{{0, 1}, {0, 0}};
    auto fac = geninv::rank_factorize(nil);
    CHECK_FALSE(geninv::try_inverse(fac.g * fac.f).has_value());
}

TEST_CASE("involution laws on random matrices") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix x = testsupport::random_matrix(rng, n, n);
        ExactMatrix y = testsupport::random_matrix(rng, n, n);
        CHECK(star(x * y) == star(y) * star(x));
        CHECK(star(x + y) == star(x) + star(y));
        CHECK(star(star(x)) == x);
    }
    CHECK(star(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
    ExactMatrix im{{GaussianRational::i(), 0}, {0, 0}};
    CHECK(star(im) == ExactMatrix{{-GaussianRational::i(), 0}, {0, 0}});
}

TEST_CASE("matrix shape errors") {
    ExactMatrix a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a + b, geninv::DimensionMismatch);
    CHECK_THROWS_AS(b * ExactMatrix(3, 2), geninv::DimensionMismatch);
    CHECK_THROWS_AS(geninv::try_inverse(a), geninv::DimensionMismatch);
    CHECK_THROWS_AS(geninv::index_at_most_one(a), geninv::DimensionMismatch);
}

TEST_CASE("prime field matrices reduce exactly") {
    using F2 = geninv::Fp<2>;
    geninv::Matrix<F2> m{{F2(1), F2(1)}, {F2(1), F2(1)}};
    CHECK(geninv::rank(m) == 1);
    CHECK(is_zero(m * m));   // 2 = 0 mod 2
    CHECK(star(m) == m);

    using F5 = geninv::Fp<5>;
    CHECK(F5(3) / F5(2) == F5(4));   // 3 * 2^-1 = 3 * 3 = 9 = 4
    geninv::Matrix<F5> a{{F5(2), F5(1)}, {F5(4), F5(3)}};
    auto inv = geninv::try_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * inv.value() == geninv::Matrix<F5>::identity(2));
}
