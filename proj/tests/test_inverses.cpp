#include "geninv/inverses.hpp"
#include "geninv/finite_ring.hpp"

#include "support/generators.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using geninv::ExactMatrix;
using geninv::FiniteStarRing;
using geninv::GaussianRational;
using geninv::InverseFailure;
using geninv::Rational;

namespace {
const ExactMatrix kA{{1, 1}, {0, 0}};
const GaussianRational kHalf{Rational(1, 2)};
const GaussianRational kQuarter{Rational(1, 4)};
const ExactMatrix kNilpotent{{0, 1}, {0, 0}};
}

TEST_CASE("group inverse on the matrix backend") {
    ExactMatrix inv{{1, 2}, {3, 4}};
    auto g = geninv::group_inverse(inv);
    REQUIRE(g.has_value());
    CHECK(g.value() * inv == ExactMatrix::identity(2));

    CHECK(geninv::group_inverse(kA).value() == kA);   // idempotent is its own group inverse

    auto missing = geninv::group_inverse(kNilpotent);
    REQUIRE_FALSE(missing.has_value());
    CHECK(missing.error().reason == InverseFailure::Reason::RankMismatch);
    CHECK(missing.error().rank_a == 1);
    CHECK(missing.error().rank_a_sq == 0);

    CHECK(geninv::group_inverse(ExactMatrix::zero(3, 3)).value() == ExactMatrix::zero(3, 3));
}

TEST_CASE("MP inverse on the matrix backend") {
    CHECK(geninv::mp_inverse(ExactMatrix::identity(2)).value() == ExactMatrix::identity(2));

    ExactMatrix expected{{kHalf, 0}, {kHalf, 0}};
    CHECK(geninv::mp_inverse(kA).value() == expected);

    ExactMatrix diag{{2, 0}, {0, 0}};
    CHECK(geninv::mp_inverse(diag).value() == ExactMatrix{{kHalf, 0}, {0, 0}});

    // complex entry: conjugation matters
    ExactMatrix im{{GaussianRational::i(), 0}, {0, 0}};
    CHECK(geninv::mp_inverse(im).value() == ExactMatrix{{-GaussianRational::i(), 0}, {0, 0}});

    // MP always exists here, even at index > 1
    CHECK(geninv::mp_inverse(kNilpotent).value() == ExactMatrix{{0, 0}, {1, 0}});
}

TEST_CASE("core inverse on the matrix backend") {
    CHECK(geninv::core_inverse(kA).value() == ExactMatrix{{1, 0}, {0, 0}});
    CHECK(geninv::core_inverse(ExactMatrix::identity(2)).value() == ExactMatrix::identity(2));
    REQUIRE_FALSE(geninv::core_inverse(kNilpotent).has_value());
    CHECK(geninv::core_inverse(kNilpotent).error().reason == InverseFailure::Reason::RankMismatch);
}

TEST_CASE("dual core inverse on the matrix backend") {
    // the dual core inverse of [[1,1],[0,0]] is (1/2)[[1,1],[1,1]]: it is the
    // unique solution of equations {1,2,4,8,9}; in particular (xa)* = xa
    // rules out any candidate with a zero second row
    ExactMatrix expected{{kHalf, kHalf}, {kHalf, kHalf}};
    auto d = geninv::dual_core_inverse(kA);
    REQUIRE(d.has_value());
    CHECK(d.value() == expected);
    for (int id : geninv::dual_core_equations())
        CHECK(geninv::master_equation_holds(kA, d.value(), id));
    ExactMatrix zero_row{{kHalf, kHalf}, {0, 0}};
    CHECK_FALSE(geninv::master_equation_holds(kA, zero_row, 4));

    CHECK(geninv::dual_core_inverse(ExactMatrix::identity(2)).value() ==
          ExactMatrix::identity(2));

    // a self-adjoint idempotent is its own dual core inverse
    ExactMatrix proj{{1, 0}, {0, 0}};
    CHECK(geninv::dual_core_inverse(proj).value() == proj);
    CHECK(geninv::dual_core_inverse(expected).value() == expected);

    REQUIRE_FALSE(geninv::dual_core_inverse(kNilpotent).has_value());
}

TEST_CASE("every computed inverse satisfies its defining equations exactly") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 80; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, t % (n + 1));
        auto check_kind = [&a](geninv::InverseKind kind) {
            auto res = geninv::compute_inverse(kind, a);
            if (!res) return;
            for (int id : geninv::defining_equations(kind))
                CHECK(geninv::master_equation_holds(a, res.value(), id));
        };
        check_kind(geninv::InverseKind::Group);
        check_kind(geninv::InverseKind::MoorePenrose);
        check_kind(geninv::InverseKind::Core);
        check_kind(geninv::InverseKind::DualCore);

        CHECK(geninv::mp_inverse(a).has_value());
        bool idx1 = geninv::index_at_most_one(a);
        CHECK(geninv::group_inverse(a).has_value() == idx1);
        CHECK(geninv::core_inverse(a).has_value() == idx1);
        CHECK(geninv::dual_core_inverse(a).has_value() == idx1);
    }
}

TEST_CASE("idempotent triple values and relations") {
    auto t = geninv::idempotent_triple(kA);
    REQUIRE(t.p);
    REQUIRE(t.q);
    REQUIRE(t.r);
    CHECK(*t.p == ExactMatrix{{1, 0}, {0, 0}});
    CHECK(*t.q == ExactMatrix{{1, 1}, {0, 0}});
    CHECK(*t.r == ExactMatrix{{kHalf, kHalf}, {kHalf, kHalf}});

    auto ti = geninv::idempotent_triple(ExactMatrix::identity(2));
    CHECK(*ti.p == ExactMatrix::identity(2));
    CHECK(*ti.q == ExactMatrix::identity(2));
    CHECK(*ti.r == ExactMatrix::identity(2));

    auto tz = geninv::idempotent_triple(ExactMatrix::zero(2, 2));
    CHECK(*tz.p == ExactMatrix::zero(2, 2));
    CHECK(*tz.q == ExactMatrix::zero(2, 2));
    CHECK(*tz.r == ExactMatrix::zero(2, 2));

    // index 2: no q, but p and r exist
    auto tn = geninv::idempotent_triple(kNilpotent);
    CHECK_FALSE(tn.q);
    CHECK(tn.p);
    CHECK(tn.r);

    std::mt19937_64 rng(43);
    for (int t2 = 0; t2 < 40; ++t2) {
        std::size_t n = 2 + t2 % 3;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t2 % n);
        auto tr = geninv::idempotent_triple(a);
        if (!tr.q) continue;
        const ExactMatrix &p = *tr.p, &q = *tr.q, &r = *tr.r;
        const ExactMatrix qs = star(q);
        // product relations among p, q, r
        CHECK(p * q == q);
        CHECK(q * p == p);
        CHECK(r * q == r);
        CHECK(q * r == q);
        CHECK(qs * p == qs);
        CHECK(p * qs == p);
        CHECK(qs * r == r);
        CHECK(r * qs == qs);
    }
}

TEST_CASE("representation through idempotents is invariant in the inner inverse") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, t % (n + 1));
        ExactMatrix canonical = geninv::inner_inverse(a);
        ExactMatrix alternate = geninv::alternate_inner_inverse(a);
        ExactMatrix perturbed = testsupport::perturbed_inner_inverse(rng, a, canonical);
        REQUIRE(a * perturbed * a == a);

        for (const ExactMatrix& inner : {canonical, alternate, perturbed}) {
            auto mp2 = geninv::mp_inverse_via_representation(a, inner);
            CHECK(mp2.value() == geninv::mp_inverse(a).value());
            auto g = geninv::group_inverse(a);
            auto g2 = geninv::group_inverse_via_representation(a, inner);
            CHECK(g.has_value() == g2.has_value());
            if (g) CHECK(g.value() == g2.value());
            auto c = geninv::core_inverse(a);
            auto c2 = geninv::core_inverse_via_representation(a, inner);
            CHECK(c.has_value() == c2.has_value());
            if (c) CHECK(c.value() == c2.value());
            auto d = geninv::dual_core_inverse(a);
            auto d2 = geninv::dual_core_inverse_via_representation(a, inner);
            CHECK(d.has_value() == d2.has_value());
            if (d) CHECK(d.value() == d2.value());
        }
    }
}

TEST_CASE("representation invariance, exhaustively over all inner inverses of a finite ring") {
    auto ring = FiniteStarRing::mat_zmod(2, 2);
    for (std::uint64_t ia = 0; ia < ring.order(); ++ia) {
        auto a = ring.element(ia);
        auto g = geninv::group_inverse(a);
        auto m = geninv::mp_inverse(a);
        auto c = geninv::core_inverse(a);
        auto d = geninv::dual_core_inverse(a);
        auto inners = geninv::enumerate_inverse_set(a, {1}).members;
        for (std::uint64_t xi : inners) {
            auto x = ring.element(xi);
            if (g) {
                auto q = a * g.value();
                CHECK(q * x * q == g.value());
            }
            if (m) {
                auto p = a * m.value();
                auto r = m.value() * a;
                CHECK(r * x * p == m.value());
                if (c) CHECK((a * g.value()) * x * p == c.value());
                if (d) CHECK(r * x * (a * g.value()) == d.value());
            }
        }
    }
}

TEST_CASE("factorization identities through the idempotent triple") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 3;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        if (!geninv::index_at_most_one(a)) continue;
        auto tr = geninv::idempotent_triple(a);
        const ExactMatrix &p = *tr.p, &q = *tr.q, &r = *tr.r;
        // a factors through each idempotent pair the same way
        CHECK(q * a * q == a);
        CHECK(p * a * q == a);
        CHECK(q * a * r == a);
        CHECK(p * a * r == a);

        ExactMatrix inner = geninv::inner_inverse(a);
        CHECK(geninv::group_inverse(a).value() == q * inner * q);
        CHECK(geninv::mp_inverse(a).value() == r * inner * p);
        CHECK(geninv::core_inverse(a).value() == q * inner * p);
        CHECK(geninv::dual_core_inverse(a).value() == r * inner * q);
    }
}

TEST_CASE("block annihilation identities") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 3;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        if (!geninv::index_at_most_one(a)) continue;
        auto tr = geninv::idempotent_triple(a);
        const ExactMatrix &p = *tr.p, &q = *tr.q, &r = *tr.r;
        const ExactMatrix one = ExactMatrix::identity(n);
        const ExactMatrix qs = star(q);
        const ExactMatrix g = geninv::group_inverse(a).value();
        const ExactMatrix m = geninv::mp_inverse(a).value();
        const ExactMatrix c = geninv::core_inverse(a).value();
        const ExactMatrix d = geninv::dual_core_inverse(a).value();

        // a and its group inverse live in the q x q corner (and p x r variants)
        for (const ExactMatrix& v : {a, g}) {
            CHECK(is_zero((one - q) * v));
            CHECK(is_zero((one - p) * v));
            CHECK(is_zero(v * (one - q)));
            CHECK(is_zero(v * (one - r)));
        }
        // MP inverse: r/q* on the left, p/q* on the right
        CHECK(is_zero((one - r) * m));
        CHECK(is_zero((one - qs) * m));
        CHECK(is_zero(m * (one - p)));
        CHECK(is_zero(m * (one - qs)));
        // core inverse: q/p left, p/q* right
        CHECK(is_zero((one - q) * c));
        CHECK(is_zero((one - p) * c));
        CHECK(is_zero(c * (one - p)));
        CHECK(is_zero(c * (one - qs)));
        // dual core inverse: r/q* left, q/r right
        CHECK(is_zero((one - r) * d));
        CHECK(is_zero((one - qs) * d));
        CHECK(is_zero(d * (one - q)));
        CHECK(is_zero(d * (one - r)));
    }
}

TEST_CASE("corner element of the core inverse") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 3;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        auto c = geninv::core_inverse(a);
        if (!c) continue;
        auto tr = geninv::idempotent_triple(a);
        const ExactMatrix q = *tr.q;
        const ExactMatrix qs = star(q);
        ExactMatrix x = qs * a * q;
        CHECK(x * c.value() == qs);
        CHECK(c.value() * x == q);
    }

    // uniqueness within q* R q, exhaustively on a finite ring
    auto ring = FiniteStarRing::mat_zmod(2, 2);
    for (std::uint64_t ia = 0; ia < ring.order(); ++ia) {
        auto a = ring.element(ia);
        auto c = geninv::core_inverse(a);
        auto g = geninv::group_inverse(a);
        if (!c || !g) continue;
        auto q = a * g.value();
        auto qs = star(q);
        auto want = qs * a * q;
        std::size_t hits = 0;
        for (std::uint64_t u = 0; u < ring.order(); ++u) {
            auto y = qs * ring.element(u) * q;
            if (y * c.value() == qs && c.value() * y == q) {
                CHECK(y == want);
                ++hits;
            }
        }
        CHECK(hits >= 1);
    }
}

TEST_CASE("idempotent uniqueness, exhaustively on a finite ring") {
    auto ring = FiniteStarRing::mat_zmod(2, 2);
    std::vector<std::uint64_t> idem, sa_idem;
    for (std::uint64_t i = 0; i < ring.order(); ++i) {
        auto e = ring.element(i);
        if (e * e == e) {
            idem.push_back(i);
            if (star(e) == e) sa_idem.push_back(i);
        }
    }
    // two idempotents with interlocking ideals coincide
    for (auto i : idem)
        for (auto j : idem) {
            auto q1 = ring.element(i), q2 = ring.element(j);
            if (geninv::left_ideal_contains(q2, q1) && geninv::right_ideal_contains(q1, q2))
                CHECK(q1 == q2);
        }
    // self-adjoint idempotents are determined by either one-sided ideal
    for (auto i : sa_idem)
        for (auto j : sa_idem) {
            auto p1 = ring.element(i), p2 = ring.element(j);
            bool same_left = geninv::left_ideal_contains(p2, p1) &&
                             geninv::left_ideal_contains(p1, p2);
            bool same_right = geninv::right_ideal_contains(p2, p1) &&
                              geninv::right_ideal_contains(p1, p2);
            if (same_left || same_right) CHECK(p1 == p2);
        }
}

TEST_CASE("double inverse table") {
    auto ti = geninv::double_inverse_table(ExactMatrix::identity(2));
    REQUIRE(ti.has_value());
    for (const auto& row : ti.value().recursive)
        for (const auto& v : row) CHECK(v == ExactMatrix::identity(2));

    ExactMatrix proj{{1, 0}, {0, 0}};   // self-adjoint idempotent: p = q = r = a
    auto tp = geninv::double_inverse_table(proj);
    REQUIRE(tp.has_value());
    for (const auto& row : tp.value().recursive)
        for (const auto& v : row) CHECK(v == proj);

    auto ta = geninv::double_inverse_table(kA);
    REQUIRE(ta.has_value());
    CHECK(ta.value().agree);
    // core-of-core lands at a * p
    CHECK(ta.value().recursive[2][2] == ExactMatrix{{1, 0}, {0, 0}});

    auto missing = geninv::double_inverse_table(kNilpotent);
    REQUIRE_FALSE(missing.has_value());
    CHECK(missing.error().reason == InverseFailure::Reason::PrerequisiteMissing);

    std::mt19937_64 rng(67);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 3;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        if (!geninv::index_at_most_one(a)) continue;
        CHECK(geninv::double_inverse_table(a).value().agree);
    }
}

TEST_CASE("core inverse of powers") {
    CHECK(geninv::power_core(ExactMatrix::identity(2), 3).value() == ExactMatrix::identity(2));
    CHECK(geninv::power_core(kA, 2).value() == ExactMatrix{{1, 0}, {0, 0}});
    CHECK(geninv::power_core(kA, 5).value() == geninv::core_inverse(kA).value());
    CHECK_THROWS_AS(geninv::power_core(kA, 0), std::invalid_argument);
    CHECK_THROWS_AS(geninv::power_core(kA, 7), std::invalid_argument);
    CHECK_FALSE(geninv::power_core(kNilpotent, 2).has_value());

    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + t % 3;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        auto c = geninv::core_inverse(a);
        if (!c) continue;
        for (unsigned e = 1; e <= 4; ++e)
            CHECK(geninv::power_core(a, e).value() == geninv::ring_pow(c.value(), e));
    }
}

TEST_CASE("composition identities among the four inverses") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 4;
        ExactMatrix a = testsupport::random_matrix_of_rank(rng, n, 1 + t % n);
        if (!geninv::index_at_most_one(a)) continue;
        ExactMatrix g = geninv::group_inverse(a).value();
        ExactMatrix m = geninv::mp_inverse(a).value();
        ExactMatrix c = geninv::core_inverse(a).value();
        ExactMatrix d = geninv::dual_core_inverse(a).value();
        ExactMatrix p = a * m;

        CHECK(c == g * p);                       // core from group and range idempotent
        CHECK(c * c * a == g);                   // square of core recovers group
        CHECK(geninv::core_inverse(geninv::core_inverse(c).value()).value() == c);
        CHECK(g == c * a * d);
        CHECK(m == d * a * c);
        CHECK(c == g * a * m);
        CHECK(d == m * a * g);
    }
}

TEST_CASE("inverses on the enumerable backend agree with Z6 arithmetic") {
    auto z6 = FiniteStarRing::zmod(6);
    auto a = z6.element(2);
    CHECK(geninv::group_inverse(a).value() == a);
    CHECK(geninv::mp_inverse(a).value() == a);
    CHECK(geninv::core_inverse(a).value() == a);
    CHECK(geninv::dual_core_inverse(a).value() == a);

    auto z4 = FiniteStarRing::zmod(4);
    auto two = z4.element(2);
    auto res = geninv::group_inverse(two);
    REQUIRE_FALSE(res.has_value());
    CHECK(res.error().reason == InverseFailure::Reason::EmptySearch);
}

TEST_CASE("presence pattern across the class lattice") {
    auto bn = geninv::compute_bundle(kNilpotent);
    CHECK(geninv::presence_pattern_consistent(bn));
    CHECK_FALSE(bn.group.has_value());
    CHECK(bn.mp.has_value());
    CHECK_FALSE(bn.core.has_value());
    CHECK_FALSE(bn.dual_core.has_value());

    // core without MP happens on finite rings; the pattern still fits
    auto ring = FiniteStarRing::mat_zmod(2, 2);
    auto b3 = geninv::compute_bundle(ring.element(3));
    CHECK(geninv::presence_pattern_consistent(b3));
    CHECK(b3.group.has_value());
    CHECK_FALSE(b3.mp.has_value());
    CHECK(b3.core.has_value());
    CHECK_FALSE(b3.dual_core.has_value());
    CHECK(b3.triple.q.has_value());
    CHECK_FALSE(b3.triple.p.has_value());
    CHECK_FALSE(b3.triple.r.has_value());
}
