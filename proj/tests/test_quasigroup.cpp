#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "reference_fixtures.hpp"
#include "qgel/error.hpp"
#include "qgel/quasigroup.hpp"
#include "qgel/rng.hpp"

using qgel::Isotopy;
using qgel::Permutation;
using qgel::Quasigroup;

TEST_CASE("validation accepts Latin squares and pinpoints violations") {
    CHECK(fixtures::table(fixtures::kTable2).order() == 7);
    CHECK(Quasigroup::from_rows({{0, 1}, {1, 0}}).order() == 2);

    CHECK_THROWS_WITH_AS(Quasigroup::from_rows({{0, 1}, {0, 1}}),
                         "duplicate value 0 in column 0", qgel::error);
    CHECK_THROWS_WITH_AS(Quasigroup::from_rows({{0, 0}, {1, 1}}),
                         "duplicate value 0 in row 0", qgel::error);
    CHECK_THROWS_AS(Quasigroup::from_rows({{0, 1, 2}, {1, 2, 0}}), qgel::error); // not square
    CHECK_THROWS_AS(Quasigroup::from_rows({{0, 2}, {2, 0}}), qgel::error);       // out of range
}

TEST_CASE("left division inverts row lookups") {
    Quasigroup t11 = fixtures::table(fixtures::kTable11);
    CHECK(t11.left_division() == fixtures::table(fixtures::kTable12));

    Quasigroup xorq = Quasigroup::from_rows({{0, 1}, {1, 0}});
    CHECK(xorq.left_division() == xorq);

    // scan row 0 of the base table for value 0: f(0, 4) = 0, so 0 \ 0 = 4
    Quasigroup t2 = fixtures::table(fixtures::kTable2);
    CHECK(t2.left_division().at(0, 0) == 4);
}

TEST_CASE("left division identities hold exhaustively for small orders") {
    qgel::Rng rng(11);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int sample = 0; sample < 4; ++sample) {
            Quasigroup q = sample == 0 ? Quasigroup::cyclic(n) : qgel::random_quasigroup(n, rng);
            Quasigroup ld = q.left_division();
            for (std::uint32_t x = 0; x < n; ++x) {
                for (std::uint32_t y = 0; y < n; ++y) {
                    CHECK(q.at(x, ld.at(x, y)) == y); // f(x, x \ z) = z
                    CHECK(ld.at(x, q.at(x, y)) == y); // x \ f(x, y) = y
                }
            }
        }
    }
}

TEST_CASE("apply_isotopy reproduces the reference chains") {
    Quasigroup q = fixtures::table(fixtures::kTable2);
    Isotopy t = fixtures::isotopy();

    CHECK(apply_isotopy(q, t) == fixtures::table(fixtures::kTable5));
    CHECK(apply_isotopy(q, t.power(3, 6, 5)) == fixtures::table(fixtures::kTable8));
    CHECK(apply_isotopy(q, Isotopy::identity(7)) == q);
    CHECK(apply_isotopy(q, t.power(15, 18, 30)) == fixtures::table(fixtures::kTable11));

    // intermediate stages: row map only, then row+column maps
    Permutation id7 = Permutation::identity(7);
    CHECK(apply_isotopy(q, Isotopy(fixtures::alpha(), id7, id7)) ==
          fixtures::table(fixtures::kTable3));
    CHECK(apply_isotopy(q, Isotopy(fixtures::alpha(), fixtures::beta(), id7)) ==
          fixtures::table(fixtures::kTable4));

    CHECK_THROWS_AS(apply_isotopy(q, Isotopy::identity(5)), qgel::error);
}

TEST_CASE("isotopy_power raises the components") {
    Isotopy t = fixtures::isotopy();

    Isotopy powered = t.power(3, 6, 5);
    CHECK(powered.alpha().cycle_string() == fixtures::kAlpha3Cycles);
    CHECK(powered.beta().cycle_string() == fixtures::kBeta6Cycles);
    CHECK(powered.gamma().cycle_string() == fixtures::kGamma5Cycles);

    CHECK(t.power(1, 1, 1) == t);

    Isotopy ephemeral = t.power(5, 3, 6);
    CHECK(ephemeral.alpha() == fixtures::perm(fixtures::kAlpha5));
    CHECK(ephemeral.beta() == fixtures::perm(fixtures::kBeta3));
    CHECK(ephemeral.gamma() == fixtures::perm(fixtures::kGamma6));
}

TEST_CASE("componentwise powers commute") {
    Isotopy t = fixtures::isotopy();
    Isotopy via_private = t.power(3, 6, 5).power(5, 3, 6);
    Isotopy via_ephemeral = t.power(5, 3, 6).power(3, 6, 5);
    CHECK(via_private == via_ephemeral);
    CHECK(via_private == t.power(15, 18, 30));
    CHECK(via_private.alpha() == fixtures::perm(fixtures::kAlpha15));
    CHECK(via_private.beta() == fixtures::perm(fixtures::kBeta18));
    CHECK(via_private.gamma() == fixtures::perm(fixtures::kGamma30));

    Quasigroup q = fixtures::table(fixtures::kTable2);
    CHECK(apply_isotopy(q, via_private) == fixtures::table(fixtures::kTable11));
}

TEST_CASE("isotopy construction rejects mixed degrees") {
    CHECK_THROWS_AS(Isotopy(Permutation::identity(3), Permutation::identity(3),
                            Permutation::identity(4)),
                    qgel::error);
}

TEST_CASE("apply_isotopy preserves the Latin property") {
    qgel::Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng.below(15);
        Quasigroup q = qgel::random_quasigroup(n, rng);
        Isotopy t = qgel::random_isotopy(n, rng);
        Quasigroup image = apply_isotopy(q, t); // from_flat revalidates
        CHECK(image.order() == n);
        // and the chain composes: (T1 then T2) = componentwise composition
        Isotopy t2 = qgel::random_isotopy(n, rng);
        Isotopy combined(compose(t.alpha(), t2.alpha()), compose(t.beta(), t2.beta()),
                         compose(t.gamma(), t2.gamma()));
        CHECK(apply_isotopy(image, t2) == apply_isotopy(q, combined));
        // inverse isotopy undoes the transformation
        Isotopy inverse(t.alpha().inverse(), t.beta().inverse(), t.gamma().inverse());
        CHECK(apply_isotopy(image, inverse) == q);
    }
}

TEST_CASE("random generation is seeded and valid") {
    qgel::Rng rng(1);
    CHECK(qgel::random_quasigroup(1, rng) == Quasigroup::from_rows({{0}}));

    qgel::Rng a(99), b(99);
    CHECK(qgel::random_quasigroup(4, a) == qgel::random_quasigroup(4, b));
    CHECK(qgel::random_isotopy(6, a) == qgel::random_isotopy(6, b));

    qgel::Rng c(3);
    Isotopy t = qgel::random_isotopy(1, c);
    CHECK(t == Isotopy::identity(1));

    CHECK_THROWS_AS(qgel::random_quasigroup(0, c), qgel::error);
    CHECK_THROWS_AS(qgel::random_isotopy(0, c), qgel::error);
}
