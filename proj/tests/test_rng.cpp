#include <doctest.h>

#include <cstdint>

#include "qgel/error.hpp"
#include "qgel/rng.hpp"

using qgel::Rng;

TEST_CASE("same seed, same stream") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i)
        CHECK(a.below(1000) == b.below(1000));

    Rng c(12346);
    bool all_equal = true;
    Rng d(12345);
    for (int i = 0; i < 100; ++i)
        all_equal &= c.below(1000) == d.below(1000);
    CHECK_FALSE(all_equal);
}

TEST_CASE("bounds") {
    Rng rng(1);
    CHECK(rng.below(1) == 0);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.below(7) < 7);
        std::uint64_t v = rng.between(5, 9);
        CHECK(v >= 5);
        CHECK(v <= 9);
    }
    CHECK(rng.between(3, 3) == 3);
    CHECK_THROWS_AS(rng.below(0), qgel::error);
    CHECK_THROWS_AS(rng.between(4, 3), qgel::error);
}
