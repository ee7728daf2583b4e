#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qgel/codec.hpp"
#include "qgel/error.hpp"
#include "qgel/rng.hpp"

using namespace qgel;

TEST_CASE("codec width") {
    CHECK(codec_width(2) == 8);
    CHECK(codec_width(7) == 3);
    CHECK(codec_width(16) == 2);
    CHECK(codec_width(255) == 2);
    CHECK(codec_width(256) == 1);
    CHECK_THROWS_AS(codec_width(1), qgel::error);
    CHECK_THROWS_AS(codec_width(0), qgel::error);
}

TEST_CASE("encode bytes as base-n digits, most significant first") {
    std::vector<std::uint8_t> zero = {0};
    CHECK(encode_bytes(zero, 7) == std::vector<std::uint32_t>{0, 0, 0});

    std::vector<std::uint8_t> max = {255};
    CHECK(encode_bytes(max, 7) == std::vector<std::uint32_t>{5, 1, 3}); // 5*49 + 1*7 + 3

    std::vector<std::uint8_t> letter = {66};
    CHECK(encode_bytes(letter, 7) == std::vector<std::uint32_t>{1, 2, 3}); // 49 + 14 + 3
}

TEST_CASE("decode inverts encode and rejects corrupt streams") {
    std::vector<std::uint32_t> symbols = {1, 2, 3};
    CHECK(decode_symbols(symbols, 7) == std::vector<std::uint8_t>{66});

    CHECK(decode_symbols({}, 7).empty());

    std::vector<std::uint32_t> overflow = {5, 1, 4}; // 5*49 + 7 + 4 = 256
    CHECK_THROWS_AS(decode_symbols(overflow, 7), qgel::error);

    std::vector<std::uint32_t> ragged = {1, 2};
    CHECK_THROWS_AS(decode_symbols(ragged, 7), qgel::error);

    std::vector<std::uint32_t> bad_digit = {0, 0, 9};
    CHECK_THROWS_AS(decode_symbols(bad_digit, 7), qgel::error);
}

TEST_CASE("round trip for every alphabet order") {
    Rng rng(88);
    for (std::uint32_t order = 2; order <= 256; ++order) {
        std::size_t len = rng.below(64);
        std::vector<std::uint8_t> bytes(len);
        for (auto& b : bytes)
            b = static_cast<std::uint8_t>(rng.below(256));
        auto symbols = encode_bytes(bytes, order);
        CHECK(symbols.size() == bytes.size() * codec_width(order));
        for (auto s : symbols)
            CHECK(s < order);
        CHECK(decode_symbols(symbols, order) == bytes);
    }
}
