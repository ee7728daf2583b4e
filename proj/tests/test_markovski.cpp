#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "reference_fixtures.hpp"
#include "qgel/error.hpp"
#include "qgel/markovski.hpp"
#include "qgel/rng.hpp"

using qgel::markovski_decrypt;
using qgel::markovski_encrypt;
using qgel::Quasigroup;

namespace {

// independent inversion: undo each chaining step by scanning the row
std::vector<std::uint32_t> scan_decrypt(const Quasigroup& q, std::uint32_t leader,
                                        const std::vector<std::uint32_t>& cipher) {
    std::vector<std::uint32_t> out;
    std::uint32_t prev = leader;
    for (std::uint32_t v : cipher) {
        for (std::uint32_t y = 0; y < q.order(); ++y) {
            if (q.at(prev, y) == v) {
                out.push_back(y);
                break;
            }
        }
        prev = v;
    }
    return out;
}

} // namespace

TEST_CASE("reference chain over the shared table") {
    Quasigroup t11 = fixtures::table(fixtures::kTable11);
    CHECK(markovski_encrypt(t11, fixtures::kLeader, fixtures::kPlain) == fixtures::kCipher);
    CHECK(markovski_decrypt(t11, fixtures::kLeader, fixtures::kCipher) == fixtures::kPlain);
}

TEST_CASE("xor quasigroup chain") {
    Quasigroup xorq = Quasigroup::from_rows({{0, 1}, {1, 0}});
    std::vector<std::uint32_t> plain = {1, 0, 1};
    std::vector<std::uint32_t> cipher = {1, 1, 0};
    CHECK(markovski_encrypt(xorq, 0, plain) == cipher);
    CHECK(markovski_decrypt(xorq, 0, cipher) == plain);
}

TEST_CASE("empty message") {
    Quasigroup t11 = fixtures::table(fixtures::kTable11);
    CHECK(markovski_encrypt(t11, 3, {}).empty());
    CHECK(markovski_decrypt(t11, 3, {}).empty());
}

TEST_CASE("range validation") {
    Quasigroup xorq = Quasigroup::from_rows({{0, 1}, {1, 0}});
    std::vector<std::uint32_t> bad = {0, 2};
    CHECK_THROWS_AS(markovski_encrypt(xorq, 0, bad), qgel::error);
    CHECK_THROWS_AS(markovski_decrypt(xorq, 0, bad), qgel::error);
    CHECK_THROWS_AS(markovski_encrypt(xorq, 2, std::vector<std::uint32_t>{0}), qgel::error);
}

TEST_CASE("round trip and prefix property on random cases") {
    qgel::Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng.below(31);
        Quasigroup q = qgel::random_quasigroup(n, rng);
        auto leader = static_cast<std::uint32_t>(rng.below(n));
        std::size_t len = rng.below(513);
        std::vector<std::uint32_t> plain(len);
        for (auto& s : plain)
            s = static_cast<std::uint32_t>(rng.below(n));

        auto cipher = markovski_encrypt(q, leader, plain);
        CHECK(cipher.size() == plain.size());
        CHECK(markovski_decrypt(q, leader, cipher) == plain);
        CHECK(markovski_encrypt(q, leader, markovski_decrypt(q, leader, plain)) == plain);

        if (!plain.empty()) {
            std::size_t cut = rng.below(plain.size() + 1);
            std::vector<std::uint32_t> prefix(plain.begin(), plain.begin() + cut);
            auto prefix_cipher = markovski_encrypt(q, leader, prefix);
            CHECK(std::equal(prefix_cipher.begin(), prefix_cipher.end(), cipher.begin()));
        }
    }
}

TEST_CASE("exhaustive agreement with the row-scanning oracle for tiny orders") {
    for (std::size_t n = 2; n <= 4; ++n) {
        // every table reachable from the cyclic construction
        std::set<std::vector<std::uint32_t>> tables;
        std::vector<std::uint32_t> images(n);
        std::vector<std::vector<std::uint32_t>> perms;
        std::iota(images.begin(), images.end(), 0u);
        do {
            perms.push_back(images);
        } while (std::next_permutation(images.begin(), images.end()));

        Quasigroup base = Quasigroup::cyclic(n);
        for (const auto& a : perms)
            for (const auto& b : perms)
                for (const auto& g : perms) {
                    qgel::Isotopy iso{qgel::Permutation(a), qgel::Permutation(b),
                                      qgel::Permutation(g)};
                    tables.insert(apply_isotopy(base, iso).flat());
                }

        for (const auto& flat : tables) {
            Quasigroup q = Quasigroup::from_flat(flat, n);
            for (std::uint32_t leader = 0; leader < n; ++leader) {
                // every message of length <= 3, as both plaintext and ciphertext
                std::vector<std::vector<std::uint32_t>> msgs = {{}};
                for (std::size_t len = 1; len <= 3; ++len) {
                    std::vector<std::vector<std::uint32_t>> next;
                    for (const auto& m : msgs)
                        if (m.size() == len - 1)
                            for (std::uint32_t s = 0; s < n; ++s) {
                                auto ext = m;
                                ext.push_back(s);
                                next.push_back(ext);
                            }
                    msgs.insert(msgs.end(), next.begin(), next.end());
                }
                for (const auto& msg : msgs) {
                    CHECK(markovski_decrypt(q, leader, msg) == scan_decrypt(q, leader, msg));
                    CHECK(markovski_decrypt(q, leader, markovski_encrypt(q, leader, msg)) == msg);
                }
            }
        }
    }
}
