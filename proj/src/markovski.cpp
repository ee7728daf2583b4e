#include "qgel/markovski.hpp"

#include <string>

#include "qgel/error.hpp"

namespace qgel {

namespace {

void check_symbols(const Quasigroup& q, std::uint32_t leader, std::span<const std::uint32_t> s) {
    if (leader >= q.order())
        raise(errc::range, "leader " + std::to_string(leader) + " out of range for order " +
                               std::to_string(q.order()));
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] >= q.order())
            raise(errc::range, "symbol " + std::to_string(s[i]) + " at position " +
                                   std::to_string(i) + " out of range for order " +
                                   std::to_string(q.order()));
}

} // namespace

std::vector<std::uint32_t> markovski_encrypt(const Quasigroup& q, std::uint32_t leader,
                                             std::span<const std::uint32_t> plain) {
    check_symbols(q, leader, plain);
    std::vector<std::uint32_t> out;
    out.reserve(plain.size());
    std::uint32_t prev = leader;
    for (std::uint32_t u : plain) {
        prev = q.at(prev, u);
        out.push_back(prev);
    }
    return out;
}

std::vector<std::uint32_t> markovski_decrypt(const Quasigroup& q, std::uint32_t leader,
                                             std::span<const std::uint32_t> cipher) {
    check_symbols(q, leader, cipher);
    Quasigroup ld = q.left_division();
    std::vector<std::uint32_t> out;
    out.reserve(cipher.size());
    std::uint32_t prev = leader;
    for (std::uint32_t v : cipher) {
        out.push_back(ld.at(prev, v));
        prev = v;
    }
    return out;
}

} // namespace qgel
