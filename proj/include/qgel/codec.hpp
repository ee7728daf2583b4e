#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qgel {

// Smallest w with order^w >= 256, so one byte always fits in w base-order
// digits. Requires order >= 2.
std::size_t codec_width(std::uint32_t order);

// Each byte becomes exactly codec_width(order) digits, most significant first.
std::vector<std::uint32_t> encode_bytes(std::span<const std::uint8_t> bytes, std::uint32_t order);

// Exact inverse of encode_bytes. Rejects streams whose length is not a
// multiple of the width and digit groups that exceed one byte.
std::vector<std::uint8_t> decode_symbols(std::span<const std::uint32_t> symbols,
                                         std::uint32_t order);

} // namespace qgel
