#include "qgel/codec.hpp"

#include <string>

#include "qgel/error.hpp"

namespace qgel {

std::size_t codec_width(std::uint32_t order) {
    if (order < 2)
        raise(errc::invalid_argument, "codec alphabet order must be at least 2");
    std::size_t w = 0;
    std::uint64_t cap = 1;
    while (cap < 256) {
        cap *= order;
        ++w;
    }
    return w;
}

std::vector<std::uint32_t> encode_bytes(std::span<const std::uint8_t> bytes, std::uint32_t order) {
    std::size_t w = codec_width(order);
    std::vector<std::uint32_t> out;
    out.reserve(bytes.size() * w);
    for (std::uint8_t b : bytes) {
        std::uint32_t v = b;
        std::size_t base = out.size();
        out.resize(base + w);
        for (std::size_t j = w; j-- > 0;) {
            out[base + j] = v % order;
            v /= order;
        }
    }
    return out;
}

std::vector<std::uint8_t> decode_symbols(std::span<const std::uint32_t> symbols,
                                         std::uint32_t order) {
    std::size_t w = codec_width(order);
    if (symbols.size() % w != 0)
        raise(errc::validation, "symbol stream length " + std::to_string(symbols.size()) +
                                    " is not a multiple of codec width " + std::to_string(w));
    std::vector<std::uint8_t> out;
    out.reserve(symbols.size() / w);
    for (std::size_t i = 0; i < symbols.size(); i += w) {
        std::uint64_t v = 0;
        for (std::size_t j = 0; j < w; ++j) {
            std::uint32_t d = symbols[i + j];
            if (d >= order)
                raise(errc::validation, "symbol " + std::to_string(d) + " at position " +
                                            std::to_string(i + j) + " out of range for alphabet " +
                                            std::to_string(order));
            v = v * order + d;
        }
        if (v > 255)
            raise(errc::validation, "corrupt stream: digit group at position " +
                                        std::to_string(i) + " decodes to " + std::to_string(v) +
                                        ", beyond byte range");
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

} // namespace qgel
