#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

#include "qgel/scheme.hpp"

namespace qgel {

// How a ciphertext body relates to the original input: either raw symbols, or
// bytes expanded through the base-n codec.
struct CodecSpec {
    bool raw = true;
    std::uint32_t order = 0; // alphabet order, when not raw
    std::uint32_t width = 0; // digits per byte, when not raw

    bool operator==(const CodecSpec&) const = default;
};

// Versioned JSON text, UTF-8, with a fixed field order so the same value
// always serializes to the same bytes. Loaders re-run the module validators,
// so a tampered file fails with the violated invariant.
std::string public_key_to_json(const PublicKey& pub);
PublicKey public_key_from_json(std::string_view text);

std::string private_key_to_json(const PrivateKey& priv);
PrivateKey private_key_from_json(std::string_view text);

std::string ciphertext_to_json(const Ciphertext& ct, const CodecSpec& codec);
std::pair<Ciphertext, CodecSpec> ciphertext_from_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

void save_public_key(const std::filesystem::path& path, const PublicKey& pub);
PublicKey load_public_key(const std::filesystem::path& path);

void save_private_key(const std::filesystem::path& path, const PrivateKey& priv);
PrivateKey load_private_key(const std::filesystem::path& path);

void save_ciphertext(const std::filesystem::path& path, const Ciphertext& ct,
                     const CodecSpec& codec);
std::pair<Ciphertext, CodecSpec> load_ciphertext(const std::filesystem::path& path);

} // namespace qgel
