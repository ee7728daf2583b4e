#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demo.hpp"
#include "handles.hpp"
#include "qgelgamal.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

int fail_usage(const std::string& message) {
    std::fprintf(stderr, "qgel: %s\n", message.c_str());
    return kExitUsage;
}

int fail(const std::string& message) {
    std::fprintf(stderr, "qgel: %s\n", message.c_str());
    return kExitFailure;
}

int fail_api(const char* what) {
    std::fprintf(stderr, "qgel: %s: %s\n", what, qgel_last_error());
    return kExitFailure;
}

uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

bool read_file_bytes(const std::string& path, std::vector<uint8_t>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string data = std::move(buf).str();
    out.assign(data.begin(), data.end());
    return !in.bad();
}

bool write_file_bytes(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        return false;
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    return static_cast<bool>(out);
}

// whitespace- or comma-separated decimal symbols
bool parse_symbols(const std::string& text, std::vector<uint32_t>& out, std::string& error) {
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            error = std::string("unexpected character '") + c + "' in symbol input";
            return false;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        uint32_t value = 0;
        auto result = std::from_chars(text.data() + start, text.data() + i, value);
        if (result.ec != std::errc()) {
            error = "symbol '" + text.substr(start, i - start) + "' does not fit 32 bits";
            return false;
        }
        out.push_back(value);
    }
    return true;
}

bool parse_exponent_triple(const std::string& text, int64_t& r, int64_t& s, int64_t& t) {
    int64_t* slots[3] = {&r, &s, &t};
    std::size_t begin = 0;
    for (int part = 0; part < 3; ++part) {
        std::size_t end = part == 2 ? text.size() : text.find(',', begin);
        if (end == std::string::npos)
            return false;
        int64_t value = 0;
        auto result = std::from_chars(text.data() + begin, text.data() + end, value);
        if (result.ec != std::errc() || result.ptr != text.data() + end || value < 1)
            return false;
        *slots[part] = value;
        begin = end + 1;
    }
    return true;
}

int cmd_keygen(std::size_t order, bool seeded, uint64_t seed, const std::string& pub_path,
               const std::string& priv_path) {
    if (order < 2 || order > 256)
        return fail_usage("--order must be between 2 and 256");

    RngHandle rng;
    if (qgel_rng_new(seeded ? seed : entropy_seed(), rng.out()) != QGEL_OK)
        return fail_api("rng");

    PublicKeyHandle pub;
    PrivateKeyHandle priv;
    if (qgel_keygen_random(order, rng, pub.out(), priv.out()) != QGEL_OK)
        return fail_api("keygen");
    if (qgel_public_key_save(pub, pub_path.c_str()) != QGEL_OK)
        return fail_api(pub_path.c_str());
    if (qgel_private_key_save(priv, priv_path.c_str()) != QGEL_OK)
        return fail_api(priv_path.c_str());

    std::printf("wrote %s and %s (order %zu)\n", pub_path.c_str(), priv_path.c_str(), order);
    return 0;
}

int cmd_encrypt(const std::string& pub_path, const std::string& in_path,
                const std::string& out_path, bool seeded, uint64_t seed,
                const std::string& eph_text, bool raw_symbols) {
    PublicKeyHandle pub;
    if (qgel_public_key_load(pub_path.c_str(), pub.out()) != QGEL_OK)
        return fail_api(pub_path.c_str());
    std::size_t order = qgel_public_key_order(pub);

    std::vector<uint8_t> input;
    if (!read_file_bytes(in_path, input))
        return fail("cannot read " + in_path);

    std::vector<uint32_t> symbols;
    if (raw_symbols) {
        std::string error;
        if (!parse_symbols(std::string(input.begin(), input.end()), symbols, error))
            return fail(error);
    } else {
        uint32_t width = 0;
        if (qgel_codec_width(static_cast<uint32_t>(order), &width) != QGEL_OK)
            return fail_api("codec");
        symbols.resize(input.size() * width);
        if (qgel_codec_encode(input.data(), input.size(), static_cast<uint32_t>(order),
                              symbols.data()) != QGEL_OK)
            return fail_api("codec");
    }

    CiphertextHandle ct;
    if (!eph_text.empty()) {
        int64_t r, s, t;
        if (!parse_exponent_triple(eph_text, r, s, t))
            return fail_usage("--eph expects r,s,t with each part at least 1");
        if (qgel_ephemeral_is_degenerate(pub, r, s, t))
            std::fprintf(stderr,
                         "qgel: warning: ephemeral exponents collapse a component of the "
                         "transmitted isotopy to the identity\n");
        if (qgel_encrypt_with(pub, symbols.data(), symbols.size(), r, s, t, ct.out()) != QGEL_OK)
            return fail_api("encrypt");
    } else {
        RngHandle rng;
        if (qgel_rng_new(seeded ? seed : entropy_seed(), rng.out()) != QGEL_OK)
            return fail_api("rng");
        if (qgel_encrypt(pub, symbols.data(), symbols.size(), rng, ct.out()) != QGEL_OK)
            return fail_api("encrypt");
    }

    if (qgel_ciphertext_save(ct, raw_symbols ? 1 : 0, out_path.c_str()) != QGEL_OK)
        return fail_api(out_path.c_str());
    std::printf("wrote %s (%zu symbols)\n", out_path.c_str(), qgel_ciphertext_body_len(ct));
    return 0;
}

int cmd_decrypt(const std::string& pub_path, const std::string& priv_path,
                const std::string& in_path, const std::string& out_path) {
    PublicKeyHandle pub;
    if (qgel_public_key_load(pub_path.c_str(), pub.out()) != QGEL_OK)
        return fail_api(pub_path.c_str());
    PrivateKeyHandle priv;
    if (qgel_private_key_load(priv_path.c_str(), priv.out()) != QGEL_OK)
        return fail_api(priv_path.c_str());

    CiphertextHandle ct;
    int raw = 0;
    if (qgel_ciphertext_load(in_path.c_str(), ct.out(), &raw) != QGEL_OK)
        return fail_api(in_path.c_str());

    std::vector<uint32_t> symbols(qgel_ciphertext_body_len(ct));
    if (qgel_decrypt(pub, priv, ct, symbols.data(), symbols.size()) != QGEL_OK)
        return fail_api("decrypt");

    if (raw) {
        std::string text;
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (i)
                text += ' ';
            text += std::to_string(symbols[i]);
        }
        if (!symbols.empty())
            text += '\n';
        if (!write_file_bytes(out_path, text.data(), text.size()))
            return fail("cannot write " + out_path);
    } else {
        std::size_t order = qgel_public_key_order(pub);
        uint32_t width = 0;
        if (qgel_codec_width(static_cast<uint32_t>(order), &width) != QGEL_OK)
            return fail_api("codec");
        std::vector<uint8_t> bytes(width == 0 ? 0 : symbols.size() / width);
        std::size_t written = 0;
        if (qgel_codec_decode(symbols.data(), symbols.size(), static_cast<uint32_t>(order),
                              bytes.data(), bytes.size(), &written) != QGEL_OK)
            return fail_api("codec");
        if (!write_file_bytes(out_path, bytes.data(), written))
            return fail("cannot write " + out_path);
    }
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_attack(const std::string& pub_path) {
    PublicKeyHandle pub;
    if (qgel_public_key_load(pub_path.c_str(), pub.out()) != QGEL_OK)
        return fail_api(pub_path.c_str());

    uint64_t values[3], moduli[3];
    qgel_status status = qgel_recover_exponents(pub, values, moduli);
    if (status == QGEL_ERR_NOT_FOUND)
        return fail("inconsistent key file: the powered isotopy is not a power of the base");
    if (status != QGEL_OK)
        return fail_api("recover");

    const char* names[3] = {"m", "n", "k"};
    for (int i = 0; i < 3; ++i)
        std::printf("%s = %llu (mod %llu)\n", names[i],
                    static_cast<unsigned long long>(values[i]),
                    static_cast<unsigned long long>(moduli[i]));

    // regenerate T^(m,n,k) from the recovered residues and compare
    IsotopyHandle base, powered, regenerated;
    if (qgel_public_key_base_isotopy(pub, base.out()) != QGEL_OK ||
        qgel_public_key_powered_isotopy(pub, powered.out()) != QGEL_OK)
        return fail_api("key components");
    if (qgel_isotopy_power(base, static_cast<int64_t>(values[0]),
                           static_cast<int64_t>(values[1]), static_cast<int64_t>(values[2]),
                           regenerated.out()) != QGEL_OK)
        return fail_api("regenerate");
    if (qgel_isotopy_equal(regenerated, powered) != 1)
        return fail("recovered exponents do not regenerate the powered isotopy");

    std::printf("regenerated isotopy power matches the public key\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasigroup analogue of the ElGamal scheme"};
    app.require_subcommand(1);

    // keygen
    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    std::size_t order = 0;
    uint64_t seed = 0;
    std::string pub_path, priv_path;
    keygen->add_option("--order", order, "alphabet order (2..256)")->required();
    auto* keygen_seed = keygen->add_option("--seed", seed, "seed for deterministic output");
    keygen->add_option("--out-pub", pub_path, "public key file")->required();
    keygen->add_option("--out-priv", priv_path, "private key file")->required();

    // encrypt
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file");
    std::string enc_pub, enc_in, enc_out, eph_text;
    bool raw_symbols = false;
    encrypt->add_option("--pub", enc_pub, "public key file")->required();
    encrypt->add_option("--in", enc_in, "input file")->required();
    encrypt->add_option("--out", enc_out, "ciphertext file")->required();
    auto* enc_seed = encrypt->add_option("--seed", seed, "seed for deterministic exponents");
    auto* enc_eph = encrypt->add_option("--eph", eph_text, "explicit exponents r,s,t");
    enc_seed->excludes(enc_eph);
    encrypt->add_flag("--raw-symbols", raw_symbols,
                      "input is whitespace/comma-separated symbols, not bytes");

    // decrypt
    auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    std::string dec_pub, dec_priv, dec_in, dec_out;
    decrypt->add_option("--pub", dec_pub, "public key file")->required();
    decrypt->add_option("--priv", dec_priv, "private key file")->required();
    decrypt->add_option("--in", dec_in, "ciphertext file")->required();
    decrypt->add_option("--out", dec_out, "output file")->required();

    // demo
    auto* demo = app.add_subcommand("demo", "run a built-in worked example");
    int example = 0;
    demo->add_option("--paper-example", example, "example id (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));

    // attack
    auto* attack = app.add_subcommand("attack", "recover private exponents from a public key");
    std::string attack_pub;
    attack->add_option("--pub", attack_pub, "public key file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "qgel: %s\n", e.what());
        return kExitUsage;
    }

    if (*keygen)
        return cmd_keygen(order, static_cast<bool>(*keygen_seed), seed, pub_path, priv_path);
    if (*encrypt)
        return cmd_encrypt(enc_pub, enc_in, enc_out, static_cast<bool>(*enc_seed), seed, eph_text,
                           raw_symbols);
    if (*decrypt)
        return cmd_decrypt(dec_pub, dec_priv, dec_in, dec_out);
    if (*demo)
        return run_demo(example);
    if (*attack)
        return cmd_attack(attack_pub);
    return kExitUsage;
}
