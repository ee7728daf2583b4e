#include "qgel/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgel/codec.hpp"
#include "qgel/error.hpp"

namespace qgel {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kFileVersion = 1;

// Writing is done by hand so every permutation and every table row stays a
// one-line integer array regardless of length; parsing goes through nlohmann.

void append_ints(std::string& out, const std::vector<std::uint32_t>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(values[i]);
    }
    out += ']';
}

void append_isotopy(std::string& out, const Isotopy& t, const char* indent) {
    out += "[\n";
    const Permutation* components[3] = {&t.alpha(), &t.beta(), &t.gamma()};
    for (int i = 0; i < 3; ++i) {
        out += indent;
        out += "  ";
        append_ints(out, components[i]->images());
        out += i < 2 ? ",\n" : "\n";
    }
    out += indent;
    out += ']';
}

ojson parse(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse, std::string("invalid JSON: ") + e.what());
    }
}

void check_version(const ojson& j, const char* what) {
    std::int64_t version;
    try {
        version = j.at("version").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse, std::string(what) + ": " + e.what());
    }
    if (version != kFileVersion)
        raise(errc::validation, std::string(what) + " version " + std::to_string(version) +
                                    " not supported (expected " + std::to_string(kFileVersion) +
                                    ")");
}

Permutation perm_from_json(const ojson& j) {
    return Permutation(j.get<std::vector<std::uint32_t>>());
}

Isotopy isotopy_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 3)
        raise(errc::validation, "isotopy must be an array of three permutations");
    return Isotopy(perm_from_json(j[0]), perm_from_json(j[1]), perm_from_json(j[2]));
}

} // namespace

std::string public_key_to_json(const PublicKey& pub) {
    std::string out = "{\n";
    out += "  \"version\": " + std::to_string(kFileVersion) + ",\n";
    out += "  \"order\": " + std::to_string(pub.order()) + ",\n";
    out += "  \"quasigroup\": [\n";
    auto rows = pub.quasigroup().rows();
    for (std::size_t x = 0; x < rows.size(); ++x) {
        out += "    ";
        append_ints(out, rows[x]);
        out += x + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"isotopy\": ";
    append_isotopy(out, pub.base_isotopy(), "  ");
    out += ",\n";
    out += "  \"isotopy_pow\": ";
    append_isotopy(out, pub.powered_isotopy(), "  ");
    out += ",\n";
    out += "  \"leader\": " + std::to_string(pub.leader()) + "\n";
    out += "}\n";
    return out;
}

PublicKey public_key_from_json(std::string_view text) {
    ojson j = parse(text);
    check_version(j, "public key file");
    try {
        auto order = j.at("order").get<std::size_t>();
        auto rows = j.at("quasigroup").get<std::vector<std::vector<std::uint32_t>>>();
        if (rows.size() != order)
            raise(errc::validation, "quasigroup has " + std::to_string(rows.size()) +
                                        " rows, header says order " + std::to_string(order));
        Quasigroup q = Quasigroup::from_rows(rows);
        Isotopy base = isotopy_from_json(j.at("isotopy"));
        Isotopy powered = isotopy_from_json(j.at("isotopy_pow"));
        auto leader = j.at("leader").get<std::uint32_t>();
        return PublicKey(std::move(q), std::move(base), std::move(powered), leader);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse, std::string("public key file: ") + e.what());
    }
}

std::string private_key_to_json(const PrivateKey& priv) {
    std::string out = "{\n";
    out += "  \"version\": " + std::to_string(kFileVersion) + ",\n";
    out += "  \"m\": " + std::to_string(priv.m) + ",\n";
    out += "  \"n\": " + std::to_string(priv.n) + ",\n";
    out += "  \"k\": " + std::to_string(priv.k) + "\n";
    out += "}\n";
    return out;
}

PrivateKey private_key_from_json(std::string_view text) {
    ojson j = parse(text);
    check_version(j, "private key file");
    PrivateKey priv;
    try {
        priv.m = j.at("m").get<std::int64_t>();
        priv.n = j.at("n").get<std::int64_t>();
        priv.k = j.at("k").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse, std::string("private key file: ") + e.what());
    }
    if (priv.m < 1 || priv.n < 1 || priv.k < 1)
        raise(errc::validation, "private exponents must all be at least 1");
    return priv;
}

std::string ciphertext_to_json(const Ciphertext& ct, const CodecSpec& codec) {
    std::string out = "{\n";
    out += "  \"version\": " + std::to_string(kFileVersion) + ",\n";
    out += "  \"ephemeral\": ";
    append_isotopy(out, ct.ephemeral, "  ");
    out += ",\n";
    out += "  \"body\": ";
    append_ints(out, ct.body);
    out += ",\n";
    if (codec.raw)
        out += "  \"codec\": \"raw\"\n";
    else
        out += "  \"codec\": {\"order\": " + std::to_string(codec.order) +
               ", \"width\": " + std::to_string(codec.width) + "}\n";
    out += "}\n";
    return out;
}

std::pair<Ciphertext, CodecSpec> ciphertext_from_json(std::string_view text) {
    ojson j = parse(text);
    check_version(j, "ciphertext file");
    try {
        Isotopy ephemeral = isotopy_from_json(j.at("ephemeral"));
        auto body = j.at("body").get<std::vector<std::uint32_t>>();
        std::size_t n = ephemeral.degree();
        for (std::size_t i = 0; i < body.size(); ++i)
            if (body[i] >= n)
                raise(errc::validation, "body symbol " + std::to_string(body[i]) +
                                            " at position " + std::to_string(i) +
                                            " out of range for order " + std::to_string(n));
        CodecSpec codec;
        const ojson& c = j.at("codec");
        if (c.is_string() && c.get<std::string>() == "raw") {
            codec.raw = true;
        } else if (c.is_object()) {
            codec.raw = false;
            codec.order = c.at("order").get<std::uint32_t>();
            codec.width = c.at("width").get<std::uint32_t>();
            if (codec.order != n)
                raise(errc::validation, "codec order " + std::to_string(codec.order) +
                                            " does not match ephemeral degree " +
                                            std::to_string(n));
            if (codec.width != codec_width(codec.order))
                raise(errc::validation, "codec width " + std::to_string(codec.width) +
                                            " wrong for order " + std::to_string(codec.order));
        } else {
            raise(errc::validation, "codec must be \"raw\" or an {order, width} object");
        }
        return {Ciphertext{std::move(ephemeral), std::move(body)}, codec};
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse, std::string("ciphertext file: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(errc::io, "cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        raise(errc::io, "error reading " + path.string());
    return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(errc::io, "cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        raise(errc::io, "error writing " + path.string());
}

void save_public_key(const std::filesystem::path& path, const PublicKey& pub) {
    write_text_file(path, public_key_to_json(pub));
}

PublicKey load_public_key(const std::filesystem::path& path) {
    return public_key_from_json(read_text_file(path));
}

void save_private_key(const std::filesystem::path& path, const PrivateKey& priv) {
    write_text_file(path, private_key_to_json(priv));
}

PrivateKey load_private_key(const std::filesystem::path& path) {
    return private_key_from_json(read_text_file(path));
}

void save_ciphertext(const std::filesystem::path& path, const Ciphertext& ct,
                     const CodecSpec& codec) {
    write_text_file(path, ciphertext_to_json(ct, codec));
}

std::pair<Ciphertext, CodecSpec> load_ciphertext(const std::filesystem::path& path) {
    return ciphertext_from_json(read_text_file(path));
}

} // namespace qgel
