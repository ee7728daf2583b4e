// Behavioral checks for the command-line tool, driven through a subprocess.
// Usage: qgel_cli_checks <path-to-qgel-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "reference_fixtures.hpp"
#include "qgel/scheme.hpp"
#include "qgel/serialize.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define CHECK(cond)                                                                    \
    do {                                                                               \
        if (!(cond)) {                                                                 \
            std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);                \
            ++g_failures;                                                              \
        }                                                                              \
    } while (0)

std::string g_cli;
fs::path g_dir;

int run(const std::string& args, std::string* output = nullptr) {
    fs::path out_file = g_dir / "stdout.txt";
    std::string command =
        "\"" + g_cli + "\" " + args + " > \"" + out_file.string() + "\" 2>&1";
    int status = std::system(command.c_str());
    if (output) {
        std::ifstream in(out_file);
        output->assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    if (status == -1)
        return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const fs::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

void check_usage_errors() {
    CHECK(run("keygen --order 1 --out-pub a.pub --out-priv a.priv") == 2);
    CHECK(run("keygen --order 257 --out-pub a.pub --out-priv a.priv") == 2);
    CHECK(run("keygen --order 7") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("demo --paper-example 4") == 2);
    CHECK(run("demo") == 2);
}

void check_keygen_determinism() {
    fs::path pub1 = g_dir / "det1.pub", priv1 = g_dir / "det1.priv";
    fs::path pub2 = g_dir / "det2.pub", priv2 = g_dir / "det2.priv";
    std::string base = "keygen --order 7 --seed 1 ";
    CHECK(run(base + "--out-pub \"" + pub1.string() + "\" --out-priv \"" + priv1.string() +
              "\"") == 0);
    CHECK(run(base + "--out-pub \"" + pub2.string() + "\" --out-priv \"" + priv2.string() +
              "\"") == 0);
    CHECK(slurp(pub1) == slurp(pub2));
    CHECK(slurp(priv1) == slurp(priv2));

    fs::path pub3 = g_dir / "det3.pub", priv3 = g_dir / "det3.priv";
    CHECK(run("keygen --order 7 --seed 2 --out-pub \"" + pub3.string() + "\" --out-priv \"" +
              priv3.string() + "\"") == 0);
    CHECK(slurp(pub1) != slurp(pub3));

    // keys written by the tool load back through the library
    CHECK(qgel::load_public_key(pub1).order() == 7);
}

void check_reference_vectors(const fs::path& pub_path, const fs::path& priv_path) {
    fs::path msg = g_dir / "msg.txt";
    fs::path ct = g_dir / "msg.ct";
    fs::path out = g_dir / "msg.out";
    spit(msg, "6 3 0 5 1 2 4 0 3\n");

    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --eph 5,3,6 --raw-symbols") == 0);
    auto [loaded, codec] = qgel::load_ciphertext(ct);
    CHECK(codec.raw);
    CHECK(loaded.body == fixtures::kCipher);
    CHECK(loaded.ephemeral == fixtures::isotopy().power(5, 3, 6));

    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 0);
    CHECK(slurp(out) == "6 3 0 5 1 2 4 0 3\n");

    // comma-separated input parses the same way
    spit(msg, "6,3,0,5,1,2,4,0,3");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --eph 5,3,6 --raw-symbols") == 0);
    auto [loaded2, codec2] = qgel::load_ciphertext(ct);
    CHECK(loaded2.body == fixtures::kCipher);
}

void check_byte_mode(const fs::path& pub_path, const fs::path& priv_path) {
    fs::path msg = g_dir / "byte.in";
    fs::path ct = g_dir / "byte.ct";
    fs::path out = g_dir / "byte.out";

    spit(msg, "B");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --seed 9") == 0);
    auto [loaded, codec] = qgel::load_ciphertext(ct);
    CHECK(!codec.raw);
    CHECK(codec.order == 7);
    CHECK(codec.width == 3);
    CHECK(loaded.body.size() == 3);
    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 0);
    CHECK(slurp(out) == "B");

    // deterministic under a fixed seed
    fs::path ct2 = g_dir / "byte2.ct";
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct2.string() + "\" --seed 9") == 0);
    CHECK(slurp(ct) == slurp(ct2));

    // empty input gives an empty body and restores an empty file
    spit(msg, "");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --seed 9") == 0);
    auto [empty_ct, empty_codec] = qgel::load_ciphertext(ct);
    CHECK(empty_ct.body.empty());
    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 0);
    CHECK(slurp(out).empty());
}

void check_validation_failures(const fs::path& pub_path, const fs::path& priv_path) {
    fs::path msg = g_dir / "bad.in";
    fs::path ct = g_dir / "bad.ct";
    fs::path out = g_dir / "bad.out";

    // symbol outside the order-7 alphabet
    spit(msg, "6 7 0");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --seed 1 --raw-symbols") == 3);

    // malformed exponent triples are usage errors
    spit(msg, "1 2 3");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --eph 0,1,1 --raw-symbols") == 2);
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --eph 1,2 --raw-symbols") == 2);
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --seed 1 --eph 1,2,3 --raw-symbols") == 2);

    // a tampered ciphertext symbol is rejected on load
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --seed 1 --raw-symbols") == 0);
    std::string text = slurp(ct);
    auto pos = text.find("\"body\"");
    CHECK(pos != std::string::npos);
    pos = text.find_first_of("0123456789", pos + 7);
    text[pos] = '9';
    spit(ct, text);
    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 3);

    // degree mismatch between key and ciphertext
    fs::path pub16 = g_dir / "order16.pub";
    fs::path priv16 = g_dir / "order16.priv";
    CHECK(run("keygen --order 16 --seed 5 --out-pub \"" + pub16.string() + "\" --out-priv \"" +
              priv16.string() + "\"") == 0);
    spit(msg, "1 2 3");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --seed 1 --raw-symbols") == 0);
    CHECK(run("decrypt --pub \"" + pub16.string() + "\" --priv \"" + priv16.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 3);

    // unreadable input and unwritable output
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" +
              (g_dir / "missing.in").string() + "\" --out \"" + ct.string() + "\" --seed 1") ==
          3);
    spit(msg, "1 2 3");
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + (g_dir / "nodir" / "x.ct").string() + "\" --seed 1") == 3);

    // a degenerate explicit ephemeral still works, with a warning
    std::string output;
    CHECK(run("encrypt --pub \"" + pub_path.string() + "\" --in \"" + msg.string() +
              "\" --out \"" + ct.string() + "\" --eph 12,4,7 --raw-symbols",
              &output) == 0);
    CHECK(output.find("warning") != std::string::npos);
    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 0);
    CHECK(slurp(out) == "1 2 3\n");

    // a byte-mode body that decrypts to an overflowing digit group is rejected
    qgel::PublicKey pub = qgel::load_public_key(pub_path);
    qgel::Ciphertext corrupt =
        qgel::encrypt(pub, std::vector<std::uint32_t>{5, 1, 4}, qgel::ExponentTriple{2, 2, 2});
    qgel::save_ciphertext(ct, corrupt, qgel::CodecSpec{false, 7, 3});
    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 3);

    // ... as is a byte-mode body whose length is not a multiple of the width
    qgel::Ciphertext ragged =
        qgel::encrypt(pub, std::vector<std::uint32_t>{1, 2}, qgel::ExponentTriple{2, 2, 2});
    qgel::save_ciphertext(ct, ragged, qgel::CodecSpec{false, 7, 3});
    CHECK(run("decrypt --pub \"" + pub_path.string() + "\" --priv \"" + priv_path.string() +
              "\" --in \"" + ct.string() + "\" --out \"" + out.string() + "\"") == 3);
}

void check_attack(const fs::path& pub_path) {
    std::string output;
    CHECK(run("attack --pub \"" + pub_path.string() + "\"", &output) == 0);
    CHECK(output.find("m = 3 (mod 12)") != std::string::npos);
    CHECK(output.find("n = 2 (mod 4)") != std::string::npos);
    CHECK(output.find("k = 5 (mod 7)") != std::string::npos);
    CHECK(output.find("matches the public key") != std::string::npos);

    // inconsistent key file: swap the powered isotopy for an unrelated one
    qgel::PublicKey forged(fixtures::table(fixtures::kTable2), fixtures::isotopy(),
                           qgel::Isotopy(qgel::Permutation::parse_cycles("(0 1)", 7),
                                         qgel::Permutation::identity(7),
                                         qgel::Permutation::identity(7)),
                           3);
    fs::path forged_path = g_dir / "forged.pub";
    qgel::save_public_key(forged_path, forged);
    CHECK(run("attack --pub \"" + forged_path.string() + "\"", &output) == 3);
}

void check_demos() {
    std::string output;
    CHECK(run("demo --paper-example 1", &output) == 0);
    CHECK(output.find("21") != std::string::npos);
    CHECK(output.find("17") != std::string::npos);

    CHECK(run("demo --paper-example 2", &output) == 0);
    CHECK(output.find("94") != std::string::npos);
    CHECK(output.find("28") != std::string::npos);

    CHECK(run("demo --paper-example 3", &output) == 0);
    CHECK(output.find("620065311") != std::string::npos);
    CHECK(output.find("630512403") != std::string::npos);
    CHECK(output.find("MISMATCH") == std::string::npos);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: qgel_cli_checks <qgel-binary>\n");
        return 2;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / ("qgel_cli_checks_" + std::to_string(::getpid()));
    fs::create_directories(g_dir);

    // reference key material shared by several checks
    fs::path pub_path = g_dir / "ref.pub";
    fs::path priv_path = g_dir / "ref.priv";
    qgel::PublicKey pub = qgel::keygen(fixtures::table(fixtures::kTable2), fixtures::isotopy(),
                                       qgel::PrivateKey{3, 6, 5}, 3);
    qgel::save_public_key(pub_path, pub);
    qgel::save_private_key(priv_path, qgel::PrivateKey{3, 6, 5});

    check_usage_errors();
    check_keygen_determinism();
    check_reference_vectors(pub_path, priv_path);
    check_byte_mode(pub_path, priv_path);
    check_validation_failures(pub_path, priv_path);
    check_attack(pub_path);
    check_demos();

    fs::remove_all(g_dir);
    if (g_failures) {
        std::printf("%d cli check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all cli checks passed\n");
    return 0;
}
