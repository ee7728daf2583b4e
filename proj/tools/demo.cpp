#include "demo.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "handles.hpp"
#include "qgelgamal.h"

namespace {

constexpr int kExitMismatch = 3;

// ------------------------------------------------------------------ data --

constexpr std::size_t kN = 7;

constexpr uint32_t kBaseTable[kN][kN] = {
    {5, 2, 6, 4, 0, 3, 1}, {1, 6, 5, 3, 4, 2, 0}, {0, 5, 4, 6, 3, 1, 2}, {4, 1, 3, 0, 2, 6, 5},
    {2, 4, 0, 1, 6, 5, 3}, {6, 3, 1, 2, 5, 0, 4}, {3, 0, 2, 5, 1, 4, 6},
};

constexpr const char* kAlphaCycles = "(2 3 4)(0 5 1 6)";
constexpr const char* kBetaCycles = "(0 3 2 1)(5 6)";
constexpr const char* kGammaCycles = "(1 2 3 6 0 5 4)";

constexpr int64_t kPrivM = 3, kPrivN = 6, kPrivK = 5;
constexpr int64_t kEphR = 5, kEphS = 3, kEphT = 6;
constexpr uint32_t kLeader = 3;

constexpr uint32_t kMessage[] = {6, 3, 0, 5, 1, 2, 4, 0, 3};
constexpr uint32_t kExpectedBody[] = {6, 2, 0, 0, 6, 5, 3, 1, 1};
constexpr std::size_t kMessageLen = 9;

// expected stages of the first chain (alpha, then beta, then gamma^-1)
constexpr uint32_t kAfterAlpha[kN][kN] = {
    {6, 3, 1, 2, 5, 0, 4}, {3, 0, 2, 5, 1, 4, 6}, {4, 1, 3, 0, 2, 6, 5}, {2, 4, 0, 1, 6, 5, 3},
    {0, 5, 4, 6, 3, 1, 2}, {1, 6, 5, 3, 4, 2, 0}, {5, 2, 6, 4, 0, 3, 1},
};
constexpr uint32_t kAfterBeta[kN][kN] = {
    {2, 6, 3, 1, 5, 4, 0}, {5, 3, 0, 2, 1, 6, 4}, {0, 4, 1, 3, 2, 5, 6}, {1, 2, 4, 0, 6, 3, 5},
    {6, 0, 5, 4, 3, 2, 1}, {3, 1, 6, 5, 4, 0, 2}, {4, 5, 2, 6, 0, 1, 3},
};
constexpr uint32_t kAfterGamma[kN][kN] = {
    {1, 3, 2, 4, 0, 5, 6}, {0, 2, 6, 1, 4, 3, 5}, {6, 5, 4, 2, 1, 0, 3}, {4, 1, 5, 6, 3, 2, 0},
    {3, 6, 0, 5, 2, 1, 4}, {2, 4, 3, 0, 5, 6, 1}, {5, 0, 1, 3, 6, 4, 2},
};

// stages of the private chain T^(3,6,5)
constexpr uint32_t kPrivAfterAlpha[kN][kN] = {
    {3, 0, 2, 5, 1, 4, 6}, {6, 3, 1, 2, 5, 0, 4}, {0, 5, 4, 6, 3, 1, 2}, {4, 1, 3, 0, 2, 6, 5},
    {2, 4, 0, 1, 6, 5, 3}, {5, 2, 6, 4, 0, 3, 1}, {1, 6, 5, 3, 4, 2, 0},
};
constexpr uint32_t kPrivAfterBeta[kN][kN] = {
    {2, 5, 3, 0, 1, 4, 6}, {1, 2, 6, 3, 5, 0, 4}, {4, 6, 0, 5, 3, 1, 2}, {3, 0, 4, 1, 2, 6, 5},
    {0, 1, 2, 4, 6, 5, 3}, {6, 4, 5, 2, 0, 3, 1}, {5, 3, 1, 6, 4, 2, 0},
};
constexpr uint32_t kPrivAfterGamma[kN][kN] = {
    {6, 1, 0, 4, 3, 2, 5}, {3, 6, 5, 0, 1, 4, 2}, {2, 5, 4, 1, 0, 3, 6}, {0, 4, 2, 3, 6, 5, 1},
    {4, 3, 6, 2, 5, 1, 0}, {5, 2, 1, 6, 4, 0, 3}, {1, 0, 3, 5, 2, 6, 4},
};

// stages of the combined chain T^(15,18,30); rows and columns repeat the
// private chain because alpha^15 = alpha^3 and beta^18 = beta^6
constexpr uint32_t kSharedTable[kN][kN] = {
    {4, 6, 1, 3, 5, 0, 2}, {5, 4, 2, 1, 6, 3, 0}, {0, 2, 3, 6, 1, 5, 4}, {1, 3, 0, 5, 4, 2, 6},
    {3, 5, 4, 0, 2, 6, 1}, {2, 0, 6, 4, 3, 1, 5}, {6, 1, 5, 2, 0, 4, 3},
};
constexpr uint32_t kSharedDivision[kN][kN] = {
    {5, 2, 6, 3, 0, 4, 1}, {6, 3, 2, 5, 1, 0, 4}, {0, 4, 1, 2, 6, 5, 3}, {2, 0, 5, 1, 4, 3, 6},
    {3, 6, 4, 0, 2, 1, 5}, {1, 5, 0, 4, 3, 6, 2}, {4, 1, 3, 6, 5, 2, 0},
};

constexpr const char* kAlphaPowCycles = "(0 6 1 5)";    // alpha^3 and alpha^15
constexpr const char* kBetaPowCycles = "(0 2)(1 3)";    // beta^6 and beta^18
constexpr const char* kGammaPrivCycles = "(0 3 1 5 6 2 4)"; // gamma^5
constexpr const char* kGammaCombCycles = "(0 4 2 6 5 1 3)"; // gamma^30
constexpr const char* kGammaCombInvCycles = "(0 3 1 5 6 2 4)";

constexpr uint32_t kEphAlpha[kN] = {5, 6, 4, 2, 3, 1, 0}; // alpha^5
constexpr uint32_t kEphBeta[kN] = {1, 2, 3, 0, 4, 6, 5};  // beta^3
constexpr uint32_t kEphGamma[kN] = {6, 4, 1, 2, 5, 0, 3}; // gamma^6

// --------------------------------------------------------------- helpers --

bool api_ok(qgel_status status, const char* what) {
    if (status == QGEL_OK)
        return true;
    std::fprintf(stderr, "qgel: %s: %s\n", what, qgel_last_error());
    return false;
}

void print_table(const char* title, const qgel_quasigroup* q) {
    std::size_t n = qgel_quasigroup_order(q);
    std::vector<uint32_t> flat(n * n);
    qgel_quasigroup_table(q, flat.data(), flat.size());
    if (title[0])
        std::printf("%s\n", title);
    std::printf("      ");
    for (std::size_t y = 0; y < n; ++y)
        std::printf("%3zu", y);
    std::printf("\n");
    for (std::size_t x = 0; x < n; ++x) {
        std::printf("  %3zu|", x);
        for (std::size_t y = 0; y < n; ++y)
            std::printf("%3u", flat[x * n + y]);
        std::printf("\n");
    }
}

bool check_table(const char* what, const qgel_quasigroup* got, const uint32_t (&expected)[kN][kN]) {
    std::size_t n = qgel_quasigroup_order(got);
    if (n != kN) {
        std::printf("MISMATCH at %s: order %zu, expected %zu\n", what, n, kN);
        return false;
    }
    std::vector<uint32_t> flat(n * n);
    qgel_quasigroup_table(got, flat.data(), flat.size());
    for (std::size_t x = 0; x < kN; ++x)
        for (std::size_t y = 0; y < kN; ++y)
            if (flat[x * kN + y] != expected[x][y]) {
                std::printf("MISMATCH at %s: cell (%zu, %zu) is %u, expected %u\n", what, x, y,
                            flat[x * kN + y], expected[x][y]);
                return false;
            }
    return true;
}

bool check_cycles(const char* what, const qgel_perm* got, const char* expected) {
    CString s;
    if (!api_ok(qgel_perm_cycle_string(got, s.out()), what))
        return false;
    std::printf("  %s = %s\n", what, s.get());
    if (std::strcmp(s.get(), expected) != 0) {
        std::printf("MISMATCH at %s: got %s, expected %s\n", what, s.get(), expected);
        return false;
    }
    return true;
}

bool check_images(const char* what, const qgel_perm* got, const uint32_t (&expected)[kN]) {
    uint32_t images[kN];
    if (!api_ok(qgel_perm_images(got, images, kN), what))
        return false;
    std::printf("  %s = [", what);
    for (std::size_t i = 0; i < kN; ++i)
        std::printf("%s%u", i ? " " : "", images[i]);
    std::printf("]\n");
    for (std::size_t i = 0; i < kN; ++i)
        if (images[i] != expected[i]) {
            std::printf("MISMATCH at %s: image of %zu is %u, expected %u\n", what, i, images[i],
                        expected[i]);
            return false;
        }
    return true;
}

bool check_string(const char* what, const std::string& got, const std::string& expected) {
    std::printf("  %s = %s\n", what, got.c_str());
    if (got != expected) {
        std::printf("MISMATCH at %s: got %s, expected %s\n", what, got.c_str(), expected.c_str());
        return false;
    }
    return true;
}

std::string join_symbols(const std::vector<uint32_t>& symbols) {
    std::string out;
    for (uint32_t s : symbols)
        out += std::to_string(s);
    return out;
}

// ----------------------------------------------------- classical walkers --

int run_classic(const char* title, const char* p, const char* g, const char* c, const char* k,
                const char* m, const char* want_d, const char* want_r, const char* want_e) {
    std::printf("%s\n", title);
    std::printf("  p = %s, g = %s, private c = %s\n", p, g, c);

    CString d;
    if (!api_ok(qgel_classic_keygen(p, g, c, d.out()), "keygen"))
        return kExitMismatch;
    if (!check_string("public d = g^c mod p", d.get(), want_d))
        return kExitMismatch;

    CString r, e;
    if (!api_ok(qgel_classic_encrypt(p, g, d.get(), m, k, r.out(), e.out()), "encrypt"))
        return kExitMismatch;
    std::printf("  message m = %s, ephemeral k = %s\n", m, k);
    if (!check_string("r = g^k mod p", r.get(), want_r))
        return kExitMismatch;
    if (!check_string("e = m*d^k mod p", e.get(), want_e))
        return kExitMismatch;

    CString recovered;
    if (!api_ok(qgel_classic_decrypt(p, c, r.get(), e.get(), recovered.out()), "decrypt"))
        return kExitMismatch;
    if (!check_string("decrypted m = e*r^(p-1-c) mod p", recovered.get(), m))
        return kExitMismatch;

    std::printf("  ok\n");
    return 0;
}

// --------------------------------------------------------------- demo 3 --

int run_quasigroup_demo() {
    std::printf("Quasigroup scheme walkthrough (order 7)\n\n");

    QuasigroupHandle base;
    if (!api_ok(qgel_quasigroup_from_table(&kBaseTable[0][0], kN, base.out()), "base table"))
        return kExitMismatch;
    print_table("Base quasigroup (Q, f):", base);

    PermHandle alpha, beta, gamma, id;
    if (!api_ok(qgel_perm_parse_cycles(kAlphaCycles, kN, alpha.out()), "alpha") ||
        !api_ok(qgel_perm_parse_cycles(kBetaCycles, kN, beta.out()), "beta") ||
        !api_ok(qgel_perm_parse_cycles(kGammaCycles, kN, gamma.out()), "gamma") ||
        !api_ok(qgel_perm_identity(kN, id.out()), "identity"))
        return kExitMismatch;

    std::printf("\nIsotopy T = (alpha, beta, gamma):\n");
    if (!check_cycles("alpha", alpha, "(0 5 1 6)(2 3 4)") ||
        !check_cycles("beta", beta, "(0 3 2 1)(5 6)") ||
        !check_cycles("gamma", gamma, "(0 5 4 1 2 3 6)"))
        return kExitMismatch;
    PermHandle gamma_inv;
    if (!api_ok(qgel_perm_inverse(gamma, gamma_inv.out()), "gamma inverse") ||
        !check_cycles("gamma^-1", gamma_inv, "(0 6 3 2 1 4 5)"))
        return kExitMismatch;

    // the chain one map at a time
    IsotopyHandle rows_only, rows_cols, full;
    if (!api_ok(qgel_isotopy_new(alpha, id, id, rows_only.out()), "row isotopy") ||
        !api_ok(qgel_isotopy_new(alpha, beta, id, rows_cols.out()), "row+column isotopy") ||
        !api_ok(qgel_isotopy_new(alpha, beta, gamma, full.out()), "full isotopy"))
        return kExitMismatch;

    QuasigroupHandle stage1, stage2, stage3;
    if (!api_ok(qgel_quasigroup_apply_isotopy(base, rows_only, stage1.out()), "row stage") ||
        !api_ok(qgel_quasigroup_apply_isotopy(base, rows_cols, stage2.out()), "column stage") ||
        !api_ok(qgel_quasigroup_apply_isotopy(base, full, stage3.out()), "entry stage"))
        return kExitMismatch;

    std::printf("\nAfter the row map alpha:\n");
    print_table("", stage1);
    if (!check_table("row stage", stage1, kAfterAlpha))
        return kExitMismatch;
    std::printf("After the column map beta:\n");
    print_table("", stage2);
    if (!check_table("column stage", stage2, kAfterBeta))
        return kExitMismatch;
    std::printf("After the entry map gamma^-1 (the image T(Q, f)):\n");
    print_table("", stage3);
    if (!check_table("entry stage", stage3, kAfterGamma))
        return kExitMismatch;

    // key generation
    std::printf("\nPrivate exponents: m = %lld, n = %lld, k = %lld\n",
                static_cast<long long>(kPrivM), static_cast<long long>(kPrivN),
                static_cast<long long>(kPrivK));
    IsotopyHandle powered;
    if (!api_ok(qgel_isotopy_power(full, kPrivM, kPrivN, kPrivK, powered.out()), "T^(m,n,k)"))
        return kExitMismatch;
    std::printf("Published power T^(m,n,k):\n");
    PermHandle pa, pb, pg;
    if (!api_ok(qgel_isotopy_component(powered, 0, pa.out()), "alpha^m") ||
        !api_ok(qgel_isotopy_component(powered, 1, pb.out()), "beta^n") ||
        !api_ok(qgel_isotopy_component(powered, 2, pg.out()), "gamma^k"))
        return kExitMismatch;
    if (!check_cycles("alpha^3", pa, kAlphaPowCycles) ||
        !check_cycles("beta^6", pb, kBetaPowCycles) ||
        !check_cycles("gamma^5", pg, kGammaPrivCycles))
        return kExitMismatch;

    IsotopyHandle priv_rows, priv_cols;
    if (!api_ok(qgel_isotopy_new(pa, id, id, priv_rows.out()), "power row isotopy") ||
        !api_ok(qgel_isotopy_new(pa, pb, id, priv_cols.out()), "power row+column isotopy"))
        return kExitMismatch;
    QuasigroupHandle pstage1, pstage2, pstage3;
    if (!api_ok(qgel_quasigroup_apply_isotopy(base, priv_rows, pstage1.out()), "power rows") ||
        !api_ok(qgel_quasigroup_apply_isotopy(base, priv_cols, pstage2.out()), "power columns") ||
        !api_ok(qgel_quasigroup_apply_isotopy(base, powered, pstage3.out()), "power entries"))
        return kExitMismatch;
    std::printf("\nAfter the row map alpha^3:\n");
    print_table("", pstage1);
    if (!check_table("power row stage", pstage1, kPrivAfterAlpha))
        return kExitMismatch;
    std::printf("After the column map beta^6:\n");
    print_table("", pstage2);
    if (!check_table("power column stage", pstage2, kPrivAfterBeta))
        return kExitMismatch;
    std::printf("After the entry map (gamma^5)^-1 (the image T^(3,6,5)(Q, f)):\n");
    print_table("", pstage3);
    if (!check_table("power entry stage", pstage3, kPrivAfterGamma))
        return kExitMismatch;

    // sender side
    std::printf("\nSender exponents: r = %lld, s = %lld, t = %lld\n",
                static_cast<long long>(kEphR), static_cast<long long>(kEphS),
                static_cast<long long>(kEphT));
    IsotopyHandle ephemeral;
    if (!api_ok(qgel_isotopy_power(full, kEphR, kEphS, kEphT, ephemeral.out()), "T^(r,s,t)"))
        return kExitMismatch;
    PermHandle ea, eb, eg;
    if (!api_ok(qgel_isotopy_component(ephemeral, 0, ea.out()), "alpha^r") ||
        !api_ok(qgel_isotopy_component(ephemeral, 1, eb.out()), "beta^s") ||
        !api_ok(qgel_isotopy_component(ephemeral, 2, eg.out()), "gamma^t"))
        return kExitMismatch;
    std::printf("Transmitted power T^(r,s,t):\n");
    if (!check_images("alpha^5", ea, kEphAlpha) || !check_images("beta^3", eb, kEphBeta) ||
        !check_images("gamma^6", eg, kEphGamma))
        return kExitMismatch;

    IsotopyHandle combined;
    if (!api_ok(qgel_isotopy_power(powered, kEphR, kEphS, kEphT, combined.out()),
                "T^(mr,ns,kt)"))
        return kExitMismatch;
    PermHandle ca, cb, cg;
    if (!api_ok(qgel_isotopy_component(combined, 0, ca.out()), "alpha^mr") ||
        !api_ok(qgel_isotopy_component(combined, 1, cb.out()), "beta^ns") ||
        !api_ok(qgel_isotopy_component(combined, 2, cg.out()), "gamma^kt"))
        return kExitMismatch;
    std::printf("Combined power T^(15,18,30):\n");
    if (!check_cycles("alpha^15", ca, kAlphaPowCycles) ||
        !check_cycles("beta^18", cb, kBetaPowCycles) ||
        !check_cycles("gamma^30", cg, kGammaCombCycles))
        return kExitMismatch;
    PermHandle cg_inv;
    if (!api_ok(qgel_perm_inverse(cg, cg_inv.out()), "(gamma^30)^-1") ||
        !check_cycles("(gamma^30)^-1", cg_inv, kGammaCombInvCycles))
        return kExitMismatch;

    IsotopyHandle comb_rows, comb_cols;
    if (!api_ok(qgel_isotopy_new(ca, id, id, comb_rows.out()), "combined row isotopy") ||
        !api_ok(qgel_isotopy_new(ca, cb, id, comb_cols.out()), "combined row+column isotopy"))
        return kExitMismatch;
    QuasigroupHandle cstage1, cstage2, shared;
    if (!api_ok(qgel_quasigroup_apply_isotopy(base, comb_rows, cstage1.out()), "combined rows") ||
        !api_ok(qgel_quasigroup_apply_isotopy(base, comb_cols, cstage2.out()),
                "combined columns") ||
        !api_ok(qgel_quasigroup_apply_isotopy(base, combined, shared.out()), "combined entries"))
        return kExitMismatch;
    std::printf("\nAfter the row map alpha^15:\n");
    print_table("", cstage1);
    if (!check_table("combined row stage", cstage1, kPrivAfterAlpha))
        return kExitMismatch;
    std::printf("After the column map beta^18:\n");
    print_table("", cstage2);
    if (!check_table("combined column stage", cstage2, kPrivAfterBeta))
        return kExitMismatch;
    std::printf("Shared table T^(15,18,30)(Q, f):\n");
    print_table("", shared);
    if (!check_table("shared table", shared, kSharedTable))
        return kExitMismatch;

    // encryption chain over the shared table
    std::printf("\nChained encryption with leader %u:\n", kLeader);
    std::vector<uint32_t> body(kMessageLen);
    if (!api_ok(qgel_markovski_encrypt(shared, kLeader, kMessage, kMessageLen, body.data()),
                "stream encrypt"))
        return kExitMismatch;
    uint32_t prev = kLeader;
    for (std::size_t i = 0; i < kMessageLen; ++i) {
        std::printf("  v%zu = %u * %u = %u\n", i + 1, prev, kMessage[i], body[i]);
        prev = body[i];
    }
    if (!check_string("ciphertext", join_symbols(body),
                      join_symbols({kExpectedBody, kExpectedBody + kMessageLen})))
        return kExitMismatch;

    // receiver side: recompute the combined power from the transmitted one
    IsotopyHandle receiver_combined;
    if (!api_ok(qgel_isotopy_power(ephemeral, kPrivM, kPrivN, kPrivK, receiver_combined.out()),
                "receiver T^(mr,ns,kt)"))
        return kExitMismatch;
    if (qgel_isotopy_equal(receiver_combined, combined) != 1) {
        std::printf("MISMATCH at receiver power: differs from the sender's\n");
        return kExitMismatch;
    }
    std::printf("\nReceiver recomputes T^(mr,ns,kt) from T^(r,s,t): same isotopy\n");

    QuasigroupHandle division;
    if (!api_ok(qgel_quasigroup_left_division(shared, division.out()), "left division"))
        return kExitMismatch;
    std::printf("Left division table of the shared quasigroup:\n");
    print_table("", division);
    if (!check_table("left division", division, kSharedDivision))
        return kExitMismatch;

    std::vector<uint32_t> restored(kMessageLen);
    if (!api_ok(qgel_markovski_decrypt(shared, kLeader, body.data(), kMessageLen,
                                       restored.data()),
                "stream decrypt"))
        return kExitMismatch;
    std::printf("Chained decryption with leader %u:\n", kLeader);
    prev = kLeader;
    for (std::size_t i = 0; i < kMessageLen; ++i) {
        std::printf("  u%zu = %u \\ %u = %u\n", i + 1, prev, body[i], restored[i]);
        prev = body[i];
    }
    if (!check_string("decrypted message", join_symbols(restored),
                      join_symbols({kMessage, kMessage + kMessageLen})))
        return kExitMismatch;

    // the packaged key/encrypt/decrypt path must agree with the walkthrough
    PublicKeyHandle pub;
    PrivateKeyHandle priv;
    if (!api_ok(qgel_keygen(base, full, kPrivM, kPrivN, kPrivK, kLeader, pub.out(), priv.out()),
                "scheme keygen"))
        return kExitMismatch;
    CiphertextHandle ct;
    if (!api_ok(qgel_encrypt_with(pub, kMessage, kMessageLen, kEphR, kEphS, kEphT, ct.out()),
                "scheme encrypt"))
        return kExitMismatch;
    std::vector<uint32_t> scheme_body(qgel_ciphertext_body_len(ct));
    if (!api_ok(qgel_ciphertext_body(ct, scheme_body.data(), scheme_body.size()), "body"))
        return kExitMismatch;
    if (!check_string("scheme ciphertext", join_symbols(scheme_body), join_symbols(body)))
        return kExitMismatch;
    std::vector<uint32_t> scheme_plain(kMessageLen);
    if (!api_ok(qgel_decrypt(pub, priv, ct, scheme_plain.data(), scheme_plain.size()),
                "scheme decrypt"))
        return kExitMismatch;
    if (!check_string("scheme decrypted", join_symbols(scheme_plain),
                      join_symbols({kMessage, kMessage + kMessageLen})))
        return kExitMismatch;

    std::printf("\nall values match\n");
    return 0;
}

} // namespace

int run_demo(int example) {
    switch (example) {
        case 1:
            return run_classic("Classical scheme, first reference run", "23", "5", "13", "7",
                               "15", "21", "17", "12");
        case 2:
            return run_classic("Classical scheme, second reference run", "107", "2", "67", "45",
                               "66", "94", "28", "9");
        case 3:
            return run_quasigroup_demo();
        default:
            std::fprintf(stderr, "qgel: unknown demo %d\n", example);
            return 2;
    }
}
