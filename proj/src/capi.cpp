#include "qgelgamal.h"

#include <cstdlib>
#include <cstring>
#include <span>
#include <string>

#include "qgel/classic_elgamal.hpp"
#include "qgel/codec.hpp"
#include "qgel/error.hpp"
#include "qgel/markovski.hpp"
#include "qgel/permutation.hpp"
#include "qgel/quasigroup.hpp"
#include "qgel/rng.hpp"
#include "qgel/scheme.hpp"
#include "qgel/serialize.hpp"

struct qgel_perm {
    qgel::Permutation v;
};
struct qgel_quasigroup {
    qgel::Quasigroup v;
};
struct qgel_isotopy {
    qgel::Isotopy v;
};
struct qgel_rng {
    qgel::Rng v;
};
struct qgel_public_key {
    qgel::PublicKey v;
};
struct qgel_private_key {
    qgel::PrivateKey v;
};
struct qgel_ciphertext {
    qgel::Ciphertext v;
};

namespace {

thread_local std::string g_last_error;

qgel_status fail(qgel_status status, const char* message) {
    g_last_error = message;
    return status;
}

qgel_status translate(const qgel::error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case qgel::errc::invalid_argument: return QGEL_ERR_INVALID_ARGUMENT;
        case qgel::errc::parse: return QGEL_ERR_PARSE;
        case qgel::errc::validation: return QGEL_ERR_VALIDATION;
        case qgel::errc::degree_mismatch: return QGEL_ERR_DEGREE_MISMATCH;
        case qgel::errc::range: return QGEL_ERR_RANGE;
        case qgel::errc::io: return QGEL_ERR_IO;
    }
    return QGEL_ERR_INTERNAL;
}

template <typename F>
qgel_status guarded(F&& f) {
    try {
        f();
        return QGEL_OK;
    } catch (const qgel::error& e) {
        return translate(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QGEL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QGEL_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qgel::BigInt parse_big(const char* text) { return qgel::parse_decimal(text); }

} // namespace

extern "C" {

const char* qgel_status_name(qgel_status status) {
    switch (status) {
        case QGEL_OK: return "ok";
        case QGEL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QGEL_ERR_PARSE: return "parse error";
        case QGEL_ERR_VALIDATION: return "validation error";
        case QGEL_ERR_DEGREE_MISMATCH: return "degree mismatch";
        case QGEL_ERR_RANGE: return "out of range";
        case QGEL_ERR_IO: return "i/o error";
        case QGEL_ERR_NOT_FOUND: return "not found";
        case QGEL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qgel_last_error(void) { return g_last_error.c_str(); }

void qgel_string_free(char* s) { std::free(s); }

/* rng */

qgel_status qgel_rng_new(uint64_t seed, qgel_rng** out) {
    if (!out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = new qgel_rng{qgel::Rng(seed)}; });
}

void qgel_rng_free(qgel_rng* rng) { delete rng; }

/* permutation */

qgel_status qgel_perm_from_images(const uint32_t* images, size_t degree, qgel_perm** out) {
    if ((!images && degree > 0) || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = new qgel_perm{qgel::Permutation(std::vector<uint32_t>(images, images + degree))};
    });
}

qgel_status qgel_perm_parse_cycles(const char* text, size_t degree, qgel_perm** out) {
    if (!text || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_perm{qgel::Permutation::parse_cycles(text, degree)}; });
}

qgel_status qgel_perm_identity(size_t degree, qgel_perm** out) {
    if (!out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = new qgel_perm{qgel::Permutation(degree)}; });
}

void qgel_perm_free(qgel_perm* p) { delete p; }

size_t qgel_perm_degree(const qgel_perm* p) { return p ? p->v.degree() : 0; }

qgel_status qgel_perm_images(const qgel_perm* p, uint32_t* out, size_t cap) {
    if (!p || (!out && p->v.degree() > 0))
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    if (cap < p->v.degree())
        return fail(QGEL_ERR_RANGE, "output buffer smaller than degree");
    if (p->v.degree() > 0)
        std::memcpy(out, p->v.images().data(), p->v.degree() * sizeof(uint32_t));
    return QGEL_OK;
}

qgel_status qgel_perm_cycle_string(const qgel_perm* p, char** out) {
    if (!p || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = dup_string(p->v.cycle_string()); });
}

qgel_status qgel_perm_compose(const qgel_perm* a, const qgel_perm* b, qgel_perm** out) {
    if (!a || !b || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_perm{qgel::compose(a->v, b->v)}; });
}

qgel_status qgel_perm_inverse(const qgel_perm* p, qgel_perm** out) {
    if (!p || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_perm{p->v.inverse()}; });
}

qgel_status qgel_perm_power(const qgel_perm* p, int64_t e, qgel_perm** out) {
    if (!p || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_perm{p->v.power(e)}; });
}

qgel_status qgel_perm_order(const qgel_perm* p, uint64_t* out) {
    if (!p || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = p->v.order(); });
}

int qgel_perm_equal(const qgel_perm* a, const qgel_perm* b) {
    return a && b && a->v == b->v ? 1 : 0;
}

qgel_status qgel_perm_discrete_log(const qgel_perm* base, const qgel_perm* target,
                                   uint64_t* value, uint64_t* modulus) {
    if (!base || !target || !value || !modulus)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    qgel_status status = QGEL_OK;
    qgel_status guard = guarded([&] {
        auto result = qgel::discrete_log(base->v, target->v);
        if (!result) {
            status = fail(QGEL_ERR_NOT_FOUND, "target is not a power of base");
            return;
        }
        *value = result->value;
        *modulus = result->modulus;
    });
    return guard != QGEL_OK ? guard : status;
}

/* quasigroup */

qgel_status qgel_quasigroup_from_table(const uint32_t* row_major, size_t order,
                                       qgel_quasigroup** out) {
    if ((!row_major && order > 0) || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        std::vector<uint32_t> flat(row_major, row_major + order * order);
        *out = new qgel_quasigroup{qgel::Quasigroup::from_flat(std::move(flat), order)};
    });
}

qgel_status qgel_quasigroup_random(size_t order, qgel_rng* rng, qgel_quasigroup** out) {
    if (!rng || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_quasigroup{qgel::random_quasigroup(order, rng->v)}; });
}

void qgel_quasigroup_free(qgel_quasigroup* q) { delete q; }

size_t qgel_quasigroup_order(const qgel_quasigroup* q) { return q ? q->v.order() : 0; }

qgel_status qgel_quasigroup_table(const qgel_quasigroup* q, uint32_t* out, size_t cap) {
    if (!q || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    if (cap < q->v.flat().size())
        return fail(QGEL_ERR_RANGE, "output buffer smaller than order*order");
    std::memcpy(out, q->v.flat().data(), q->v.flat().size() * sizeof(uint32_t));
    return QGEL_OK;
}

qgel_status qgel_quasigroup_at(const qgel_quasigroup* q, uint32_t x, uint32_t y, uint32_t* out) {
    if (!q || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = q->v.at(x, y); });
}

qgel_status qgel_quasigroup_left_division(const qgel_quasigroup* q, qgel_quasigroup** out) {
    if (!q || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_quasigroup{q->v.left_division()}; });
}

qgel_status qgel_quasigroup_apply_isotopy(const qgel_quasigroup* q, const qgel_isotopy* t,
                                          qgel_quasigroup** out) {
    if (!q || !t || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_quasigroup{qgel::apply_isotopy(q->v, t->v)}; });
}

int qgel_quasigroup_equal(const qgel_quasigroup* a, const qgel_quasigroup* b) {
    return a && b && a->v == b->v ? 1 : 0;
}

/* isotopy */

qgel_status qgel_isotopy_new(const qgel_perm* alpha, const qgel_perm* beta,
                             const qgel_perm* gamma, qgel_isotopy** out) {
    if (!alpha || !beta || !gamma || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_isotopy{qgel::Isotopy(alpha->v, beta->v, gamma->v)}; });
}

qgel_status qgel_isotopy_identity(size_t degree, qgel_isotopy** out) {
    if (!out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] { *out = new qgel_isotopy{qgel::Isotopy::identity(degree)}; });
}

qgel_status qgel_isotopy_random(size_t degree, qgel_rng* rng, qgel_isotopy** out) {
    if (!rng || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_isotopy{qgel::random_isotopy(degree, rng->v)}; });
}

void qgel_isotopy_free(qgel_isotopy* t) { delete t; }

size_t qgel_isotopy_degree(const qgel_isotopy* t) { return t ? t->v.degree() : 0; }

qgel_status qgel_isotopy_component(const qgel_isotopy* t, int component, qgel_perm** out) {
    if (!t || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    if (component < 0 || component > 2)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "component must be 0, 1 or 2");
    const qgel::Permutation* p = component == 0   ? &t->v.alpha()
                                 : component == 1 ? &t->v.beta()
                                                  : &t->v.gamma();
    return guarded([&] { *out = new qgel_perm{*p}; });
}

qgel_status qgel_isotopy_power(const qgel_isotopy* t, int64_t m, int64_t n, int64_t k,
                               qgel_isotopy** out) {
    if (!t || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_isotopy{t->v.power(m, n, k)}; });
}

int qgel_isotopy_equal(const qgel_isotopy* a, const qgel_isotopy* b) {
    return a && b && a->v == b->v ? 1 : 0;
}

/* stream transformation */

qgel_status qgel_markovski_encrypt(const qgel_quasigroup* q, uint32_t leader, const uint32_t* in,
                                   size_t len, uint32_t* out) {
    if (!q || (!in && len > 0) || (!out && len > 0))
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto result = qgel::markovski_encrypt(q->v, leader, std::span(in, len));
        if (!result.empty())
            std::memcpy(out, result.data(), result.size() * sizeof(uint32_t));
    });
}

qgel_status qgel_markovski_decrypt(const qgel_quasigroup* q, uint32_t leader, const uint32_t* in,
                                   size_t len, uint32_t* out) {
    if (!q || (!in && len > 0) || (!out && len > 0))
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto result = qgel::markovski_decrypt(q->v, leader, std::span(in, len));
        if (!result.empty())
            std::memcpy(out, result.data(), result.size() * sizeof(uint32_t));
    });
}

/* scheme */

qgel_status qgel_keygen(const qgel_quasigroup* q, const qgel_isotopy* base, int64_t m, int64_t n,
                        int64_t k, uint32_t leader, qgel_public_key** pub,
                        qgel_private_key** priv) {
    if (!q || !base || !pub || !priv)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        qgel::PrivateKey pk{m, n, k};
        *pub = new qgel_public_key{qgel::keygen(q->v, base->v, pk, leader)};
        *priv = new qgel_private_key{pk};
    });
}

qgel_status qgel_keygen_random(size_t order, qgel_rng* rng, qgel_public_key** pub,
                               qgel_private_key** priv) {
    if (!rng || !pub || !priv)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto [p, s] = qgel::keygen_random(order, rng->v);
        *pub = new qgel_public_key{std::move(p)};
        *priv = new qgel_private_key{s};
    });
}

void qgel_public_key_free(qgel_public_key* pub) { delete pub; }
void qgel_private_key_free(qgel_private_key* priv) { delete priv; }
void qgel_ciphertext_free(qgel_ciphertext* ct) { delete ct; }

size_t qgel_public_key_order(const qgel_public_key* pub) { return pub ? pub->v.order() : 0; }

qgel_status qgel_public_key_quasigroup(const qgel_public_key* pub, qgel_quasigroup** out) {
    if (!pub || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_quasigroup{pub->v.quasigroup()}; });
}

qgel_status qgel_public_key_base_isotopy(const qgel_public_key* pub, qgel_isotopy** out) {
    if (!pub || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_isotopy{pub->v.base_isotopy()}; });
}

qgel_status qgel_public_key_powered_isotopy(const qgel_public_key* pub, qgel_isotopy** out) {
    if (!pub || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_isotopy{pub->v.powered_isotopy()}; });
}

qgel_status qgel_public_key_leader(const qgel_public_key* pub, uint32_t* out) {
    if (!pub || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    *out = pub->v.leader();
    return QGEL_OK;
}

qgel_status qgel_private_key_exponents(const qgel_private_key* priv, int64_t* m, int64_t* n,
                                       int64_t* k) {
    if (!priv || !m || !n || !k)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    *m = priv->v.m;
    *n = priv->v.n;
    *k = priv->v.k;
    return QGEL_OK;
}

qgel_status qgel_derive_shared_quasigroup(const qgel_quasigroup* q,
                                          const qgel_isotopy* known_power, int64_t a, int64_t b,
                                          int64_t c, qgel_quasigroup** out) {
    if (!q || !known_power || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = new qgel_quasigroup{qgel::derive_shared_quasigroup(q->v, known_power->v, a, b, c)};
    });
}

int qgel_ephemeral_is_degenerate(const qgel_public_key* pub, int64_t r, int64_t s, int64_t t) {
    if (!pub)
        return 0;
    try {
        return qgel::degenerate_ephemeral(pub->v.base_isotopy(), qgel::ExponentTriple{r, s, t})
                   ? 1
                   : 0;
    } catch (...) {
        return 0;
    }
}

qgel_status qgel_encrypt(const qgel_public_key* pub, const uint32_t* msg, size_t len,
                         qgel_rng* rng, qgel_ciphertext** out) {
    if (!pub || (!msg && len > 0) || !rng || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = new qgel_ciphertext{qgel::encrypt(pub->v, std::span(msg, len), rng->v)};
    });
}

qgel_status qgel_encrypt_with(const qgel_public_key* pub, const uint32_t* msg, size_t len,
                              int64_t r, int64_t s, int64_t t, qgel_ciphertext** out) {
    if (!pub || (!msg && len > 0) || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = new qgel_ciphertext{
            qgel::encrypt(pub->v, std::span(msg, len), qgel::ExponentTriple{r, s, t})};
    });
}

qgel_status qgel_decrypt(const qgel_public_key* pub, const qgel_private_key* priv,
                         const qgel_ciphertext* ct, uint32_t* out, size_t cap) {
    if (!pub || !priv || !ct || (!out && !ct->v.body.empty()))
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    if (cap < ct->v.body.size())
        return fail(QGEL_ERR_RANGE, "output buffer smaller than ciphertext body");
    return guarded([&] {
        auto plain = qgel::decrypt(pub->v, priv->v, ct->v);
        if (!plain.empty())
            std::memcpy(out, plain.data(), plain.size() * sizeof(uint32_t));
    });
}

qgel_status qgel_ciphertext_new(const qgel_isotopy* ephemeral, const uint32_t* body, size_t len,
                                qgel_ciphertext** out) {
    if (!ephemeral || (!body && len > 0) || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = new qgel_ciphertext{
            qgel::Ciphertext{ephemeral->v, std::vector<uint32_t>(body, body + len)}};
    });
}

size_t qgel_ciphertext_body_len(const qgel_ciphertext* ct) { return ct ? ct->v.body.size() : 0; }

qgel_status qgel_ciphertext_body(const qgel_ciphertext* ct, uint32_t* out, size_t cap) {
    if (!ct || (!out && !ct->v.body.empty()))
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    if (cap < ct->v.body.size())
        return fail(QGEL_ERR_RANGE, "output buffer smaller than ciphertext body");
    if (!ct->v.body.empty())
        std::memcpy(out, ct->v.body.data(), ct->v.body.size() * sizeof(uint32_t));
    return QGEL_OK;
}

qgel_status qgel_ciphertext_ephemeral(const qgel_ciphertext* ct, qgel_isotopy** out) {
    if (!ct || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_isotopy{ct->v.ephemeral}; });
}

qgel_status qgel_recover_exponents(const qgel_public_key* pub, uint64_t values[3],
                                   uint64_t moduli[3]) {
    if (!pub || !values || !moduli)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    qgel_status status = QGEL_OK;
    qgel_status guard = guarded([&] {
        auto recovered = qgel::recover_exponents(pub->v);
        if (!recovered) {
            status = fail(QGEL_ERR_NOT_FOUND, "powered isotopy is not a power of the base isotopy");
            return;
        }
        values[0] = recovered->m.value;
        values[1] = recovered->n.value;
        values[2] = recovered->k.value;
        moduli[0] = recovered->m.modulus;
        moduli[1] = recovered->n.modulus;
        moduli[2] = recovered->k.modulus;
    });
    return guard != QGEL_OK ? guard : status;
}

/* files */

qgel_status qgel_public_key_save(const qgel_public_key* pub, const char* path) {
    if (!pub || !path)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { qgel::save_public_key(path, pub->v); });
}

qgel_status qgel_public_key_load(const char* path, qgel_public_key** out) {
    if (!path || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_public_key{qgel::load_public_key(path)}; });
}

qgel_status qgel_private_key_save(const qgel_private_key* priv, const char* path) {
    if (!priv || !path)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { qgel::save_private_key(path, priv->v); });
}

qgel_status qgel_private_key_load(const char* path, qgel_private_key** out) {
    if (!path || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = new qgel_private_key{qgel::load_private_key(path)}; });
}

qgel_status qgel_ciphertext_save(const qgel_ciphertext* ct, int raw_codec, const char* path) {
    if (!ct || !path)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        qgel::CodecSpec codec;
        if (raw_codec) {
            codec.raw = true;
        } else {
            codec.raw = false;
            codec.order = static_cast<uint32_t>(ct->v.ephemeral.degree());
            codec.width = static_cast<uint32_t>(qgel::codec_width(codec.order));
        }
        qgel::save_ciphertext(path, ct->v, codec);
    });
}

qgel_status qgel_ciphertext_load(const char* path, qgel_ciphertext** out, int* raw_codec) {
    if (!path || !out || !raw_codec)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto [ct, codec] = qgel::load_ciphertext(path);
        *out = new qgel_ciphertext{std::move(ct)};
        *raw_codec = codec.raw ? 1 : 0;
    });
}

/* codec */

qgel_status qgel_codec_width(uint32_t order, uint32_t* width) {
    if (!width)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *width = static_cast<uint32_t>(qgel::codec_width(order)); });
}

qgel_status qgel_codec_encode(const uint8_t* bytes, size_t len, uint32_t order, uint32_t* out) {
    if ((!bytes && len > 0) || (!out && len > 0))
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto symbols = qgel::encode_bytes(std::span(bytes, len), order);
        if (!symbols.empty())
            std::memcpy(out, symbols.data(), symbols.size() * sizeof(uint32_t));
    });
}

qgel_status qgel_codec_decode(const uint32_t* symbols, size_t len, uint32_t order, uint8_t* out,
                              size_t cap, size_t* written) {
    if ((!symbols && len > 0) || !written)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto bytes = qgel::decode_symbols(std::span(symbols, len), order);
        if (cap < bytes.size())
            qgel::raise(qgel::errc::range, "output buffer smaller than decoded byte count");
        if (!bytes.empty())
            std::memcpy(out, bytes.data(), bytes.size());
        *written = bytes.size();
    });
}

/* classical scheme */

qgel_status qgel_classic_modpow(const char* base, const char* exponent, const char* modulus,
                                char** out) {
    if (!base || !exponent || !modulus || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = dup_string(qgel::modpow(parse_big(base), parse_big(exponent), parse_big(modulus))
                              .str());
    });
}

qgel_status qgel_classic_keygen(const char* p, const char* g, const char* c, char** d) {
    if (!p || !g || !c || !d)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        qgel::ClassicParams params(parse_big(p), parse_big(g));
        *d = dup_string(qgel::classic_keygen(params, parse_big(c)).d.str());
    });
}

qgel_status qgel_classic_encrypt(const char* p, const char* g, const char* d, const char* m,
                                 const char* k, char** r, char** e) {
    if (!p || !g || !d || !m || !k || !r || !e)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        qgel::ClassicParams params(parse_big(p), parse_big(g));
        auto ct = qgel::classic_encrypt(params, parse_big(d), parse_big(m), parse_big(k));
        *r = dup_string(ct.r.str());
        *e = dup_string(ct.e.str());
    });
}

qgel_status qgel_classic_decrypt(const char* p, const char* c, const char* r, const char* e,
                                 char** m) {
    if (!p || !c || !r || !e || !m)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        // any 1 < g < p works for decryption; it never enters the formula
        qgel::ClassicParams params(parse_big(p), 2);
        qgel::ClassicCiphertext ct{parse_big(r), parse_big(e)};
        *m = dup_string(qgel::classic_decrypt(params, parse_big(c), ct).str());
    });
}

qgel_status qgel_classic_is_prime(const char* n, int* out) {
    if (!n || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = qgel::is_probable_prime(parse_big(n)) ? 1 : 0; });
}

qgel_status qgel_classic_is_primitive_root(const char* p, const char* g, int* out) {
    if (!p || !g || !out)
        return fail(QGEL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] { *out = qgel::is_primitive_root(parse_big(p), parse_big(g)) ? 1 : 0; });
}

} /* extern "C" */
