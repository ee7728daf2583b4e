/*
 * qgelgamal.h - C interface to the qgel library.
 *
 * Quasigroup analogue of the ElGamal scheme: Latin-square Cayley tables,
 * isotopies and their componentwise powers, the leader-seeded chained stream
 * transformation, plus a classical ElGamal reference and a byte <-> symbol
 * codec. Every object is an opaque handle created and released through this
 * interface; every function returns a qgel_status, with outputs through
 * pointer arguments.
 *
 * On failure, qgel_last_error() returns a message describing the most recent
 * error in the calling thread.
 */

#ifndef QGELGAMAL_H
#define QGELGAMAL_H

#include <stddef.h>
#include <stdint.h>

#ifndef QGEL_API
#define QGEL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgel_status {
    QGEL_OK = 0,
    QGEL_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-domain parameter */
    QGEL_ERR_PARSE = 2,            /* malformed cycle notation, JSON, or integer */
    QGEL_ERR_VALIDATION = 3,       /* an invariant does not hold (Latin property, ...) */
    QGEL_ERR_DEGREE_MISMATCH = 4,  /* objects of different degree combined */
    QGEL_ERR_RANGE = 5,            /* value out of range (symbol, leader, exponent) */
    QGEL_ERR_IO = 6,               /* file cannot be read or written */
    QGEL_ERR_NOT_FOUND = 7,        /* discrete log: target is not a power of base */
    QGEL_ERR_INTERNAL = 8
} qgel_status;

typedef struct qgel_perm qgel_perm;
typedef struct qgel_quasigroup qgel_quasigroup;
typedef struct qgel_isotopy qgel_isotopy;
typedef struct qgel_rng qgel_rng;
typedef struct qgel_public_key qgel_public_key;
typedef struct qgel_private_key qgel_private_key;
typedef struct qgel_ciphertext qgel_ciphertext;

QGEL_API const char* qgel_status_name(qgel_status status);

/* Message for the most recent failing call in this thread. */
QGEL_API const char* qgel_last_error(void);

/* Releases strings returned through char** outputs. */
QGEL_API void qgel_string_free(char* s);

/* ------------------------------------------------------------------ rng -- */

QGEL_API qgel_status qgel_rng_new(uint64_t seed, qgel_rng** out);
QGEL_API void qgel_rng_free(qgel_rng* rng);

/* ----------------------------------------------------------- permutation -- */

/* images[i] is the image of point i; must be a bijection on 0..degree-1. */
QGEL_API qgel_status qgel_perm_from_images(const uint32_t* images, size_t degree,
                                           qgel_perm** out);

/* Cycle notation, e.g. "(2 3 4)(0 5 1 6)"; "" and "()" are the identity. */
QGEL_API qgel_status qgel_perm_parse_cycles(const char* text, size_t degree, qgel_perm** out);

QGEL_API qgel_status qgel_perm_identity(size_t degree, qgel_perm** out);
QGEL_API void qgel_perm_free(qgel_perm* p);

QGEL_API size_t qgel_perm_degree(const qgel_perm* p);
QGEL_API qgel_status qgel_perm_images(const qgel_perm* p, uint32_t* out, size_t cap);

/* Canonical cycle notation; free with qgel_string_free. */
QGEL_API qgel_status qgel_perm_cycle_string(const qgel_perm* p, char** out);

/* (a o b)(x) = a(b(x)): b acts first. */
QGEL_API qgel_status qgel_perm_compose(const qgel_perm* a, const qgel_perm* b, qgel_perm** out);
QGEL_API qgel_status qgel_perm_inverse(const qgel_perm* p, qgel_perm** out);

/* Any 64-bit exponent, negative included; cost is O(degree) regardless. */
QGEL_API qgel_status qgel_perm_power(const qgel_perm* p, int64_t e, qgel_perm** out);

QGEL_API qgel_status qgel_perm_order(const qgel_perm* p, uint64_t* out);
QGEL_API int qgel_perm_equal(const qgel_perm* a, const qgel_perm* b);

/* Finds e with base^e == target; the solutions are value + modulus * Z.
 * Returns QGEL_ERR_NOT_FOUND when target is not a power of base. */
QGEL_API qgel_status qgel_perm_discrete_log(const qgel_perm* base, const qgel_perm* target,
                                            uint64_t* value, uint64_t* modulus);

/* ------------------------------------------------------------ quasigroup -- */

/* Row-major order*order table; must be a Latin square. */
QGEL_API qgel_status qgel_quasigroup_from_table(const uint32_t* row_major, size_t order,
                                                qgel_quasigroup** out);
QGEL_API qgel_status qgel_quasigroup_random(size_t order, qgel_rng* rng, qgel_quasigroup** out);
QGEL_API void qgel_quasigroup_free(qgel_quasigroup* q);

QGEL_API size_t qgel_quasigroup_order(const qgel_quasigroup* q);
QGEL_API qgel_status qgel_quasigroup_table(const qgel_quasigroup* q, uint32_t* out, size_t cap);
QGEL_API qgel_status qgel_quasigroup_at(const qgel_quasigroup* q, uint32_t x, uint32_t y,
                                        uint32_t* out);

/* Table of x \ z = y <=> f(x, y) = z. */
QGEL_API qgel_status qgel_quasigroup_left_division(const qgel_quasigroup* q,
                                                   qgel_quasigroup** out);

/* g(x, y) = gamma^-1(f(alpha(x), beta(y))). */
QGEL_API qgel_status qgel_quasigroup_apply_isotopy(const qgel_quasigroup* q,
                                                   const qgel_isotopy* t, qgel_quasigroup** out);
QGEL_API int qgel_quasigroup_equal(const qgel_quasigroup* a, const qgel_quasigroup* b);

/* --------------------------------------------------------------- isotopy -- */

QGEL_API qgel_status qgel_isotopy_new(const qgel_perm* alpha, const qgel_perm* beta,
                                      const qgel_perm* gamma, qgel_isotopy** out);
QGEL_API qgel_status qgel_isotopy_identity(size_t degree, qgel_isotopy** out);
QGEL_API qgel_status qgel_isotopy_random(size_t degree, qgel_rng* rng, qgel_isotopy** out);
QGEL_API void qgel_isotopy_free(qgel_isotopy* t);

QGEL_API size_t qgel_isotopy_degree(const qgel_isotopy* t);

/* component: 0 = alpha (rows), 1 = beta (columns), 2 = gamma (entries). */
QGEL_API qgel_status qgel_isotopy_component(const qgel_isotopy* t, int component,
                                            qgel_perm** out);

/* (alpha^m, beta^n, gamma^k) */
QGEL_API qgel_status qgel_isotopy_power(const qgel_isotopy* t, int64_t m, int64_t n, int64_t k,
                                        qgel_isotopy** out);
QGEL_API int qgel_isotopy_equal(const qgel_isotopy* a, const qgel_isotopy* b);

/* ------------------------------------------------- stream transformation -- */

/* out must hold len symbols; the transformation is length-preserving. */
QGEL_API qgel_status qgel_markovski_encrypt(const qgel_quasigroup* q, uint32_t leader,
                                            const uint32_t* in, size_t len, uint32_t* out);
QGEL_API qgel_status qgel_markovski_decrypt(const qgel_quasigroup* q, uint32_t leader,
                                            const uint32_t* in, size_t len, uint32_t* out);

/* ---------------------------------------------------------------- scheme -- */

QGEL_API qgel_status qgel_keygen(const qgel_quasigroup* q, const qgel_isotopy* base, int64_t m,
                                 int64_t n, int64_t k, uint32_t leader, qgel_public_key** pub,
                                 qgel_private_key** priv);
QGEL_API qgel_status qgel_keygen_random(size_t order, qgel_rng* rng, qgel_public_key** pub,
                                        qgel_private_key** priv);
QGEL_API void qgel_public_key_free(qgel_public_key* pub);
QGEL_API void qgel_private_key_free(qgel_private_key* priv);
QGEL_API void qgel_ciphertext_free(qgel_ciphertext* ct);

QGEL_API size_t qgel_public_key_order(const qgel_public_key* pub);
QGEL_API qgel_status qgel_public_key_quasigroup(const qgel_public_key* pub,
                                                qgel_quasigroup** out);
QGEL_API qgel_status qgel_public_key_base_isotopy(const qgel_public_key* pub, qgel_isotopy** out);
QGEL_API qgel_status qgel_public_key_powered_isotopy(const qgel_public_key* pub,
                                                     qgel_isotopy** out);
QGEL_API qgel_status qgel_public_key_leader(const qgel_public_key* pub, uint32_t* out);
QGEL_API qgel_status qgel_private_key_exponents(const qgel_private_key* priv, int64_t* m,
                                                int64_t* n, int64_t* k);

/* apply_isotopy(q, known_power^(a,b,c)); both parties call this with the
 * exponents they know and obtain the same table. */
QGEL_API qgel_status qgel_derive_shared_quasigroup(const qgel_quasigroup* q,
                                                   const qgel_isotopy* known_power, int64_t a,
                                                   int64_t b, int64_t c, qgel_quasigroup** out);

/* 1 when some component power of the base isotopy collapses to the identity
 * under these exponents. Such triples leak that component. */
QGEL_API int qgel_ephemeral_is_degenerate(const qgel_public_key* pub, int64_t r, int64_t s,
                                          int64_t t);

/* Samples exponents from rng, never returning a degenerate triple. */
QGEL_API qgel_status qgel_encrypt(const qgel_public_key* pub, const uint32_t* msg, size_t len,
                                  qgel_rng* rng, qgel_ciphertext** out);

/* Explicit exponents; degenerate triples are accepted. */
QGEL_API qgel_status qgel_encrypt_with(const qgel_public_key* pub, const uint32_t* msg,
                                       size_t len, int64_t r, int64_t s, int64_t t,
                                       qgel_ciphertext** out);

/* out must hold qgel_ciphertext_body_len(ct) symbols. */
QGEL_API qgel_status qgel_decrypt(const qgel_public_key* pub, const qgel_private_key* priv,
                                  const qgel_ciphertext* ct, uint32_t* out, size_t cap);

QGEL_API qgel_status qgel_ciphertext_new(const qgel_isotopy* ephemeral, const uint32_t* body,
                                         size_t len, qgel_ciphertext** out);
QGEL_API size_t qgel_ciphertext_body_len(const qgel_ciphertext* ct);
QGEL_API qgel_status qgel_ciphertext_body(const qgel_ciphertext* ct, uint32_t* out, size_t cap);
QGEL_API qgel_status qgel_ciphertext_ephemeral(const qgel_ciphertext* ct, qgel_isotopy** out);

/* Recovers the private exponents modulo the orders of the base isotopy
 * components, from public material alone, and verifies that they regenerate
 * the powered isotopy. values/moduli are filled in (m, n, k) order.
 * QGEL_ERR_NOT_FOUND means the key material is inconsistent. */
QGEL_API qgel_status qgel_recover_exponents(const qgel_public_key* pub, uint64_t values[3],
                                            uint64_t moduli[3]);

/* ----------------------------------------------------------------- files -- */

QGEL_API qgel_status qgel_public_key_save(const qgel_public_key* pub, const char* path);
QGEL_API qgel_status qgel_public_key_load(const char* path, qgel_public_key** out);
QGEL_API qgel_status qgel_private_key_save(const qgel_private_key* priv, const char* path);
QGEL_API qgel_status qgel_private_key_load(const char* path, qgel_private_key** out);

/* raw_codec nonzero marks the body as raw symbols; zero marks it as
 * codec-encoded bytes. The flag round-trips through the file. */
QGEL_API qgel_status qgel_ciphertext_save(const qgel_ciphertext* ct, int raw_codec,
                                          const char* path);
QGEL_API qgel_status qgel_ciphertext_load(const char* path, qgel_ciphertext** out,
                                          int* raw_codec);

/* ----------------------------------------------------------------- codec -- */

QGEL_API qgel_status qgel_codec_width(uint32_t order, uint32_t* width);

/* out must hold len * width symbols. */
QGEL_API qgel_status qgel_codec_encode(const uint8_t* bytes, size_t len, uint32_t order,
                                       uint32_t* out);

/* out must hold len / width bytes; *written receives the byte count. */
QGEL_API qgel_status qgel_codec_decode(const uint32_t* symbols, size_t len, uint32_t order,
                                       uint8_t* out, size_t cap, size_t* written);

/* ------------------------------------------------------ classical scheme -- */

/* Arbitrary-precision integers travel as decimal strings; outputs are
 * allocated and released with qgel_string_free. */

QGEL_API qgel_status qgel_classic_modpow(const char* base, const char* exponent,
                                         const char* modulus, char** out);

/* d = g^c mod p; p must be prime and 1 < g < p, 1 < c < p-1. */
QGEL_API qgel_status qgel_classic_keygen(const char* p, const char* g, const char* c, char** d);

/* r = g^k mod p, e = m * d^k mod p. */
QGEL_API qgel_status qgel_classic_encrypt(const char* p, const char* g, const char* d,
                                          const char* m, const char* k, char** r, char** e);

/* m = e * r^(p-1-c) mod p. */
QGEL_API qgel_status qgel_classic_decrypt(const char* p, const char* c, const char* r,
                                          const char* e, char** m);

QGEL_API qgel_status qgel_classic_is_prime(const char* n, int* out);
QGEL_API qgel_status qgel_classic_is_primitive_root(const char* p, const char* g, int* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QGELGAMAL_H */
