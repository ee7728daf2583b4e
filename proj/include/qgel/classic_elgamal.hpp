#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgel {

using BigInt = boost::multiprecision::cpp_int;

// base^exponent mod modulus; exponent >= 0, modulus >= 2.
BigInt modpow(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

// Miller-Rabin with 25 rounds.
bool is_probable_prime(const BigInt& n);

// Parses a nonnegative decimal integer.
BigInt parse_decimal(std::string_view text);

// Shared modulus p and base g with 1 < g < p; p must pass the primality
// check. g is NOT required to generate the full multiplicative group (the
// round trip holds for any g); see is_primitive_root for an explicit check.
class ClassicParams {
public:
    ClassicParams(BigInt p, BigInt g);

    const BigInt& p() const noexcept { return p_; }
    const BigInt& g() const noexcept { return g_; }

private:
    BigInt p_;
    BigInt g_;
};

struct ClassicKeyPair {
    BigInt c; // private exponent
    BigInt d; // public value g^c mod p
};

struct ClassicCiphertext {
    BigInt r;
    BigInt e;

    bool operator==(const ClassicCiphertext&) const = default;
};

// d = g^c mod p for a private exponent 1 < c < p-1.
ClassicKeyPair classic_keygen(const ClassicParams& params, BigInt c);

// r = g^k mod p, e = m * d^k mod p, for 0 <= m < p and ephemeral 1 <= k <= p-2.
ClassicCiphertext classic_encrypt(const ClassicParams& params, const BigInt& d, const BigInt& m,
                                  const BigInt& k);

// m = e * r^(p-1-c) mod p.
BigInt classic_decrypt(const ClassicParams& params, const BigInt& c, const ClassicCiphertext& ct);

// Checks whether g generates the full multiplicative group mod p. Factors
// p-1 by trial division, so this is only practical for small moduli; key
// generation deliberately does not call it.
bool is_primitive_root(const BigInt& p, const BigInt& g);

} // namespace qgel
