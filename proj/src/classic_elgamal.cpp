#include "qgel/classic_elgamal.hpp"

#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "qgel/error.hpp"

namespace qgel {

BigInt modpow(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
    if (modulus < 2)
        raise(errc::invalid_argument, "modulus must be at least 2");
    if (exponent < 0)
        raise(errc::invalid_argument, "exponent must be nonnegative");
    BigInt result = 1;
    BigInt b = base % modulus;
    if (b < 0)
        b += modulus;
    BigInt e = exponent;
    while (e > 0) {
        if (bit_test(e, 0))
            result = result * b % modulus;
        b = b * b % modulus;
        e >>= 1;
    }
    return result;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2)
        return false;
    return boost::multiprecision::miller_rabin_test(n, 25);
}

BigInt parse_decimal(std::string_view text) {
    if (text.empty())
        raise(errc::parse, "empty integer");
    for (char c : text)
        if (c < '0' || c > '9')
            raise(errc::parse, "invalid decimal integer '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

ClassicParams::ClassicParams(BigInt p, BigInt g) : p_(std::move(p)), g_(std::move(g)) {
    if (!is_probable_prime(p_))
        raise(errc::validation, "modulus " + p_.str() + " is not prime");
    if (g_ <= 1 || g_ >= p_)
        raise(errc::validation, "base must satisfy 1 < g < p");
}

ClassicKeyPair classic_keygen(const ClassicParams& params, BigInt c) {
    if (c <= 1 || c >= params.p() - 1)
        raise(errc::range, "private exponent must satisfy 1 < c < p-1");
    BigInt d = modpow(params.g(), c, params.p());
    return ClassicKeyPair{std::move(c), std::move(d)};
}

ClassicCiphertext classic_encrypt(const ClassicParams& params, const BigInt& d, const BigInt& m,
                                  const BigInt& k) {
    if (m < 0 || m >= params.p())
        raise(errc::range, "message must satisfy 0 <= m < p");
    if (k < 1 || k > params.p() - 2)
        raise(errc::range, "ephemeral exponent must satisfy 1 <= k <= p-2");
    BigInt r = modpow(params.g(), k, params.p());
    BigInt e = m * modpow(d, k, params.p()) % params.p();
    return ClassicCiphertext{std::move(r), std::move(e)};
}

BigInt classic_decrypt(const ClassicParams& params, const BigInt& c, const ClassicCiphertext& ct) {
    if (ct.r < 0 || ct.r >= params.p() || ct.e < 0 || ct.e >= params.p())
        raise(errc::range, "ciphertext values must be reduced mod p");
    if (c <= 1 || c >= params.p() - 1)
        raise(errc::range, "private exponent must satisfy 1 < c < p-1");
    return ct.e * modpow(ct.r, params.p() - 1 - c, params.p()) % params.p();
}

bool is_primitive_root(const BigInt& p, const BigInt& g) {
    ClassicParams params(p, g); // revalidate
    BigInt phi = p - 1;
    BigInt rest = phi;
    std::vector<BigInt> factors;
    for (BigInt f = 2; f * f <= rest; ++f) {
        if (rest % f == 0) {
            factors.push_back(f);
            while (rest % f == 0)
                rest /= f;
        }
    }
    if (rest > 1)
        factors.push_back(rest);
    for (const BigInt& f : factors)
        if (modpow(g, phi / f, p) == 1)
            return false;
    return true;
}

} // namespace qgel
