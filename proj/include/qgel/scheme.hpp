#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qgel/permutation.hpp"
#include "qgel/quasigroup.hpp"
#include "qgel/rng.hpp"

namespace qgel {

// Secret exponent triple. Each component is at least 1.
struct PrivateKey {
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::int64_t k = 1;

    bool operator==(const PrivateKey&) const = default;
};

// Per-encryption exponent triple.
struct ExponentTriple {
    std::int64_t r = 1;
    std::int64_t s = 1;
    std::int64_t t = 1;

    bool operator==(const ExponentTriple&) const = default;
};

// Published material: the base quasigroup, an isotopy T, its secret power
// T^(m,n,k), and the leader that seeds the stream transformation.
class PublicKey {
public:
    PublicKey(Quasigroup quasigroup, Isotopy base_isotopy, Isotopy powered_isotopy,
              std::uint32_t leader);

    const Quasigroup& quasigroup() const noexcept { return quasigroup_; }
    const Isotopy& base_isotopy() const noexcept { return base_; }
    const Isotopy& powered_isotopy() const noexcept { return powered_; }
    std::uint32_t leader() const noexcept { return leader_; }
    std::size_t order() const noexcept { return quasigroup_.order(); }

    bool operator==(const PublicKey&) const = default;

private:
    Quasigroup quasigroup_;
    Isotopy base_;
    Isotopy powered_;
    std::uint32_t leader_;
};

struct Ciphertext {
    Isotopy ephemeral; // T^(r,s,t)
    std::vector<std::uint32_t> body;

    bool operator==(const Ciphertext&) const = default;
};

// Builds the public key for the given material: powered_isotopy becomes
// base^(m,n,k). Exponents below 1 are rejected.
PublicKey keygen(Quasigroup q, Isotopy base, const PrivateKey& priv, std::uint32_t leader);

// Samples everything: quasigroup, isotopy, exponents in [1, 2^31-1], leader.
std::pair<PublicKey, PrivateKey> keygen_random(std::size_t order, Rng& rng);

// apply_isotopy(q, known_power^(a,b,c)). Both sides of the exchange call this
// with the exponents they know; componentwise powers commute, so they arrive
// at the same table.
Quasigroup derive_shared_quasigroup(const Quasigroup& q, const Isotopy& known_power,
                                    std::int64_t a, std::int64_t b, std::int64_t c);

// An ephemeral triple is degenerate when some component power of the base
// isotopy collapses to the identity (exponent divisible by the component
// order), which exposes that component of the shared isotopy. Components
// whose order is already 1 are ignored: they are trivially identity.
bool degenerate_ephemeral(const Isotopy& base, const ExponentTriple& eph);

// Encrypts with explicit exponents. Degenerate triples are accepted here;
// callers that care should consult degenerate_ephemeral first.
Ciphertext encrypt(const PublicKey& pub, std::span<const std::uint32_t> plain,
                   const ExponentTriple& eph);

// Encrypts with sampled exponents, resampling any degenerate triple.
Ciphertext encrypt(const PublicKey& pub, std::span<const std::uint32_t> plain, Rng& rng);

std::vector<std::uint32_t> decrypt(const PublicKey& pub, const PrivateKey& priv,
                                   const Ciphertext& ct);

struct ExponentRecovery {
    ResidueClass m;
    ResidueClass n;
    ResidueClass k;
};

// Recovers the private exponents modulo the component orders from the public
// key alone, via per-cycle discrete logarithms, and checks that they
// regenerate the powered isotopy. Succeeding for every well-formed key is
// exactly what makes the exponents no secret at all in this setting.
std::optional<ExponentRecovery> recover_exponents(const PublicKey& pub);

} // namespace qgel
