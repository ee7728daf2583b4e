#include "qgel/scheme.hpp"

#include <string>

#include "qgel/error.hpp"
#include "qgel/markovski.hpp"

namespace qgel {

namespace {

constexpr std::int64_t kExponentBound = (std::int64_t{1} << 31) - 1;

void check_positive(std::int64_t v, const char* name) {
    if (v < 1)
        raise(errc::invalid_argument,
              std::string(name) + " exponent must be at least 1, got " + std::to_string(v));
}

} // namespace

PublicKey::PublicKey(Quasigroup quasigroup, Isotopy base_isotopy, Isotopy powered_isotopy,
                     std::uint32_t leader)
    : quasigroup_(std::move(quasigroup)),
      base_(std::move(base_isotopy)),
      powered_(std::move(powered_isotopy)),
      leader_(leader) {
    if (base_.degree() != quasigroup_.order() || powered_.degree() != quasigroup_.order())
        raise(errc::degree_mismatch, "isotopy degree does not match quasigroup order " +
                                         std::to_string(quasigroup_.order()));
    if (leader_ >= quasigroup_.order())
        raise(errc::range, "leader " + std::to_string(leader_) + " out of range for order " +
                               std::to_string(quasigroup_.order()));
}

PublicKey keygen(Quasigroup q, Isotopy base, const PrivateKey& priv, std::uint32_t leader) {
    check_positive(priv.m, "private m");
    check_positive(priv.n, "private n");
    check_positive(priv.k, "private k");
    Isotopy powered = base.power(priv.m, priv.n, priv.k);
    return PublicKey(std::move(q), std::move(base), std::move(powered), leader);
}

std::pair<PublicKey, PrivateKey> keygen_random(std::size_t order, Rng& rng) {
    Quasigroup q = random_quasigroup(order, rng);
    Isotopy base = random_isotopy(order, rng);
    PrivateKey priv{static_cast<std::int64_t>(rng.between(1, kExponentBound)),
                    static_cast<std::int64_t>(rng.between(1, kExponentBound)),
                    static_cast<std::int64_t>(rng.between(1, kExponentBound))};
    auto leader = static_cast<std::uint32_t>(rng.below(order));
    PublicKey pub = keygen(std::move(q), std::move(base), priv, leader);
    return {std::move(pub), priv};
}

Quasigroup derive_shared_quasigroup(const Quasigroup& q, const Isotopy& known_power,
                                    std::int64_t a, std::int64_t b, std::int64_t c) {
    return apply_isotopy(q, known_power.power(a, b, c));
}

bool degenerate_ephemeral(const Isotopy& base, const ExponentTriple& eph) {
    auto collapses = [](const Permutation& p, std::int64_t e) {
        std::uint64_t ord = p.order();
        return ord > 1 && static_cast<std::uint64_t>(e) % ord == 0;
    };
    return collapses(base.alpha(), eph.r) || collapses(base.beta(), eph.s) ||
           collapses(base.gamma(), eph.t);
}

Ciphertext encrypt(const PublicKey& pub, std::span<const std::uint32_t> plain,
                   const ExponentTriple& eph) {
    check_positive(eph.r, "ephemeral r");
    check_positive(eph.s, "ephemeral s");
    check_positive(eph.t, "ephemeral t");
    Isotopy ephemeral = pub.base_isotopy().power(eph.r, eph.s, eph.t);
    Quasigroup shared =
        derive_shared_quasigroup(pub.quasigroup(), pub.powered_isotopy(), eph.r, eph.s, eph.t);
    std::vector<std::uint32_t> body = markovski_encrypt(shared, pub.leader(), plain);
    return Ciphertext{std::move(ephemeral), std::move(body)};
}

Ciphertext encrypt(const PublicKey& pub, std::span<const std::uint32_t> plain, Rng& rng) {
    for (;;) {
        ExponentTriple eph{static_cast<std::int64_t>(rng.between(1, kExponentBound)),
                           static_cast<std::int64_t>(rng.between(1, kExponentBound)),
                           static_cast<std::int64_t>(rng.between(1, kExponentBound))};
        if (degenerate_ephemeral(pub.base_isotopy(), eph))
            continue;
        return encrypt(pub, plain, eph);
    }
}

std::vector<std::uint32_t> decrypt(const PublicKey& pub, const PrivateKey& priv,
                                   const Ciphertext& ct) {
    check_positive(priv.m, "private m");
    check_positive(priv.n, "private n");
    check_positive(priv.k, "private k");
    if (ct.ephemeral.degree() != pub.order())
        raise(errc::degree_mismatch, "ciphertext ephemeral degree " +
                                         std::to_string(ct.ephemeral.degree()) +
                                         " does not match key order " + std::to_string(pub.order()));
    Quasigroup shared =
        derive_shared_quasigroup(pub.quasigroup(), ct.ephemeral, priv.m, priv.n, priv.k);
    return markovski_decrypt(shared, pub.leader(), ct.body);
}

std::optional<ExponentRecovery> recover_exponents(const PublicKey& pub) {
    auto m = discrete_log(pub.base_isotopy().alpha(), pub.powered_isotopy().alpha());
    auto n = discrete_log(pub.base_isotopy().beta(), pub.powered_isotopy().beta());
    auto k = discrete_log(pub.base_isotopy().gamma(), pub.powered_isotopy().gamma());
    if (!m || !n || !k)
        return std::nullopt;
    Isotopy regenerated =
        pub.base_isotopy().power(static_cast<std::int64_t>(m->value),
                                 static_cast<std::int64_t>(n->value),
                                 static_cast<std::int64_t>(k->value));
    if (regenerated != pub.powered_isotopy())
        return std::nullopt;
    return ExponentRecovery{*m, *n, *k};
}

} // namespace qgel
