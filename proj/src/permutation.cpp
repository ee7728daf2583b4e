#include "qgel/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <utility>

#include "qgel/error.hpp"

namespace qgel {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size())
            raise(errc::validation, "permutation image " + std::to_string(v) +
                                        " out of range for degree " + std::to_string(images_.size()));
        if (seen[v])
            raise(errc::validation, "permutation image " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
}

std::uint32_t Permutation::operator()(std::uint32_t x) const {
    if (x >= images_.size())
        raise(errc::range, "point " + std::to_string(x) + " out of range for degree " +
                               std::to_string(images_.size()));
    return images_[x];
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };

    for (;;) {
        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != '(')
            raise(errc::parse, std::string("expected '(' at offset ") + std::to_string(i));
        ++i;

        std::vector<std::uint32_t> cycle;
        for (;;) {
            skip_ws();
            if (i == text.size())
                raise(errc::parse, "unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                raise(errc::parse, std::string("unexpected character '") + text[i] + "' in cycle");
            std::uint64_t value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (value >= degree)
                    raise(errc::range, "point " + std::to_string(value) +
                                           " out of range for degree " + std::to_string(degree));
                ++i;
            }
            auto point = static_cast<std::uint32_t>(value);
            if (used[point])
                raise(errc::validation, "point " + std::to_string(point) + " appears twice");
            used[point] = true;
            cycle.push_back(point);
        }
        for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
            images[cycle[j]] = cycle[j + 1];
        if (!cycle.empty())
            images[cycle.back()] = cycle.front();
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::uint32_t i = 0; i < images_.size(); ++i)
        inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::power(std::int64_t e) const {
    std::vector<std::uint32_t> out(images_.size());
    std::vector<bool> seen(images_.size(), false);
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t start = 0; start < images_.size(); ++start) {
        if (seen[start])
            continue;
        cycle.clear();
        for (std::uint32_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
        auto len = static_cast<std::int64_t>(cycle.size());
        auto shift = static_cast<std::size_t>(((e % len) + len) % len);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            out[cycle[i]] = cycle[(i + shift) % cycle.size()];
    }
    return Permutation(std::move(out));
}

std::uint64_t Permutation::order() const {
    std::uint64_t result = 1;
    for (const auto& cycle : cycles()) {
        std::uint64_t len = cycle.size();
        std::uint64_t g = std::gcd(result, len);
        std::uint64_t q = result / g;
        if (q > std::numeric_limits<std::uint64_t>::max() / len)
            raise(errc::range, "permutation order exceeds 64 bits");
        result = q * len;
    }
    return result;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start)
            continue;
        std::vector<std::uint32_t> cycle;
        for (std::uint32_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::cycle_string() const {
    auto cs = cycles();
    if (cs.empty())
        return "()";
    std::string out;
    for (const auto& cycle : cs) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        raise(errc::degree_mismatch, "compose: degrees " + std::to_string(p.degree()) + " and " +
                                         std::to_string(q.degree()) + " differ");
    std::vector<std::uint32_t> out(p.degree());
    for (std::uint32_t x = 0; x < p.degree(); ++x)
        out[x] = p.images()[q.images()[x]];
    return Permutation(std::move(out));
}

Permutation random_permutation(std::size_t degree, Rng& rng) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (std::size_t i = degree; i > 1; --i) {
        auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(images[i - 1], images[j]);
    }
    return Permutation(std::move(images));
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    // extended Euclid; gcd(a, m) == 1 is guaranteed by the caller
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += m;
    return static_cast<std::uint64_t>(t);
}

// x == a1 (mod m1) and x == a2 (mod m2), combined; nullopt when incompatible.
std::optional<ResidueClass> crt_combine(ResidueClass c1, ResidueClass c2) {
    std::uint64_t g = std::gcd(c1.modulus, c2.modulus);
    auto diff = static_cast<__int128>(c2.value) - static_cast<__int128>(c1.value);
    if (diff % static_cast<__int128>(g) != 0)
        return std::nullopt;
    std::uint64_t m2g = c2.modulus / g;
    if (c1.modulus > std::numeric_limits<std::uint64_t>::max() / m2g)
        raise(errc::range, "discrete_log: combined modulus exceeds 64 bits");
    std::uint64_t lcm = c1.modulus * m2g;
    if (m2g == 1)
        return ResidueClass{c1.value, lcm};
    std::uint64_t inv = mod_inverse((c1.modulus / g) % m2g, m2g);
    __int128 t = (diff / static_cast<__int128>(g)) % static_cast<__int128>(m2g);
    if (t < 0)
        t += m2g;
    t = (t * static_cast<__int128>(inv)) % static_cast<__int128>(m2g);
    auto x = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(c1.value) +
         static_cast<unsigned __int128>(c1.modulus) * static_cast<unsigned __int128>(t)) %
        static_cast<unsigned __int128>(lcm));
    return ResidueClass{x, lcm};
}

} // namespace

std::optional<ResidueClass> discrete_log(const Permutation& base, const Permutation& target) {
    if (base.degree() != target.degree())
        raise(errc::degree_mismatch, "discrete_log: degrees differ");

    ResidueClass acc{0, 1};
    std::vector<bool> seen(base.degree(), false);
    std::vector<std::uint32_t> cycle;
    std::vector<std::uint32_t> pos(base.degree(), 0);
    for (std::uint32_t start = 0; start < base.degree(); ++start) {
        if (seen[start])
            continue;
        cycle.clear();
        for (std::uint32_t x = start; !seen[x]; x = base.images()[x]) {
            seen[x] = true;
            pos[x] = static_cast<std::uint32_t>(cycle.size());
            cycle.push_back(x);
        }
        std::uint32_t len = static_cast<std::uint32_t>(cycle.size());

        // target must shift the whole cycle by one fixed amount
        std::uint32_t t0 = target.images()[cycle[0]];
        bool in_cycle = std::find(cycle.begin(), cycle.end(), t0) != cycle.end();
        if (!in_cycle)
            return std::nullopt;
        std::uint32_t shift = pos[t0];
        for (std::uint32_t i = 0; i < len; ++i)
            if (target.images()[cycle[i]] != cycle[(i + shift) % len])
                return std::nullopt;

        auto combined = crt_combine(acc, ResidueClass{shift, len});
        if (!combined)
            return std::nullopt;
        acc = *combined;
    }
    return acc;
}

} // namespace qgel
