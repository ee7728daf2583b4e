#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgel/rng.hpp"

namespace qgel {

// A bijection on {0, ..., n-1}, stored as its image list: images()[i] is the
// image of point i. Immutable after construction.
class Permutation {
public:
    Permutation() = default; // degree 0

    // Identity of the given degree.
    explicit Permutation(std::size_t degree);

    // Validates that the list is a bijection on {0, .., n-1}.
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t degree) { return Permutation(degree); }

    // Parses whitespace-separated parenthesized cycles, e.g. "(2 3 4)(0 5 1 6)".
    // Points not mentioned stay fixed; empty (or all-blank) text is the
    // identity, as is "()".
    static Permutation parse_cycles(std::string_view text, std::size_t degree);

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const;
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    Permutation inverse() const;

    // e-th power, any 64-bit exponent; negative exponents are powers of the
    // inverse. Reduced per cycle, so huge exponents cost O(degree).
    Permutation power(std::int64_t e) const;

    // Least e >= 1 with power(e) == identity: the lcm of the cycle lengths.
    std::uint64_t order() const;

    // Disjoint cycles in canonical form: fixed points omitted, every cycle
    // starting at its smallest element, cycles ordered by first element.
    std::vector<std::vector<std::uint32_t>> cycles() const;

    // Canonical cycle notation; identity renders as "()".
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

// r(x) = p(q(x)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

// Uniform random permutation (Fisher-Yates).
Permutation random_permutation(std::size_t degree, Rng& rng);

struct ResidueClass {
    std::uint64_t value = 0;
    std::uint64_t modulus = 1;

    bool operator==(const ResidueClass&) const = default;
};

// Solves target == base^e for e. The solution set, when nonempty, is a full
// residue class modulo order(base); it is recovered per cycle and combined
// with the CRT. Returns nullopt when target is not a power of base.
std::optional<ResidueClass> discrete_log(const Permutation& base, const Permutation& target);

} // namespace qgel
