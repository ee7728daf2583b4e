#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgel/permutation.hpp"
#include "qgel/rng.hpp"

namespace qgel {

// A finite quasigroup given by its Cayley table. The table is a Latin square:
// every row and every column is a permutation of 0..n-1. Immutable.
class Quasigroup {
public:
    // Both factories validate the Latin property and report which row or
    // column breaks it.
    static Quasigroup from_rows(const std::vector<std::vector<std::uint32_t>>& rows);
    static Quasigroup from_flat(std::vector<std::uint32_t> row_major, std::size_t order);

    // Addition table of Z_n.
    static Quasigroup cyclic(std::size_t n);

    std::size_t order() const noexcept { return order_; }

    // f(x, y)
    std::uint32_t at(std::uint32_t x, std::uint32_t y) const;

    const std::vector<std::uint32_t>& flat() const noexcept { return table_; }
    std::vector<std::vector<std::uint32_t>> rows() const;

    // Table of the left-division operation "\": x \ z = y iff f(x, y) = z.
    // This is the parastrophe that inverts the Markovski transformation.
    Quasigroup left_division() const;

    bool operator==(const Quasigroup&) const = default;

private:
    Quasigroup(std::vector<std::uint32_t> table, std::size_t order);

    std::size_t order_ = 0;
    std::vector<std::uint32_t> table_; // row-major
};

// An ordered triple of permutations acting on rows, columns and entries of a
// Cayley table. All three components have one common degree.
class Isotopy {
public:
    Isotopy(Permutation alpha, Permutation beta, Permutation gamma);

    static Isotopy identity(std::size_t degree);

    const Permutation& alpha() const noexcept { return alpha_; }
    const Permutation& beta() const noexcept { return beta_; }
    const Permutation& gamma() const noexcept { return gamma_; }
    std::size_t degree() const noexcept { return alpha_.degree(); }

    // Componentwise power (alpha^m, beta^n, gamma^k).
    Isotopy power(std::int64_t m, std::int64_t n, std::int64_t k) const;

    bool operator==(const Isotopy&) const = default;

private:
    Permutation alpha_;
    Permutation beta_;
    Permutation gamma_;
};

// g(x, y) = gamma^-1(f(alpha(x), beta(y))): rows are pulled back through
// alpha, columns through beta, then entries are renamed by the inverse of
// gamma. The result is again a quasigroup.
Quasigroup apply_isotopy(const Quasigroup& q, const Isotopy& t);

// Three independent uniform random permutations.
Isotopy random_isotopy(std::size_t degree, Rng& rng);

// Random quasigroup: the cyclic group table composed with a uniform random
// isotopy. Valid by construction, though not uniform over all Latin squares.
Quasigroup random_quasigroup(std::size_t order, Rng& rng);

} // namespace qgel
