#include "qgel/quasigroup.hpp"

#include <algorithm>
#include <string>

#include "qgel/error.hpp"

namespace qgel {

Quasigroup::Quasigroup(std::vector<std::uint32_t> table, std::size_t order)
    : order_(order), table_(std::move(table)) {}

Quasigroup Quasigroup::from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
    std::size_t n = rows.size();
    std::vector<std::uint32_t> flat;
    flat.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n)
            raise(errc::validation, "table is not square: row " + std::to_string(x) + " has " +
                                        std::to_string(rows[x].size()) + " entries, expected " +
                                        std::to_string(n));
        flat.insert(flat.end(), rows[x].begin(), rows[x].end());
    }
    return from_flat(std::move(flat), n);
}

Quasigroup Quasigroup::from_flat(std::vector<std::uint32_t> row_major, std::size_t order) {
    if (row_major.size() != order * order)
        raise(errc::validation, "table has " + std::to_string(row_major.size()) +
                                    " entries, expected " + std::to_string(order * order));
    std::vector<bool> seen(order);
    for (std::size_t x = 0; x < order; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t y = 0; y < order; ++y) {
            std::uint32_t v = row_major[x * order + y];
            if (v >= order)
                raise(errc::validation, "entry " + std::to_string(v) + " at (" + std::to_string(x) +
                                            ", " + std::to_string(y) + ") out of range for order " +
                                            std::to_string(order));
            if (seen[v])
                raise(errc::validation, "duplicate value " + std::to_string(v) + " in row " +
                                            std::to_string(x));
            seen[v] = true;
        }
    }
    for (std::size_t y = 0; y < order; ++y) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t x = 0; x < order; ++x) {
            std::uint32_t v = row_major[x * order + y];
            if (seen[v])
                raise(errc::validation, "duplicate value " + std::to_string(v) + " in column " +
                                            std::to_string(y));
            seen[v] = true;
        }
    }
    return Quasigroup(std::move(row_major), order);
}

Quasigroup Quasigroup::cyclic(std::size_t n) {
    if (n == 0)
        raise(errc::invalid_argument, "quasigroup order must be positive");
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            table[x * n + y] = static_cast<std::uint32_t>((x + y) % n);
    return Quasigroup(std::move(table), n);
}

std::uint32_t Quasigroup::at(std::uint32_t x, std::uint32_t y) const {
    if (x >= order_ || y >= order_)
        raise(errc::range, "cell (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") out of range for order " + std::to_string(order_));
    return table_[static_cast<std::size_t>(x) * order_ + y];
}

std::vector<std::vector<std::uint32_t>> Quasigroup::rows() const {
    std::vector<std::vector<std::uint32_t>> out(order_);
    for (std::size_t x = 0; x < order_; ++x)
        out[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x * order_),
                      table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_));
    return out;
}

Quasigroup Quasigroup::left_division() const {
    std::vector<std::uint32_t> ld(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t y = 0; y < order_; ++y)
            ld[x * order_ + table_[x * order_ + y]] = static_cast<std::uint32_t>(y);
    return Quasigroup(std::move(ld), order_);
}

Isotopy::Isotopy(Permutation alpha, Permutation beta, Permutation gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (alpha_.degree() != beta_.degree() || alpha_.degree() != gamma_.degree())
        raise(errc::degree_mismatch, "isotopy components have degrees " +
                                         std::to_string(alpha_.degree()) + ", " +
                                         std::to_string(beta_.degree()) + ", " +
                                         std::to_string(gamma_.degree()));
}

Isotopy Isotopy::identity(std::size_t degree) {
    return Isotopy(Permutation(degree), Permutation(degree), Permutation(degree));
}

Isotopy Isotopy::power(std::int64_t m, std::int64_t n, std::int64_t k) const {
    return Isotopy(alpha_.power(m), beta_.power(n), gamma_.power(k));
}

Quasigroup apply_isotopy(const Quasigroup& q, const Isotopy& t) {
    if (t.degree() != q.order())
        raise(errc::degree_mismatch, "isotopy degree " + std::to_string(t.degree()) +
                                         " does not match quasigroup order " +
                                         std::to_string(q.order()));
    std::size_t n = q.order();
    Permutation gamma_inv = t.gamma().inverse();
    std::vector<std::uint32_t> out(n * n);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t row = t.alpha().images()[x];
        for (std::uint32_t y = 0; y < n; ++y)
            out[static_cast<std::size_t>(x) * n + y] =
                gamma_inv.images()[q.at(row, t.beta().images()[y])];
    }
    return Quasigroup::from_flat(std::move(out), n);
}

Isotopy random_isotopy(std::size_t degree, Rng& rng) {
    if (degree == 0)
        raise(errc::invalid_argument, "isotopy degree must be positive");
    Permutation alpha = random_permutation(degree, rng);
    Permutation beta = random_permutation(degree, rng);
    Permutation gamma = random_permutation(degree, rng);
    return Isotopy(std::move(alpha), std::move(beta), std::move(gamma));
}

Quasigroup random_quasigroup(std::size_t order, Rng& rng) {
    return apply_isotopy(Quasigroup::cyclic(order), random_isotopy(order, rng));
}

} // namespace qgel
