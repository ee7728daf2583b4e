#include "qgel/rng.hpp"

#include <limits>

#include "qgel/error.hpp"

namespace qgel {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        raise(errc::invalid_argument, "Rng::below: bound must be nonzero");
    // Reject the low non-multiple-of-bound range so the modulus is unbiased.
    std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = gen_();
        if (r >= threshold)
            return r % bound;
    }
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi)
        raise(errc::invalid_argument, "Rng::between: empty range");
    std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max())
        return gen_();
    return lo + below(span + 1);
}

} // namespace qgel
