#pragma once

#include <cstdint>
#include <random>

namespace elring {

/// Bounds for sampling free-ring elements. Finite rings ignore these and
/// sample uniformly from their enumeration.
struct SampleParams {
    std::size_t max_degree = 3;
    std::size_t max_terms = 4;
    std::uint64_t coeff_bound = 3;  // coefficients drawn from [-bound, bound] \ {0}
};

/// Deterministic named generator; reports record the seed, and the same seed
/// reproduces the same draw sequence on any platform (no distribution objects,
/// which are not pinned down by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static constexpr const char* name() { return "mt19937_64"; }

    std::uint64_t raw() { return eng_(); }

    /// Unbiased uniform draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return below(2) != 0; }

    /// Nonzero integer in [-bound, bound].
    std::int64_t signed_nonzero(std::uint64_t bound) {
        std::int64_t magnitude = static_cast<std::int64_t>(1 + below(bound));
        return coin() ? magnitude : -magnitude;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace elring
