#pragma once

#include <cstdint>

#include "elring/rng.hpp"

namespace elring {

/// How a verification scan draws its tuples.
struct Strategy {
    enum class Kind { exhaustive, random };

    Kind kind = Kind::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    SampleParams params{};

    static Strategy exhaustive() { return {}; }

    static Strategy random(std::uint64_t samples, std::uint64_t seed, SampleParams params = {}) {
        return {Kind::random, samples, seed, params};
    }

    bool is_random() const { return kind == Kind::random; }
    const char* mode_name() const { return is_random() ? "random" : "exhaustive"; }
};

}  // namespace elring
