#pragma once

#include <utility>

#include "elring/report.hpp"
#include "elring/ring.hpp"

namespace elring {

/// Applies an endomorphism of Z/p + Z/p^2 to a point (u, v); elements encode
/// (a, b, c, d): phi(u, v) = (a u + b v mod p, p c u + d v mod p^2).
std::pair<std::uint64_t, std::uint64_t> endo_apply(std::uint64_t p, const Value& e,
                                                   std::pair<std::uint64_t, std::uint64_t> x);

/// Independent brute-force oracle: counts additive maps G -> G for
/// G = Z/p + Z/p^2 by enumerating candidate generator images and checking
/// additivity over all pairs. Capped at p <= 3.
std::uint64_t endo_map_census(std::uint64_t p);

/// Cardinality against the census oracle, composition semantics, ring
/// axioms, and a noncommutativity witness.
VerificationReport endo_suite(std::uint64_t p);

}  // namespace elring
