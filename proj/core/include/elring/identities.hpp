#pragma once

#include <span>

#include "elring/report.hpp"
#include "elring/ring.hpp"
#include "elring/strategy.hpp"

namespace elring {

/// Standard polynomial s_l: sum over all l! permutations of the signed
/// left-to-right products. Exact in every ring; arity capped at 8.
Value sym_poly_eval(const Ring& ring, std::span<const Value> args);

/// k * v in the additive group of the ring.
Value scale_int(const Ring& ring, long long k, const Value& v);

/// Evaluates s_l(x y^2, x y^3, ..., x y^(l+1)) in Free(Z;x,y) and reports
/// nonzeroness, the term count (expected l!), and unit coefficients.
VerificationReport witness_nonvanishing(std::size_t l);

/// Draws l base elements, forms l+1 integer combinations with coefficients
/// in [-3,3], and asserts s_{l+1} evaluates to exactly zero; `trials` times.
VerificationReport span_vanishing_test(std::size_t l, const RingPtr& ring, std::uint64_t trials,
                                       std::uint64_t seed, SampleParams base_params = {});

/// Asserts s_{2n} vanishes on sampled 2n-tuples of Mat(n, base) and searches
/// for a (2n-1)-tuple where s_{2n-1} != 0.
VerificationReport amitsur_levitzki_check(std::uint32_t n, const RingPtr& base,
                                          const Strategy& strategy);

}  // namespace elring
