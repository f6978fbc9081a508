#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "elring/report.hpp"
#include "elring/ring.hpp"
#include "elring/strategy.hpp"

namespace elring {

/// Every element of a finite ring, in enumeration order.
std::vector<Value> all_elements(const Ring& ring);

struct ScanOutcome {
    std::optional<std::string> counterexample;
    std::uint64_t tuples = 0;
};

/// Applies `predicate` to every arity-tuple (exhaustive) or to `samples`
/// random tuples; stops at the first counterexample. Exhaustive scans require
/// a finite ring and refuse absurdly large products.
ScanOutcome scan_tuples(const Ring& ring, const Strategy& strategy, std::size_t arity,
                        const std::function<std::optional<std::string>(std::span<const Value>)>& predicate);

/// Checks the ring axioms: associativity of + and *, commutativity of +,
/// both distributive laws, unit laws, negation, 0 != 1. Multiplicative
/// commutativity is NOT an axiom; pass `noncommutativity_witness` to also
/// search for a pair with ab != ba (reported as a witness check).
VerificationReport ring_axioms_check(const Ring& ring, const Strategy& strategy,
                                     bool noncommutativity_witness = false);

}  // namespace elring
