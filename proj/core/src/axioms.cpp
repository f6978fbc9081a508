#include "elring/axioms.hpp"

namespace elring {

std::vector<Value> all_elements(const Ring& ring) {
    auto card = ring.cardinality();
    if (!card)
        throw std::invalid_argument(ring.spec() + " is not enumerable");
    std::vector<Value> out;
    out.reserve(*card);
    for (std::uint64_t i = 0; i < *card; ++i)
        out.push_back(ring.element(i));
    return out;
}

ScanOutcome scan_tuples(const Ring& ring, const Strategy& strategy, std::size_t arity,
                        const std::function<std::optional<std::string>(std::span<const Value>)>& predicate) {
    ScanOutcome outcome;
    std::vector<Value> tuple(arity, ring.zero());

    if (!strategy.is_random()) {
        auto card = ring.cardinality();
        if (!card)
            throw std::invalid_argument("exhaustive strategy needs a finite ring, got " + ring.spec());
        double total = 1;
        for (std::size_t i = 0; i < arity; ++i)
            total *= static_cast<double>(*card);
        if (total > 5e7)
            throw std::invalid_argument("exhaustive scan over " + ring.spec() + " is too large");

        std::vector<Value> pool = all_elements(ring);
        std::vector<std::size_t> odometer(arity, 0);
        for (;;) {
            for (std::size_t i = 0; i < arity; ++i)
                tuple[i] = pool[odometer[i]];
            ++outcome.tuples;
            if (auto cx = predicate(tuple)) {
                outcome.counterexample = std::move(cx);
                return outcome;
            }
            std::size_t pos = 0;
            while (pos < arity && ++odometer[pos] == pool.size()) {
                odometer[pos] = 0;
                ++pos;
            }
            if (pos == arity)
                return outcome;
        }
    }

    Rng rng(strategy.seed);
    for (std::uint64_t s = 0; s < strategy.samples; ++s) {
        for (std::size_t i = 0; i < arity; ++i)
            tuple[i] = ring.random_element(rng, strategy.params);
        ++outcome.tuples;
        if (auto cx = predicate(tuple)) {
            outcome.counterexample = std::move(cx);
            return outcome;
        }
    }
    return outcome;
}

namespace {

std::string shown(const Ring& r, const char* tag, const Value& v) {
    return std::string(tag) + "=" + r.show(v);
}

}  // namespace

VerificationReport ring_axioms_check(const Ring& ring, const Strategy& strategy,
                                     bool noncommutativity_witness) {
    VerificationReport report;
    report.suite = "axioms";
    report.ring = ring.spec();
    report.mode = strategy.mode_name();
    if (strategy.is_random())
        report.seed = strategy.seed;

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        auto run = [&](const char* name, std::size_t arity,
                       const std::function<std::optional<std::string>(std::span<const Value>)>& pred) {
            ScanOutcome out = scan_tuples(ring, strategy, arity, pred);
            if (out.counterexample)
                rep.fail(name, *out.counterexample);
            else
                rep.pass(name, "tuples=" + std::to_string(out.tuples));
        };

        if (ring.is_zero(ring.one()))
            rep.fail("zero_ne_one", "0 == 1 in " + ring.spec());
        else
            rep.pass("zero_ne_one");

        run("add_assoc", 3, [&](std::span<const Value> t) -> std::optional<std::string> {
            Value lhs = ring.add(ring.add(t[0], t[1]), t[2]);
            Value rhs = ring.add(t[0], ring.add(t[1], t[2]));
            if (lhs == rhs)
                return std::nullopt;
            return shown(ring, "a", t[0]) + "; " + shown(ring, "b", t[1]) + "; " +
                   shown(ring, "c", t[2]) + "; " + shown(ring, "lhs", lhs) + "; " +
                   shown(ring, "rhs", rhs);
        });

        run("add_comm", 2, [&](std::span<const Value> t) -> std::optional<std::string> {
            Value lhs = ring.add(t[0], t[1]);
            Value rhs = ring.add(t[1], t[0]);
            if (lhs == rhs)
                return std::nullopt;
            return shown(ring, "a", t[0]) + "; " + shown(ring, "b", t[1]) + "; " +
                   shown(ring, "lhs", lhs) + "; " + shown(ring, "rhs", rhs);
        });

        run("add_zero", 1, [&](std::span<const Value> t) -> std::optional<std::string> {
            if (ring.add(t[0], ring.zero()) == t[0] && ring.add(ring.zero(), t[0]) == t[0])
                return std::nullopt;
            return shown(ring, "a", t[0]);
        });

        run("add_neg", 1, [&](std::span<const Value> t) -> std::optional<std::string> {
            Value s = ring.add(t[0], ring.neg(t[0]));
            if (ring.is_zero(s))
                return std::nullopt;
            return shown(ring, "a", t[0]) + "; " + shown(ring, "a+(-a)", s);
        });

        run("mul_assoc", 3, [&](std::span<const Value> t) -> std::optional<std::string> {
            Value lhs = ring.mul(ring.mul(t[0], t[1]), t[2]);
            Value rhs = ring.mul(t[0], ring.mul(t[1], t[2]));
            if (lhs == rhs)
                return std::nullopt;
            return shown(ring, "a", t[0]) + "; " + shown(ring, "b", t[1]) + "; " +
                   shown(ring, "c", t[2]) + "; " + shown(ring, "lhs", lhs) + "; " +
                   shown(ring, "rhs", rhs);
        });

        run("mul_one", 1, [&](std::span<const Value> t) -> std::optional<std::string> {
            if (ring.mul(t[0], ring.one()) == t[0] && ring.mul(ring.one(), t[0]) == t[0])
                return std::nullopt;
            return shown(ring, "a", t[0]);
        });

        run("left_distrib", 3, [&](std::span<const Value> t) -> std::optional<std::string> {
            Value lhs = ring.mul(t[0], ring.add(t[1], t[2]));
            Value rhs = ring.add(ring.mul(t[0], t[1]), ring.mul(t[0], t[2]));
            if (lhs == rhs)
                return std::nullopt;
            return shown(ring, "a", t[0]) + "; " + shown(ring, "b", t[1]) + "; " +
                   shown(ring, "c", t[2]) + "; " + shown(ring, "lhs", lhs) + "; " +
                   shown(ring, "rhs", rhs);
        });

        run("right_distrib", 3, [&](std::span<const Value> t) -> std::optional<std::string> {
            Value lhs = ring.mul(ring.add(t[0], t[1]), t[2]);
            Value rhs = ring.add(ring.mul(t[0], t[2]), ring.mul(t[1], t[2]));
            if (lhs == rhs)
                return std::nullopt;
            return shown(ring, "a", t[0]) + "; " + shown(ring, "b", t[1]) + "; " +
                   shown(ring, "c", t[2]) + "; " + shown(ring, "lhs", lhs) + "; " +
                   shown(ring, "rhs", rhs);
        });

        if (noncommutativity_witness) {
            std::optional<std::string> witness;
            scan_tuples(ring, strategy, 2, [&](std::span<const Value> t) -> std::optional<std::string> {
                Value ab = ring.mul(t[0], t[1]);
                Value ba = ring.mul(t[1], t[0]);
                if (ab == ba)
                    return std::nullopt;
                witness = shown(ring, "a", t[0]) + "; " + shown(ring, "b", t[1]) + "; " +
                          shown(ring, "ab", ab) + "; " + shown(ring, "ba", ba);
                return witness;  // stop the scan
            });
            if (witness)
                rep.pass("mul_noncommutativity_witness", *witness);
            else
                rep.fail("mul_noncommutativity_witness",
                         "no pair with ab != ba found in " + ring.spec());
        }
    });
}

}  // namespace elring
