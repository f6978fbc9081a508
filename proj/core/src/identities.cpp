#include "elring/identities.hpp"

#include <stdexcept>

#include "elring/axioms.hpp"

namespace elring {

namespace {

// Depth-first lexicographic enumeration of permutations with shared prefix
// products; the sign flips by the number of already-placed indices greater
// than the one being placed.
void sym_rec(const Ring& ring, std::span<const Value> args, std::vector<bool>& used,
             std::size_t depth, const Value& prefix, bool negative, Value& acc) {
    const std::size_t l = args.size();
    if (depth == l) {
        acc = ring.add(acc, negative ? ring.neg(prefix) : prefix);
        return;
    }
    for (std::size_t idx = 0; idx < l; ++idx) {
        if (used[idx])
            continue;
        std::size_t inversions = 0;
        for (std::size_t k = idx + 1; k < l; ++k)
            if (used[k])
                ++inversions;
        used[idx] = true;
        Value next = depth == 0 ? args[idx] : ring.mul(prefix, args[idx]);
        sym_rec(ring, args, used, depth + 1, next, negative ^ (inversions & 1), acc);
        used[idx] = false;
    }
}

}  // namespace

Value sym_poly_eval(const Ring& ring, std::span<const Value> args) {
    if (args.empty() || args.size() > 8)
        throw std::invalid_argument("standard polynomial arity must be 1..8");
    Value acc = ring.zero();
    std::vector<bool> used(args.size(), false);
    sym_rec(ring, args, used, 0, ring.zero(), false, acc);
    return acc;
}

Value scale_int(const Ring& ring, long long k, const Value& v) {
    bool negative = k < 0;
    unsigned long long n = negative ? -static_cast<unsigned long long>(k) : k;
    Value acc = ring.zero();
    Value power = v;
    while (n != 0) {
        if (n & 1)
            acc = ring.add(acc, power);
        n >>= 1;
        if (n != 0)
            power = ring.add(power, power);
    }
    return negative ? ring.neg(acc) : acc;
}

VerificationReport witness_nonvanishing(std::size_t l) {
    if (l < 1 || l > 6)
        throw std::invalid_argument("witness arity must be 1..6");

    VerificationReport report;
    report.suite = "witness";
    report.ring = "Free(Z;x,y)";

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        RingPtr free = make_free({"x", "y"});
        std::vector<Value> args;
        for (std::size_t i = 0; i < l; ++i) {
            // x y^(i+2): letters 0 = x, 1 = y
            Word w;
            w.letters.push_back(0);
            w.letters.insert(w.letters.end(), i + 2, 1);
            FreeElem f;
            f.terms.emplace(std::move(w), Int(1));
            args.push_back(Value{std::move(f)});
        }
        Value s = sym_poly_eval(*free, args);
        const auto& terms = std::get<FreeElem>(s.rep).terms;

        if (terms.empty())
            rep.fail("nonzero", "s_" + std::to_string(l) + " vanished on the witness arguments");
        else
            rep.pass("nonzero", "value=" + free->show(s));

        std::uint64_t factorial = 1;
        for (std::size_t i = 2; i <= l; ++i)
            factorial *= i;
        if (terms.size() == factorial)
            rep.pass("term_count", "terms=" + std::to_string(terms.size()));
        else
            rep.fail("term_count", "terms=" + std::to_string(terms.size()) +
                                       "; expected=" + std::to_string(factorial));

        bool unit = true;
        for (const auto& [w, c] : terms)
            if (c != 1 && c != -1) {
                unit = false;
                rep.fail("unit_coefficients", "coefficient " + c.str());
                break;
            }
        if (unit)
            rep.pass("unit_coefficients");
    });
}

VerificationReport span_vanishing_test(std::size_t l, const RingPtr& ring, std::uint64_t trials,
                                       std::uint64_t seed, SampleParams base_params) {
    if (l < 1 || l > 5)
        throw std::invalid_argument("span test supports l in 1..5");

    VerificationReport report;
    report.suite = "span";
    report.ring = ring->spec();
    report.mode = "random";
    report.seed = seed;

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        Rng rng(seed);
        const std::string name = "s" + std::to_string(l + 1) + "_vanishes_on_span" + std::to_string(l);
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::vector<Value> base;
            for (std::size_t i = 0; i < l; ++i)
                base.push_back(ring->random_element(rng, base_params));
            std::vector<Value> combos;
            std::vector<std::vector<long long>> coeffs;
            for (std::size_t c = 0; c < l + 1; ++c) {
                Value acc = ring->zero();
                std::vector<long long> row;
                for (std::size_t i = 0; i < l; ++i) {
                    long long k = static_cast<long long>(rng.below(7)) - 3;  // [-3, 3]
                    row.push_back(k);
                    acc = ring->add(acc, scale_int(*ring, k, base[i]));
                }
                combos.push_back(std::move(acc));
                coeffs.push_back(std::move(row));
            }
            Value s = sym_poly_eval(*ring, combos);
            if (!ring->is_zero(s)) {
                std::string cx = "trial=" + std::to_string(t);
                for (std::size_t i = 0; i < l; ++i)
                    cx += "; g" + std::to_string(i + 1) + "=" + ring->show(base[i]);
                for (std::size_t c = 0; c < coeffs.size(); ++c) {
                    cx += "; a" + std::to_string(c + 1) + "=[";
                    for (std::size_t i = 0; i < coeffs[c].size(); ++i)
                        cx += (i ? "," : "") + std::to_string(coeffs[c][i]);
                    cx += "]";
                }
                cx += "; value=" + ring->show(s);
                rep.fail(name, cx);
                return;
            }
        }
        rep.pass(name, "trials=" + std::to_string(trials));
    });
}

VerificationReport amitsur_levitzki_check(std::uint32_t n, const RingPtr& base,
                                          const Strategy& strategy) {
    VerificationReport report;
    report.suite = "al";
    report.ring = "Mat(" + std::to_string(n) + "," + base->spec() + ")";
    report.mode = strategy.mode_name();
    if (strategy.is_random())
        report.seed = strategy.seed;

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        RingPtr mat = make_mat(n, base);
        const std::size_t even = 2 * static_cast<std::size_t>(n);
        const std::string even_name = "s" + std::to_string(even) + "_vanishes";

        ScanOutcome out = scan_tuples(*mat, strategy, even,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                Value s = sym_poly_eval(*mat, t);
                if (mat->is_zero(s))
                    return std::nullopt;
                std::string cx;
                for (std::size_t i = 0; i < t.size(); ++i)
                    cx += (i ? "; " : "") + ("m" + std::to_string(i + 1)) + "=" + mat->show(t[i]);
                return cx + "; value=" + mat->show(s);
            });
        if (out.counterexample)
            rep.fail(even_name, *out.counterexample);
        else
            rep.pass(even_name, "tuples=" + std::to_string(out.tuples));

        const std::string odd_name = "s" + std::to_string(even - 1) + "_witness";
        std::optional<std::string> witness;
        scan_tuples(*mat, strategy, even - 1,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                Value s = sym_poly_eval(*mat, t);
                if (mat->is_zero(s))
                    return std::nullopt;
                std::string cx;
                for (std::size_t i = 0; i < t.size(); ++i)
                    cx += (i ? "; " : "") + ("m" + std::to_string(i + 1)) + "=" + mat->show(t[i]);
                witness = cx + "; value=" + mat->show(s);
                return witness;  // stop scanning
            });
        if (witness)
            rep.pass(odd_name, *witness);
        else
            rep.fail(odd_name, "no tuple with s_" + std::to_string(even - 1) + " != 0 found");
    });
}

}  // namespace elring
