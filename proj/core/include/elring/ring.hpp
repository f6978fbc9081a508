#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "elring/rng.hpp"
#include "elring/value.hpp"

namespace elring {

/// Runtime-selected ring instance. Elements are type-erased Values kept in
/// canonical form by every operation, so Value equality is ring equality.
///
/// All operations are pure; Ring instances are immutable and shareable.
class Ring {
public:
    virtual ~Ring() = default;

    /// Canonical spec string, e.g. "Z/6", "Mat(2,GF(2))", "Free(Z;x,y)".
    const std::string& spec() const { return spec_; }

    /// Additive order of 1 (0 for the free ring over Z).
    virtual std::uint64_t characteristic() const = 0;

    virtual Value zero() const = 0;
    virtual Value one() const = 0;
    virtual Value add(const Value& a, const Value& b) const = 0;
    virtual Value neg(const Value& a) const = 0;
    virtual Value mul(const Value& a, const Value& b) const = 0;

    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

    /// Number of elements, or nullopt when the ring is infinite (or too
    /// large to enumerate).
    virtual std::optional<std::uint64_t> cardinality() const = 0;

    bool is_finite() const { return cardinality().has_value(); }

    /// index-th element of a finite ring; enumeration visits each element
    /// exactly once in a fixed order.
    virtual Value element(std::uint64_t index) const;

    virtual std::string show(const Value& v) const = 0;

    /// Identifiers usable in element expressions for this ring.
    virtual const std::vector<std::string>& generator_names() const;
    virtual Value generator(std::size_t index) const;

    /// k * 1, for integer literals.
    virtual Value from_int(long long k) const;

    virtual Value random_element(Rng& rng, const SampleParams& params) const;

    bool is_zero(const Value& v) const { return v == zero(); }
    bool is_one(const Value& v) const { return v == one(); }

protected:
    explicit Ring(std::string spec) : spec_(std::move(spec)) {}

    std::string spec_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_zmod(std::uint64_t m);
RingPtr make_gf2k(unsigned k);  // k in {1,2,3}; fixed irreducibles
RingPtr make_free(std::vector<std::string> generators);
RingPtr make_mat(std::uint32_t n, RingPtr inner);
RingPtr make_exotic(unsigned k);       // V = K x K over K = GF(2^k)
RingPtr make_endo(std::uint64_t p);    // End(Z/p + Z/p^2), p prime <= 7

/// Parses the ring-spec grammar:
///   Z/<m> | GF(2) | GF(4) | GF(8) | Mat(<n>,<ring>) | Free(Z;<idents>)
///   | Exotic(<field>) | End(<p>)
/// GF(p) for an odd prime p is accepted as an alias of Z/p.
/// Throws std::invalid_argument on a malformed or unsupported spec.
RingPtr parse_ring_spec(std::string_view spec);

}  // namespace elring
