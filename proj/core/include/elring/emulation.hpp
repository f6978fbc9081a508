#pragma once

#include <optional>

#include "elring/matrix.hpp"
#include "elring/report.hpp"
#include "elring/strategy.hpp"

namespace elring {

/// Rebuilds the ring R inside EL_n(R) on the set U = { x_13(r) }:
/// addition is the group product, negation the group inverse, and
/// multiplication the Weyl-conjugated commutator.
class EmulationContext {
public:
    explicit EmulationContext(RingPtr ring, std::uint32_t n = 3);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t dim() const { return n_; }

    const RingMatrix& zero() const { return zero_; }  // the identity matrix
    const RingMatrix& one() const { return one_; }    // rho(1)

    RingMatrix rho(const Value& r) const;

    /// The (1,3) entry when the matrix is Id + r*E13; nullopt otherwise.
    std::optional<Value> u_entry(const RingMatrix& m) const;

    /// u1 + u2 := u1 u2. Throws std::domain_error off U.
    RingMatrix add(const RingMatrix& u1, const RingMatrix& u2) const;

    /// -u := u^-1 (structural: x_13(r)^-1 = x_13(-r)).
    RingMatrix neg(const RingMatrix& u) const;

    /// u1 x u2 := [w23 u1 w23^-1, w12 u2 w12^-1].
    RingMatrix mul(const RingMatrix& u1, const RingMatrix& u2) const;

private:
    RingMatrix require_u(const RingMatrix& m, const char* op) const;

    RingPtr ring_;
    std::uint32_t n_;
    RingMatrix w12_, w12_inv_, w23_, w23_inv_;
    RingMatrix zero_, one_;
};

/// Checks that rho is an injective ring homomorphism onto U and that the
/// image, under the emulated operations, satisfies the ring axioms.
VerificationReport verify_emulated_ring(const RingPtr& ring, const Strategy& strategy,
                                        std::uint32_t n = 3);

}  // namespace elring
