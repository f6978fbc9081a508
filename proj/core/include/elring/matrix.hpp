#pragma once

#include <cstdint>
#include <vector>

#include "elring/ring.hpp"

namespace elring {

/// Square matrix over a runtime ring; the carrier of EL_n(R) elements.
/// Indices in the public API are 1-based, matching the x_ij convention.
class RingMatrix {
public:
    RingMatrix(RingPtr ring, std::uint32_t n, std::vector<Value> entries);

    static RingMatrix identity(RingPtr ring, std::uint32_t n);

    /// x_ij(r) = Id + r e_ij; throws when i == j or an index is out of range.
    static RingMatrix elementary(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                                 const Value& r);

    std::uint32_t dim() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<Value>& entries() const { return entries_; }

    const Value& at(std::uint32_t i, std::uint32_t j) const;  // 1-based
    void set(std::uint32_t i, std::uint32_t j, Value v);

    /// Row-by-column product; entry products keep the left factor from *this.
    RingMatrix operator*(const RingMatrix& other) const;

    bool operator==(const RingMatrix& other) const;

    RingMatrix transpose() const;
    bool is_identity() const;

    std::string show() const;  // rows of comma-separated entries, ';' between rows
    std::string key() const;   // canonical encoding, for visited sets

private:
    RingPtr ring_;
    std::uint32_t n_;
    std::vector<Value> entries_;  // row-major
};

enum class WeylKind { w12, w23 };

/// The two signed-permutation matrices used to move the (1,3) root position,
/// embedded in the top left corner and padded by the identity (n >= 3).
RingMatrix weyl(const RingPtr& ring, std::uint32_t n, WeylKind kind);
RingMatrix weyl_inverse(const RingPtr& ring, std::uint32_t n, WeylKind kind);

/// [g, h] = g h g^-1 h^-1. Inverses are supplied explicitly; they come from
/// structural closed forms (elementary, Weyl, word inversion), never from
/// linear solving.
RingMatrix commutator(const RingMatrix& g, const RingMatrix& g_inv, const RingMatrix& h,
                      const RingMatrix& h_inv);

/// [x_ij(r), x_pq(s)] with structural elementary inverses.
RingMatrix elementary_commutator(const RingPtr& ring, std::uint32_t n, std::uint32_t i,
                                 std::uint32_t j, const Value& r, std::uint32_t p, std::uint32_t q,
                                 const Value& s);

struct ElementaryGen {
    std::uint32_t i = 1, j = 2;
    Value r;
    int sign = +1;  // -1 marks a formal inverse; resolved as x_ij(-r)
};

/// Formal product of elementary generators.
struct GroupWord {
    RingPtr ring;
    std::uint32_t n = 3;
    std::vector<ElementaryGen> letters;

    GroupWord inverse() const;    // letters reversed, signs flipped
    RingMatrix evaluate() const;  // product of the resolved elementary matrices
};

struct BfsResult {
    std::uint64_t order = 0;
    bool capped = false;
};

/// Exact order of the subgroup generated by `generators`, by breadth-first
/// search over the Cayley graph with an exact visited set. Returns
/// capped=true once more than `cap` elements have been seen.
BfsResult bfs_order(const std::vector<RingMatrix>& generators, const RingPtr& ring,
                    std::uint32_t n, std::uint64_t cap);

/// Order of EL_n(R) for finite R: generators are all x_ij(r), r != 0.
BfsResult group_order_bfs(std::uint32_t n, const RingPtr& ring, std::uint64_t cap);

/// Two-sided ideal test by scanning the finite ring.
bool is_ideal(const Ring& ring, const std::vector<Value>& elements);

/// Generating set {x_ij(r) : r in I, i != j} as length-1 words; throws
/// std::invalid_argument when `ideal_elements` is not a two-sided ideal.
std::vector<GroupWord> congruence_generators(std::uint32_t n, const RingPtr& ring,
                                             const std::vector<Value>& ideal_elements);

}  // namespace elring
