#pragma once

#include <string_view>

#include "elring/matrix.hpp"
#include "elring/report.hpp"
#include "elring/strategy.hpp"

namespace elring {

struct SteinbergGen {
    std::uint32_t i = 1, j = 2;
    Value r;
    int sign = +1;
};

/// Formal product of Steinberg generators x_ij(r)^(+-1), uninterpreted
/// until projected.
struct SteinbergWord {
    RingPtr ring;
    std::uint32_t n = 3;
    std::vector<SteinbergGen> letters;

    std::string show() const;  // x(i,j;expr) x(i,j;expr)^-1 ...
};

/// The surjection onto EL_n(R): x_ij(r) -> Id + r e_ij, signs resolved via
/// x_ij(r)^-1 -> x_ij(-r).
RingMatrix steinberg_project(const SteinbergWord& w);

/// Sound, projection-preserving rewriting: merges adjacent same-position
/// letters, deletes r = 0 letters, and swaps adjacent commuting letters
/// (i != q, j != p) toward lexicographic (i,j) order, to a fixpoint.
/// Word length never increases.
SteinbergWord local_reduce(const SteinbergWord& w);

/// Projects both sides of the three presentation relation families over
/// sampled or exhausted (r, s) and all applicable index patterns. The third
/// family is checked as [x_ij(r), x_jk(s)] = x_ik(r*s); the check named
/// *_literal_discrepancy records that the literal form x_ik(s) fails for
/// some r != 1.
VerificationReport relations_check(std::uint32_t n, const RingPtr& ring, const Strategy& strategy);

/// Reports |EL_n(R)| by BFS (a lower bound for |St_n(R)|); K_{2,n} itself is
/// not computed.
VerificationReport steinberg_order_probe(std::uint32_t n, const RingPtr& ring, std::uint64_t cap);

/// CLI word syntax: x(1,2;r_expr) x(2,3;s_expr)^-1 ...
SteinbergWord parse_steinberg_word(const RingPtr& ring, std::uint32_t n, std::string_view text);

}  // namespace elring
