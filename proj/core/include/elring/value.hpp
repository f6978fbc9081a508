#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace elring {

/// Exact integer coefficients; free-ring evaluations must never wrap.
using Int = boost::multiprecision::cpp_int;

/// Monomial in a free ring: a sequence of generator indices.
/// The empty word is the multiplicative unit.
struct Word {
    std::vector<std::uint8_t> letters;

    std::size_t degree() const { return letters.size(); }

    bool operator==(const Word&) const = default;

    // Degree-then-lexicographic; ties inside equal degree broken by the
    // generator index sequence. This is the canonical term order everywhere.
    std::strong_ordering operator<=>(const Word& other) const {
        if (auto c = letters.size() <=> other.letters.size(); c != std::strong_ordering::equal)
            return c;
        return letters <=> other.letters;
    }
};

/// Sparse element of a free ring: finite map word -> nonzero coefficient.
struct FreeElem {
    std::map<Word, Int> terms;

    bool operator==(const FreeElem& other) const { return terms == other.terms; }
};

/// Adds coeff * word, dropping the term if the sum cancels to zero.
void free_add_term(FreeElem& f, const Word& w, const Int& coeff);

using PairRep = std::array<std::uint64_t, 2>;  // exotic ring (a, b)
using QuadRep = std::array<std::uint64_t, 4>;  // endomorphism ring (a, b, c, d)

struct Value;

struct MatrixRep {
    std::uint32_t n = 0;
    std::vector<Value> entries;  // row-major, n*n
};
bool operator==(const MatrixRep&, const MatrixRep&);

/// Type-erased ring element. Every ring keeps its elements canonical, so
/// equality and hashing are structural.
struct Value {
    std::variant<std::uint64_t, PairRep, QuadRep, FreeElem, MatrixRep> rep;
};
bool operator==(const Value&, const Value&);

/// Canonical byte encoding; equal values encode identically. Used for
/// hashing and for deterministic ordering of visited sets.
void encode_value(const Value& v, std::string& out);
std::string encoded(const Value& v);

struct ValueHash {
    std::size_t operator()(const Value& v) const;
};

}  // namespace elring
