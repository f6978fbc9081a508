#include "elring/matrix.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "elring/axioms.hpp"

namespace elring {

RingMatrix::RingMatrix(RingPtr ring, std::uint32_t n, std::vector<Value> entries)
    : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
    if (n_ < 2)
        throw std::invalid_argument("matrix dimension must be >= 2");
    if (entries_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("entry count does not match dimension");
}

RingMatrix RingMatrix::identity(RingPtr ring, std::uint32_t n) {
    std::vector<Value> e(static_cast<std::size_t>(n) * n, ring->zero());
    for (std::uint32_t i = 0; i < n; ++i)
        e[i * n + i] = ring->one();
    return RingMatrix(std::move(ring), n, std::move(e));
}

RingMatrix RingMatrix::elementary(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                                  const Value& r) {
    if (i == j)
        throw std::invalid_argument("elementary matrix needs i != j");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("elementary matrix index out of range");
    RingMatrix m = identity(std::move(ring), n);
    m.set(i, j, r);
    return m;
}

const Value& RingMatrix::at(std::uint32_t i, std::uint32_t j) const {
    return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void RingMatrix::set(std::uint32_t i, std::uint32_t j, Value v) {
    entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = std::move(v);
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
    if (n_ != other.n_ || ring_->spec() != other.ring_->spec())
        throw std::invalid_argument("matrix dimension/ring mismatch");
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n_) * n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) {
            Value acc = ring_->mul(entries_[i * n_], other.entries_[j]);
            for (std::uint32_t k = 1; k < n_; ++k)
                acc = ring_->add(acc, ring_->mul(entries_[i * n_ + k], other.entries_[k * n_ + j]));
            out.push_back(std::move(acc));
        }
    }
    return RingMatrix(ring_, n_, std::move(out));
}

bool RingMatrix::operator==(const RingMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
}

RingMatrix RingMatrix::transpose() const {
    std::vector<Value> out(entries_.size(), ring_->zero());
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j)
            out[j * n_ + i] = entries_[i * n_ + j];
    return RingMatrix(ring_, n_, std::move(out));
}

bool RingMatrix::is_identity() const {
    return *this == identity(ring_, n_);
}

std::string RingMatrix::show() const {
    std::string out = "[";
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i)
            out += "; ";
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (j)
                out += ", ";
            out += ring_->show(entries_[i * n_ + j]);
        }
    }
    return out + "]";
}

std::string RingMatrix::key() const {
    std::string out;
    for (const auto& e : entries_)
        encode_value(e, out);
    return out;
}

RingMatrix weyl(const RingPtr& ring, std::uint32_t n, WeylKind kind) {
    if (n < 3)
        throw std::invalid_argument("Weyl elements need n >= 3");
    RingMatrix m = RingMatrix::identity(ring, n);
    Value one = ring->one();
    Value minus_one = ring->neg(one);
    if (kind == WeylKind::w12) {
        // [[0,-1,0],[1,0,0],[0,0,1]]
        m.set(1, 1, ring->zero());
        m.set(2, 2, ring->zero());
        m.set(1, 2, minus_one);
        m.set(2, 1, one);
    } else {
        // [[1,0,0],[0,0,1],[0,-1,0]]
        m.set(2, 2, ring->zero());
        m.set(3, 3, ring->zero());
        m.set(2, 3, one);
        m.set(3, 2, minus_one);
    }
    return m;
}

RingMatrix weyl_inverse(const RingPtr& ring, std::uint32_t n, WeylKind kind) {
    // Signed permutation matrices with +-1 entries invert by transposition.
    return weyl(ring, n, kind).transpose();
}

RingMatrix commutator(const RingMatrix& g, const RingMatrix& g_inv, const RingMatrix& h,
                      const RingMatrix& h_inv) {
    return g * h * g_inv * h_inv;
}

RingMatrix elementary_commutator(const RingPtr& ring, std::uint32_t n, std::uint32_t i,
                                 std::uint32_t j, const Value& r, std::uint32_t p, std::uint32_t q,
                                 const Value& s) {
    RingMatrix g = RingMatrix::elementary(ring, n, i, j, r);
    RingMatrix g_inv = RingMatrix::elementary(ring, n, i, j, ring->neg(r));
    RingMatrix h = RingMatrix::elementary(ring, n, p, q, s);
    RingMatrix h_inv = RingMatrix::elementary(ring, n, p, q, ring->neg(s));
    return commutator(g, g_inv, h, h_inv);
}

GroupWord GroupWord::inverse() const {
    GroupWord out{ring, n, {}};
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        ElementaryGen g = *it;
        g.sign = -g.sign;
        out.letters.push_back(std::move(g));
    }
    return out;
}

RingMatrix GroupWord::evaluate() const {
    RingMatrix acc = RingMatrix::identity(ring, n);
    for (const auto& g : letters) {
        const Value r = g.sign > 0 ? g.r : ring->neg(g.r);
        acc = acc * RingMatrix::elementary(ring, n, g.i, g.j, r);
    }
    return acc;
}

BfsResult bfs_order(const std::vector<RingMatrix>& generators, const RingPtr& ring,
                    std::uint32_t n, std::uint64_t cap) {
    RingMatrix id = RingMatrix::identity(ring, n);
    std::unordered_set<std::string> visited;
    visited.insert(id.key());
    std::deque<RingMatrix> frontier;
    frontier.push_back(id);
    while (!frontier.empty()) {
        RingMatrix cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            RingMatrix next = cur * g;
            std::string k = next.key();
            if (visited.insert(std::move(k)).second) {
                if (visited.size() > cap)
                    return {visited.size(), true};
                frontier.push_back(std::move(next));
            }
        }
    }
    return {visited.size(), false};
}

BfsResult group_order_bfs(std::uint32_t n, const RingPtr& ring, std::uint64_t cap) {
    auto card = ring->cardinality();
    if (!card)
        throw std::invalid_argument("BFS needs a finite ring, got " + ring->spec());
    std::vector<RingMatrix> gens;
    for (std::uint64_t e = 0; e < *card; ++e) {
        Value r = ring->element(e);
        if (ring->is_zero(r))
            continue;
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= n; ++j)
                if (i != j)
                    gens.push_back(RingMatrix::elementary(ring, n, i, j, r));
    }
    return bfs_order(gens, ring, n, cap);
}

bool is_ideal(const Ring& ring, const std::vector<Value>& elements) {
    std::unordered_set<std::string> in_set;
    for (const auto& v : elements)
        in_set.insert(encoded(v));
    auto contains = [&](const Value& v) { return in_set.count(encoded(v)) != 0; };

    if (!contains(ring.zero()))
        return false;
    std::vector<Value> everything = all_elements(ring);
    for (const auto& a : elements) {
        if (!contains(ring.neg(a)))
            return false;
        for (const auto& b : elements)
            if (!contains(ring.add(a, b)))
                return false;
        for (const auto& r : everything)
            if (!contains(ring.mul(a, r)) || !contains(ring.mul(r, a)))
                return false;
    }
    return true;
}

std::vector<GroupWord> congruence_generators(std::uint32_t n, const RingPtr& ring,
                                             const std::vector<Value>& ideal_elements) {
    if (!is_ideal(*ring, ideal_elements))
        throw std::invalid_argument("generator set is not a two-sided ideal in " + ring->spec());
    std::vector<GroupWord> words;
    for (const auto& r : ideal_elements)
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= n; ++j)
                if (i != j)
                    words.push_back(GroupWord{ring, n, {ElementaryGen{i, j, r, +1}}});
    return words;
}

}  // namespace elring
