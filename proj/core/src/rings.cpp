#include "elring/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elring {

Value Ring::element(std::uint64_t) const {
    throw std::logic_error(spec_ + " is not enumerable");
}

const std::vector<std::string>& Ring::generator_names() const {
    static const std::vector<std::string> none;
    return none;
}

Value Ring::generator(std::size_t) const {
    throw std::out_of_range(spec_ + " has no expression generators");
}

Value Ring::from_int(long long k) const {
    // k * 1 by binary doubling; valid in the additive group of any ring.
    bool negative = k < 0;
    unsigned long long n = negative ? -static_cast<unsigned long long>(k) : k;
    Value acc = zero();
    Value power = one();
    while (n != 0) {
        if (n & 1)
            acc = add(acc, power);
        n >>= 1;
        if (n != 0)
            power = add(power, power);
    }
    return negative ? neg(acc) : acc;
}

Value Ring::random_element(Rng& rng, const SampleParams&) const {
    auto card = cardinality();
    if (!card)
        throw std::logic_error(spec_ + " cannot be sampled uniformly");
    return element(rng.below(*card));
}

// ---------------------------------------------------------------------------
// Z/m

namespace {

class ZModRing final : public Ring {
public:
    ZModRing(std::uint64_t m, std::string spec) : Ring(std::move(spec)), m_(m) {
        if (m < 2)
            throw std::invalid_argument("Z/m needs m >= 2, got m=" + std::to_string(m));
    }

    std::uint64_t characteristic() const override { return m_; }
    Value zero() const override { return Value{std::uint64_t{0}}; }
    Value one() const override { return Value{std::uint64_t{1}}; }

    Value add(const Value& a, const Value& b) const override {
        std::uint64_t x = std::get<std::uint64_t>(a.rep);
        std::uint64_t y = std::get<std::uint64_t>(b.rep);
        std::uint64_t s = x + y;
        if (s >= m_ || s < x)
            s -= m_;
        return Value{s};
    }

    Value neg(const Value& a) const override {
        std::uint64_t x = std::get<std::uint64_t>(a.rep);
        return Value{x == 0 ? 0 : m_ - x};
    }

    Value mul(const Value& a, const Value& b) const override {
        unsigned __int128 p = std::get<std::uint64_t>(a.rep);
        p *= std::get<std::uint64_t>(b.rep);
        return Value{static_cast<std::uint64_t>(p % m_)};
    }

    std::optional<std::uint64_t> cardinality() const override { return m_; }
    Value element(std::uint64_t index) const override { return Value{index}; }

    Value from_int(long long k) const override {
        long long r = k % static_cast<long long>(m_);
        if (r < 0)
            r += static_cast<long long>(m_);
        return Value{static_cast<std::uint64_t>(r)};
    }

    std::string show(const Value& v) const override {
        return std::to_string(std::get<std::uint64_t>(v.rep));
    }

private:
    std::uint64_t m_;
};

// ---------------------------------------------------------------------------
// GF(2^k), polynomial basis over fixed irreducibles:
//   k=1: GF(2) directly, k=2: x^2+x+1, k=3: x^3+x+1.

class GF2kRing final : public Ring {
public:
    explicit GF2kRing(unsigned k)
        : Ring("GF(" + std::to_string(1u << k) + ")"), k_(k) {
        switch (k) {
        case 1: poly_ = 0b11; break;
        case 2: poly_ = 0b111; break;
        case 3: poly_ = 0b1011; break;
        default:
            throw std::invalid_argument("GF(2^k) supports k in {1,2,3}");
        }
        if (k_ >= 2)
            gens_ = {"w"};
    }

    std::uint64_t characteristic() const override { return 2; }
    Value zero() const override { return Value{std::uint64_t{0}}; }
    Value one() const override { return Value{std::uint64_t{1}}; }

    Value add(const Value& a, const Value& b) const override {
        return Value{std::get<std::uint64_t>(a.rep) ^ std::get<std::uint64_t>(b.rep)};
    }

    Value neg(const Value& a) const override { return a; }

    Value mul(const Value& a, const Value& b) const override {
        std::uint64_t x = std::get<std::uint64_t>(a.rep);
        std::uint64_t y = std::get<std::uint64_t>(b.rep);
        std::uint64_t r = 0;
        while (y != 0) {
            if (y & 1)
                r ^= x;
            y >>= 1;
            x <<= 1;
            if (x & (std::uint64_t{1} << k_))
                x ^= poly_;
        }
        return Value{r};
    }

    std::optional<std::uint64_t> cardinality() const override {
        return std::uint64_t{1} << k_;
    }
    Value element(std::uint64_t index) const override { return Value{index}; }

    Value from_int(long long k) const override {
        return Value{static_cast<std::uint64_t>(k & 1)};
    }

    const std::vector<std::string>& generator_names() const override { return gens_; }

    Value generator(std::size_t index) const override {
        if (index >= gens_.size())
            throw std::out_of_range("no such generator");
        return Value{std::uint64_t{2}};  // the class of x
    }

    std::string show(const Value& v) const override {
        std::uint64_t bits = std::get<std::uint64_t>(v.rep);
        if (bits == 0)
            return "0";
        std::string out;
        for (int d = static_cast<int>(k_) - 1; d >= 0; --d) {
            if (!(bits & (std::uint64_t{1} << d)))
                continue;
            if (!out.empty())
                out += "+";
            if (d == 0)
                out += "1";
            else if (d == 1)
                out += "w";
            else
                out += "w^" + std::to_string(d);
        }
        return out;
    }

private:
    unsigned k_;
    std::uint64_t poly_ = 0;
    std::vector<std::string> gens_;
};

// ---------------------------------------------------------------------------
// Free ring Z<x,y,...>

class FreeRing final : public Ring {
public:
    explicit FreeRing(std::vector<std::string> gens)
        : Ring(make_spec(gens)), gens_(std::move(gens)) {
        if (gens_.empty() || gens_.size() > 200)
            throw std::invalid_argument("free ring needs 1..200 generators");
        for (const auto& g : gens_) {
            if (g.empty() || !std::all_of(g.begin(), g.end(), [](unsigned char c) {
                    return std::isalnum(c) || c == '_';
                }) || std::isdigit(static_cast<unsigned char>(g.front())))
                throw std::invalid_argument("bad generator name '" + g + "'");
        }
        auto sorted = gens_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate generator name");
    }

    std::uint64_t characteristic() const override { return 0; }

    Value zero() const override { return Value{FreeElem{}}; }

    Value one() const override {
        FreeElem f;
        f.terms.emplace(Word{}, Int(1));
        return Value{std::move(f)};
    }

    Value add(const Value& a, const Value& b) const override {
        FreeElem out = std::get<FreeElem>(a.rep);
        for (const auto& [w, c] : std::get<FreeElem>(b.rep).terms)
            free_add_term(out, w, c);
        return Value{std::move(out)};
    }

    Value neg(const Value& a) const override {
        FreeElem out = std::get<FreeElem>(a.rep);
        for (auto& [w, c] : out.terms)
            c = -c;
        return Value{std::move(out)};
    }

    Value mul(const Value& a, const Value& b) const override {
        const auto& fa = std::get<FreeElem>(a.rep);
        const auto& fb = std::get<FreeElem>(b.rep);
        FreeElem out;
        Word w;
        for (const auto& [wa, ca] : fa.terms) {
            for (const auto& [wb, cb] : fb.terms) {
                w.letters.clear();
                w.letters.reserve(wa.letters.size() + wb.letters.size());
                w.letters.insert(w.letters.end(), wa.letters.begin(), wa.letters.end());
                w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
                free_add_term(out, w, ca * cb);
            }
        }
        return Value{std::move(out)};
    }

    std::optional<std::uint64_t> cardinality() const override { return std::nullopt; }

    Value from_int(long long k) const override {
        FreeElem f;
        if (k != 0)
            f.terms.emplace(Word{}, Int(k));
        return Value{std::move(f)};
    }

    const std::vector<std::string>& generator_names() const override { return gens_; }

    Value generator(std::size_t index) const override {
        if (index >= gens_.size())
            throw std::out_of_range("no such generator");
        FreeElem f;
        f.terms.emplace(Word{{static_cast<std::uint8_t>(index)}}, Int(1));
        return Value{std::move(f)};
    }

    Value random_element(Rng& rng, const SampleParams& params) const override {
        for (;;) {
            FreeElem f;
            std::size_t terms = 1 + rng.below(params.max_terms);
            for (std::size_t t = 0; t < terms; ++t) {
                Word w;
                std::size_t degree = rng.below(params.max_degree + 1);
                for (std::size_t d = 0; d < degree; ++d)
                    w.letters.push_back(static_cast<std::uint8_t>(rng.below(gens_.size())));
                free_add_term(f, w, Int(rng.signed_nonzero(params.coeff_bound)));
            }
            if (!f.terms.empty())
                return Value{std::move(f)};
        }
    }

    std::string show(const Value& v) const override {
        const auto& f = std::get<FreeElem>(v.rep);
        if (f.terms.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : f.terms) {
            bool negative = c < 0;
            Int mag = negative ? Int(-c) : c;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            std::string word = show_word(w);
            if (word.empty())
                out += mag.str();
            else if (mag == 1)
                out += word;
            else
                out += mag.str() + "*" + word;
        }
        return out;
    }

private:
    static std::string make_spec(const std::vector<std::string>& gens) {
        std::string s = "Free(Z;";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i)
                s += ",";
            s += gens[i];
        }
        return s + ")";
    }

    std::string show_word(const Word& w) const {
        std::string out;
        std::size_t i = 0;
        while (i < w.letters.size()) {
            std::size_t run = 1;
            while (i + run < w.letters.size() && w.letters[i + run] == w.letters[i])
                ++run;
            if (!out.empty())
                out += "*";
            out += gens_[w.letters[i]];
            if (run > 1)
                out += "^" + std::to_string(run);
            i += run;
        }
        return out;
    }

    std::vector<std::string> gens_;
};

// ---------------------------------------------------------------------------
// Mat(n, inner): the full matrix ring.

class MatRing final : public Ring {
public:
    MatRing(std::uint32_t n, RingPtr inner)
        : Ring("Mat(" + std::to_string(n) + "," + inner->spec() + ")"),
          n_(n), inner_(std::move(inner)) {
        if (n_ < 1 || n_ > 9)
            throw std::invalid_argument("Mat(n,R) supports 1 <= n <= 9");
        gens_ = inner_->generator_names();
        for (std::uint32_t i = 1; i <= n_; ++i)
            for (std::uint32_t j = 1; j <= n_; ++j)
                gens_.push_back("e" + std::to_string(i) + std::to_string(j));
    }

    std::uint64_t characteristic() const override { return inner_->characteristic(); }

    Value zero() const override { return fill(inner_->zero()); }

    Value one() const override {
        MatrixRep m = std::get<MatrixRep>(fill(inner_->zero()).rep);
        for (std::uint32_t i = 0; i < n_; ++i)
            m.entries[i * n_ + i] = inner_->one();
        return Value{std::move(m)};
    }

    Value add(const Value& a, const Value& b) const override {
        const auto& ma = std::get<MatrixRep>(a.rep);
        const auto& mb = std::get<MatrixRep>(b.rep);
        MatrixRep out{n_, {}};
        out.entries.reserve(n_ * n_);
        for (std::size_t i = 0; i < ma.entries.size(); ++i)
            out.entries.push_back(inner_->add(ma.entries[i], mb.entries[i]));
        return Value{std::move(out)};
    }

    Value neg(const Value& a) const override {
        MatrixRep out = std::get<MatrixRep>(a.rep);
        for (auto& e : out.entries)
            e = inner_->neg(e);
        return Value{std::move(out)};
    }

    Value mul(const Value& a, const Value& b) const override {
        const auto& ma = std::get<MatrixRep>(a.rep);
        const auto& mb = std::get<MatrixRep>(b.rep);
        MatrixRep out{n_, {}};
        out.entries.reserve(n_ * n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (std::uint32_t j = 0; j < n_; ++j) {
                // left factor from A: sum_k A[i][k] * B[k][j]
                Value acc = inner_->mul(ma.entries[i * n_], mb.entries[j]);
                for (std::uint32_t k = 1; k < n_; ++k)
                    acc = inner_->add(acc,
                        inner_->mul(ma.entries[i * n_ + k], mb.entries[k * n_ + j]));
                out.entries.push_back(std::move(acc));
            }
        }
        return Value{std::move(out)};
    }

    std::optional<std::uint64_t> cardinality() const override {
        auto c = inner_->cardinality();
        if (!c)
            return std::nullopt;
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < n_ * n_; ++i) {
            if (total > UINT64_MAX / *c)
                return std::nullopt;
            total *= *c;
        }
        return total;
    }

    Value element(std::uint64_t index) const override {
        auto c = inner_->cardinality();
        if (!c)
            throw std::logic_error(spec_ + " is not enumerable");
        MatrixRep m{n_, {}};
        m.entries.reserve(n_ * n_);
        for (std::uint32_t i = 0; i < n_ * n_; ++i) {
            m.entries.push_back(inner_->element(index % *c));
            index /= *c;
        }
        return Value{std::move(m)};
    }

    const std::vector<std::string>& generator_names() const override { return gens_; }

    Value generator(std::size_t index) const override {
        std::size_t inner_count = inner_->generator_names().size();
        if (index < inner_count) {
            // inner generator lifted as a scalar diagonal matrix
            MatrixRep m = std::get<MatrixRep>(zero().rep);
            Value g = inner_->generator(index);
            for (std::uint32_t i = 0; i < n_; ++i)
                m.entries[i * n_ + i] = g;
            return Value{std::move(m)};
        }
        std::size_t unit = index - inner_count;
        if (unit >= static_cast<std::size_t>(n_) * n_)
            throw std::out_of_range("no such generator");
        MatrixRep m = std::get<MatrixRep>(zero().rep);
        m.entries[unit] = inner_->one();
        return Value{std::move(m)};
    }

    Value random_element(Rng& rng, const SampleParams& params) const override {
        MatrixRep m{n_, {}};
        m.entries.reserve(n_ * n_);
        for (std::uint32_t i = 0; i < n_ * n_; ++i)
            m.entries.push_back(inner_->random_element(rng, params));
        return Value{std::move(m)};
    }

    std::string show(const Value& v) const override {
        const auto& m = std::get<MatrixRep>(v.rep);
        std::string out = "[";
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (i)
                out += "; ";
            for (std::uint32_t j = 0; j < n_; ++j) {
                if (j)
                    out += ", ";
                out += inner_->show(m.entries[i * n_ + j]);
            }
        }
        return out + "]";
    }

private:
    Value fill(const Value& v) const {
        MatrixRep m{n_, std::vector<Value>(static_cast<std::size_t>(n_) * n_, v)};
        return Value{std::move(m)};
    }

    std::uint32_t n_;
    RingPtr inner_;
    std::vector<std::string> gens_;
};

}  // namespace

RingPtr make_zmod(std::uint64_t m) {
    return std::make_shared<ZModRing>(m, "Z/" + std::to_string(m));
}

RingPtr make_gf2k(unsigned k) {
    return std::make_shared<GF2kRing>(k);
}

RingPtr make_free(std::vector<std::string> generators) {
    return std::make_shared<FreeRing>(std::move(generators));
}

RingPtr make_mat(std::uint32_t n, RingPtr inner) {
    return std::make_shared<MatRing>(n, std::move(inner));
}

// ---------------------------------------------------------------------------
// Ring-spec parser

namespace {

class SpecCursor {
public:
    explicit SpecCursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    bool eat_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        std::uint64_t n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = text_[pos_] - '0';
            if (n > (UINT64_MAX - digit) / 10)
                fail("number too large");
            n = n * 10 + digit;
            ++pos_;
        }
        return n;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            fail("expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    void done() {
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad ring spec '" + std::string(text_) + "': " + why +
                                    " at position " + std::to_string(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

RingPtr parse_ring(SpecCursor& cur) {
    if (cur.eat_word("Z/")) {
        std::uint64_t m = cur.number();
        if (m < 2)
            cur.fail("Z/m needs m >= 2");
        return make_zmod(m);
    }
    if (cur.eat_word("GF(")) {
        std::uint64_t q = cur.number();
        cur.expect(')');
        switch (q) {
        case 2: return make_gf2k(1);
        case 4: return make_gf2k(2);
        case 8: return make_gf2k(3);
        default:
            if (is_prime(q))
                return std::make_shared<ZModRing>(q, "GF(" + std::to_string(q) + ")");
            cur.fail("GF(q) supports q in {2,4,8} or an odd prime");
        }
    }
    if (cur.eat_word("Mat(")) {
        std::uint64_t n = cur.number();
        cur.expect(',');
        RingPtr inner = parse_ring(cur);
        cur.expect(')');
        if (n < 1 || n > 9)
            cur.fail("Mat dimension out of range");
        return make_mat(static_cast<std::uint32_t>(n), std::move(inner));
    }
    if (cur.eat_word("Free(")) {
        if (!cur.eat_word("Z"))
            cur.fail("only Free(Z;...) is supported");
        cur.expect(';');
        std::vector<std::string> gens;
        gens.push_back(cur.ident());
        while (cur.eat(','))
            gens.push_back(cur.ident());
        cur.expect(')');
        return make_free(std::move(gens));
    }
    if (cur.eat_word("Exotic(")) {
        if (!cur.eat_word("GF("))
            cur.fail("Exotic needs a GF(2^k) field");
        std::uint64_t q = cur.number();
        cur.expect(')');
        cur.expect(')');
        switch (q) {
        case 2: return make_exotic(1);
        case 4: return make_exotic(2);
        case 8: return make_exotic(3);
        default: cur.fail("Exotic needs GF(2), GF(4) or GF(8)");
        }
    }
    if (cur.eat_word("End(")) {
        std::uint64_t p = cur.number();
        cur.expect(')');
        if (!is_prime(p) || p > 7)
            cur.fail("End(p) needs a prime p <= 7");
        return make_endo(p);
    }
    cur.fail("unknown ring");
    return nullptr;  // unreachable
}

}  // namespace

RingPtr parse_ring_spec(std::string_view spec) {
    SpecCursor cur(spec);
    RingPtr r = parse_ring(cur);
    cur.done();
    return r;
}

}  // namespace elring
