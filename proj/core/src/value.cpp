#include "elring/value.hpp"

#include <functional>

namespace elring {

void free_add_term(FreeElem& f, const Word& w, const Int& coeff) {
    if (coeff == 0)
        return;
    auto it = f.terms.find(w);
    if (it == f.terms.end()) {
        f.terms.emplace(w, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        f.terms.erase(it);
}

bool operator==(const MatrixRep& a, const MatrixRep& b) {
    return a.n == b.n && a.entries == b.entries;
}

bool operator==(const Value& a, const Value& b) {
    return a.rep == b.rep;
}

namespace {

void put_u64(std::string& out, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<char>(x & 0xff));
        x >>= 8;
    }
}

}  // namespace

void encode_value(const Value& v, std::string& out) {
    switch (v.rep.index()) {
    case 0:
        out.push_back('u');
        put_u64(out, std::get<std::uint64_t>(v.rep));
        break;
    case 1: {
        out.push_back('p');
        const auto& p = std::get<PairRep>(v.rep);
        put_u64(out, p[0]);
        put_u64(out, p[1]);
        break;
    }
    case 2: {
        out.push_back('q');
        const auto& q = std::get<QuadRep>(v.rep);
        for (auto x : q)
            put_u64(out, x);
        break;
    }
    case 3: {
        out.push_back('f');
        const auto& f = std::get<FreeElem>(v.rep);
        put_u64(out, f.terms.size());
        for (const auto& [word, coeff] : f.terms) {
            put_u64(out, word.letters.size());
            out.append(word.letters.begin(), word.letters.end());
            std::string c = coeff.str();
            put_u64(out, c.size());
            out.append(c);
        }
        break;
    }
    case 4: {
        out.push_back('m');
        const auto& m = std::get<MatrixRep>(v.rep);
        put_u64(out, m.n);
        for (const auto& e : m.entries)
            encode_value(e, out);
        break;
    }
    }
}

std::string encoded(const Value& v) {
    std::string out;
    encode_value(v, out);
    return out;
}

std::size_t ValueHash::operator()(const Value& v) const {
    return std::hash<std::string>{}(encoded(v));
}

}  // namespace elring
