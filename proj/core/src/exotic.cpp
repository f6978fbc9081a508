#include "elring/exotic.hpp"

#include <algorithm>
#include <set>

#include "elring/axioms.hpp"

namespace elring {

namespace {

class ExoticRing final : public Ring {
public:
    explicit ExoticRing(unsigned k)
        : Ring("Exotic(GF(" + std::to_string(1u << k) + "))"),
          k_(k),
          field_(make_gf2k(k)),
          size_(std::uint64_t{1} << k) {
        gens_.clear();
        if (k_ >= 2)
            gens_.push_back("w");
        gens_.push_back("e");
    }

    unsigned field_bits() const { return k_; }
    const RingPtr& field() const { return field_; }

    std::uint64_t characteristic() const override { return 4; }

    Value zero() const override { return exotic_element(0, 0); }
    Value one() const override { return exotic_element(1, 0); }

    Value add(const Value& u, const Value& v) const override {
        auto [a, b] = exotic_parts(u);
        auto [c, d] = exotic_parts(v);
        // (a,b) + (c,d) = (a + c, ac + b + d)
        return exotic_element(a ^ c, fmul(a, c) ^ b ^ d);
    }

    Value neg(const Value& u) const override {
        auto [a, b] = exotic_parts(u);
        // forced by the addition formula: (a,b) + (a, a^2+b) = (0,0)
        return exotic_element(a, fmul(a, a) ^ b);
    }

    Value mul(const Value& u, const Value& v) const override {
        auto [a, b] = exotic_parts(u);
        auto [c, d] = exotic_parts(v);
        // (a,b) x (c,d) = (ac, b c^2 + a^2 d)
        return exotic_element(fmul(a, c), fmul(b, fmul(c, c)) ^ fmul(fmul(a, a), d));
    }

    std::optional<std::uint64_t> cardinality() const override { return size_ * size_; }

    Value element(std::uint64_t index) const override {
        return exotic_element(index / size_, index % size_);
    }

    const std::vector<std::string>& generator_names() const override { return gens_; }

    Value generator(std::size_t index) const override {
        if (index >= gens_.size())
            throw std::out_of_range("no such generator");
        if (gens_[index] == "w")
            return exotic_element(2, 0);
        return exotic_element(0, 1);
    }

    std::string show(const Value& v) const override {
        auto [a, b] = exotic_parts(v);
        // Monomials in w stay clean under the twisted addition, so every
        // element prints as w^s + w^t*e and parses back to itself.
        std::string out;
        if (a != 0)
            out = monomial(a);
        if (b != 0) {
            if (!out.empty())
                out += " + ";
            std::uint64_t root = sqrt_field(b);
            out += root == 1 ? "e" : monomial(root) + "*e";
        }
        return out.empty() ? "0" : out;
    }

private:
    std::uint64_t fmul(std::uint64_t x, std::uint64_t y) const {
        return std::get<std::uint64_t>(field_->mul(Value{x}, Value{y}).rep);
    }

    std::uint64_t sqrt_field(std::uint64_t b) const {
        // Frobenius is bijective in characteristic 2: sqrt(b) = b^(2^(k-1))
        std::uint64_t r = b;
        for (unsigned i = 0; i + 1 < k_; ++i)
            r = fmul(r, r);
        return r;
    }

    std::string monomial(std::uint64_t a) const {
        std::uint64_t p = 1;
        for (unsigned t = 0; t < size_; ++t) {
            if (p == a)
                return t == 0 ? "1" : (t == 1 ? "w" : "w^" + std::to_string(t));
            p = fmul(p, 2);
        }
        throw std::logic_error("no discrete log for 0");
    }

    unsigned k_;
    RingPtr field_;
    std::uint64_t size_;
    std::vector<std::string> gens_;
};

}  // namespace

std::pair<std::uint64_t, std::uint64_t> exotic_parts(const Value& v) {
    const auto& p = std::get<PairRep>(v.rep);
    return {p[0], p[1]};
}

Value exotic_element(std::uint64_t a, std::uint64_t b) {
    return Value{PairRep{a, b}};
}

RingPtr make_exotic(unsigned k) {
    return std::make_shared<ExoticRing>(k);
}

std::optional<Value> exotic_inverse(const Ring& V, const Value& u) {
    Value one = V.one();
    auto card = V.cardinality();
    std::optional<Value> found;
    for (std::uint64_t i = 0; i < *card; ++i) {
        Value v = V.element(i);
        if (V.mul(u, v) == one && V.mul(v, u) == one) {
            found = std::move(v);
            break;
        }
    }
    return found;
}

namespace {

std::vector<Value> close_ideal(const Ring& V, const std::vector<Value>& seed,
                               const std::vector<Value>& everything) {
    std::set<std::string> keys;
    std::vector<Value> members;
    auto insert = [&](const Value& v) {
        if (keys.insert(encoded(v)).second) {
            members.push_back(v);
            return true;
        }
        return false;
    };
    insert(V.zero());
    for (const auto& v : seed)
        insert(v);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Value> snapshot = members;
        for (const auto& x : snapshot) {
            for (const auto& y : snapshot)
                grew |= insert(V.add(x, y));
            for (const auto& r : everything) {
                grew |= insert(V.mul(x, r));
                grew |= insert(V.mul(r, x));
            }
        }
    }
    std::sort(members.begin(), members.end(),
              [](const Value& a, const Value& b) { return encoded(a) < encoded(b); });
    return members;
}

}  // namespace

std::vector<std::vector<Value>> ideal_lattice(const Ring& V) {
    std::vector<Value> everything = all_elements(V);
    std::set<std::string> seen;
    std::vector<std::vector<Value>> ideals;
    auto key_of = [](const std::vector<Value>& ideal) {
        std::string k;
        for (const auto& v : ideal)
            encode_value(v, k);
        return k;
    };
    auto add_ideal = [&](std::vector<Value> ideal) {
        if (seen.insert(key_of(ideal)).second) {
            ideals.push_back(std::move(ideal));
            return true;
        }
        return false;
    };
    for (const auto& v : everything)
        add_ideal(close_ideal(V, {v}, everything));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Value>> snapshot = ideals;
        for (const auto& i1 : snapshot) {
            for (const auto& i2 : snapshot) {
                std::vector<Value> seed = i1;
                seed.insert(seed.end(), i2.begin(), i2.end());
                grew |= add_ideal(close_ideal(V, seed, everything));
            }
        }
    }
    std::sort(ideals.begin(), ideals.end(),
              [&](const std::vector<Value>& a, const std::vector<Value>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return key_of(a) < key_of(b);
              });
    return ideals;
}

std::map<std::uint64_t, std::uint64_t> additive_order_profile(const Ring& V) {
    std::map<std::uint64_t, std::uint64_t> census;
    for (const auto& u : all_elements(V)) {
        Value acc = u;
        std::uint64_t order = 1;
        while (!V.is_zero(acc)) {
            acc = V.add(acc, u);
            ++order;
            if (order > 64)
                throw std::logic_error("additive order runaway");
        }
        ++census[order];
    }
    return census;
}

VerificationReport exotic_suite(unsigned k) {
    VerificationReport report;
    report.suite = "exotic";
    report.ring = "Exotic(GF(" + std::to_string(1u << k) + "))";

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        RingPtr vp = make_exotic(k);
        const auto& V = *vp;
        const auto& field = *static_cast<const ExoticRing&>(V).field();
        const std::uint64_t fsize = std::uint64_t{1} << k;
        std::vector<Value> everything = all_elements(V);

        VerificationReport axioms = ring_axioms_check(V, Strategy::exhaustive());
        for (auto& c : axioms.checks)
            rep.checks.push_back({"axioms_" + c.name, c.status, std::move(c.counterexample)});

        {
            std::optional<std::string> cx;
            for (const auto& u : everything) {
                for (const auto& v : everything) {
                    Value uv = V.mul(u, v);
                    Value vu = V.mul(v, u);
                    if (!(uv == vu)) {
                        cx = "u=" + V.show(u) + "; v=" + V.show(v) + "; uv=" + V.show(uv) +
                             "; vu=" + V.show(vu);
                        break;
                    }
                }
                if (cx)
                    break;
            }
            if (cx)
                rep.fail("mul_commutative", *cx);
            else
                rep.pass("mul_commutative");
        }

        {
            auto census = additive_order_profile(V);
            std::map<std::uint64_t, std::uint64_t> expected{
                {1, 1}, {2, fsize - 1}, {4, fsize * (fsize - 1)}};
            auto fmt = [](const std::map<std::uint64_t, std::uint64_t>& m) {
                std::string s = "{";
                for (const auto& [o, c] : m)
                    s += std::to_string(o) + ":" + std::to_string(c) + ",";
                if (s.size() > 1)
                    s.pop_back();
                return s + "}";
            };
            if (census == expected)
                rep.pass("additive_order_census", fmt(census));
            else
                rep.fail("additive_order_census",
                         "census=" + fmt(census) + "; expected=" + fmt(expected));
        }

        {
            std::optional<std::string> cx;
            for (const auto& u : everything) {
                auto [a, b] = exotic_parts(u);
                Value doubled = V.add(u, u);
                Value a2 = field.mul(Value{a}, Value{a});
                Value expected = exotic_element(0, std::get<std::uint64_t>(a2.rep));
                if (!(doubled == expected)) {
                    cx = "u=" + V.show(u) + "; u+u=" + V.show(doubled) +
                         "; expected=" + V.show(expected);
                    break;
                }
            }
            if (cx)
                rep.fail("double_is_zero_a_squared", *cx);
            else
                rep.pass("double_is_zero_a_squared");
        }

        {
            // I = {(0,b)} multiplies to zero and the first-component map is a
            // ring homomorphism onto K.
            std::optional<std::string> cx;
            for (std::uint64_t b = 0; b < fsize && !cx; ++b)
                for (std::uint64_t d = 0; d < fsize; ++d) {
                    Value p = V.mul(exotic_element(0, b), exotic_element(0, d));
                    if (!V.is_zero(p)) {
                        cx = "b=" + field.show(Value{b}) + "; d=" + field.show(Value{d}) +
                             "; product=" + V.show(p);
                        break;
                    }
                }
            if (cx)
                rep.fail("ideal_squares_to_zero", *cx);
            else
                rep.pass("ideal_squares_to_zero");

            cx.reset();
            for (const auto& u : everything) {
                for (const auto& v : everything) {
                    auto first = [](const Value& x) { return exotic_parts(x).first; };
                    std::uint64_t fu = first(u), fv = first(v);
                    std::uint64_t sum_first = first(V.add(u, v));
                    std::uint64_t mul_first = first(V.mul(u, v));
                    std::uint64_t fsum = std::get<std::uint64_t>(field.add(Value{fu}, Value{fv}).rep);
                    std::uint64_t fmul = std::get<std::uint64_t>(field.mul(Value{fu}, Value{fv}).rep);
                    if (sum_first != fsum || mul_first != fmul) {
                        cx = "u=" + V.show(u) + "; v=" + V.show(v);
                        break;
                    }
                }
                if (cx)
                    break;
            }
            if (cx)
                rep.fail("quotient_map_onto_field", *cx);
            else
                rep.pass("quotient_map_onto_field");
        }

        {
            // units are exactly a != 0; non-units form I; hence V is local
            std::optional<std::string> cx;
            for (const auto& u : everything) {
                auto [a, b] = exotic_parts(u);
                auto inv = exotic_inverse(V, u);
                if ((a != 0) != inv.has_value()) {
                    cx = "u=" + V.show(u) + (inv ? " unexpectedly invertible" : " has no inverse");
                    break;
                }
            }
            if (cx)
                rep.fail("units_iff_nonzero_first", *cx);
            else
                rep.pass("units_iff_nonzero_first");
        }

        {
            // both closed forms against the exhaustive search:
            //   (a^-1, b*a^-4) should match everywhere,
            //   the printed (a^-1, b*a^-2) fails once a^2 != 1 and b != 0.
            auto fpow = [&](std::uint64_t x, unsigned e) {
                Value acc = field.one();
                for (unsigned i = 0; i < e; ++i)
                    acc = field.mul(acc, Value{x});
                return std::get<std::uint64_t>(acc.rep);
            };
            auto finv = [&](std::uint64_t x) {
                for (std::uint64_t y = 0; y < fsize; ++y)
                    if (std::get<std::uint64_t>(field.mul(Value{x}, Value{y}).rep) == 1)
                        return y;
                throw std::logic_error("field inverse missing");
            };
            std::optional<std::string> bad_a4;
            std::optional<std::string> a2_mismatch;
            for (const auto& u : everything) {
                auto [a, b] = exotic_parts(u);
                if (a == 0)
                    continue;
                Value searched = *exotic_inverse(V, u);
                std::uint64_t ai = finv(a);
                Value form_a4 = exotic_element(
                    ai, std::get<std::uint64_t>(field.mul(Value{b}, Value{fpow(ai, 4)}).rep));
                Value form_a2 = exotic_element(
                    ai, std::get<std::uint64_t>(field.mul(Value{b}, Value{fpow(ai, 2)}).rep));
                if (!(form_a4 == searched) && !bad_a4)
                    bad_a4 = "u=" + V.show(u) + "; search=" + V.show(searched) +
                             "; (a^-1,b*a^-4)=" + V.show(form_a4);
                if (!(form_a2 == searched) && !a2_mismatch)
                    a2_mismatch = "u=" + V.show(u) + "; search=" + V.show(searched) +
                                  "; (a^-1,b*a^-2)=" + V.show(form_a2);
            }
            if (bad_a4)
                rep.fail("inverse_form_a4_matches_search", *bad_a4);
            else
                rep.pass("inverse_form_a4_matches_search");
            if (k == 1) {
                rep.skip("inverse_form_a2_printed_discrepancy",
                         "a^2 = 1 throughout GF(2); the printed form coincides with the search");
            } else if (a2_mismatch) {
                rep.pass("inverse_form_a2_printed_discrepancy",
                         "printed closed form (a^-1, b/a^2) fails the search: " + *a2_mismatch);
            } else {
                rep.fail("inverse_form_a2_printed_discrepancy",
                         "expected a mismatch of the printed form over GF(" +
                             std::to_string(fsize) + ") but found none");
            }
        }

        if (k <= 2) {
            auto ideals = ideal_lattice(V);
            std::string sizes;
            for (const auto& ideal : ideals)
                sizes += (sizes.empty() ? "" : ",") + std::to_string(ideal.size());
            bool shape_ok = ideals.size() == 3 && ideals[0].size() == 1 &&
                            ideals[1].size() == fsize && ideals[2].size() == fsize * fsize;
            bool middle_is_I = shape_ok;
            if (shape_ok)
                for (const auto& v : ideals[1])
                    middle_is_I &= exotic_parts(v).first == 0;
            if (shape_ok && middle_is_I)
                rep.pass("ideal_lattice_zero_I_V", "sizes=[" + sizes + "]");
            else
                rep.fail("ideal_lattice_zero_I_V", "sizes=[" + sizes + "]");
        } else {
            // k = 3: randomized spot checks only, per the module contract
            Rng rng(0);
            bool ok = true;
            std::string cx;
            for (int t = 0; t < 12 && ok; ++t) {
                Value v = V.element(rng.below(*V.cardinality()));
                auto closed = close_ideal(V, {v}, everything);
                auto [a, b] = exotic_parts(v);
                std::size_t expected = V.is_zero(v) ? 1 : (a == 0 ? fsize : fsize * fsize);
                if (closed.size() != expected) {
                    ok = false;
                    cx = "v=" + V.show(v) + "; principal ideal size=" +
                         std::to_string(closed.size()) + "; expected=" + std::to_string(expected);
                }
            }
            if (ok)
                rep.pass("ideal_lattice_spot_checks", "principal ideals land in {0, I, V}");
            else
                rep.fail("ideal_lattice_spot_checks", cx);
        }
    });
}

VerificationReport exotic_char_sanity() {
    VerificationReport report;
    report.suite = "exotic_char_sanity";
    report.ring = "KxK over GF(3)";

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        // Same component formulas over GF(3). Associativity and commutativity
        // survive, but distributivity needs the Frobenius identity
        // (c+e)^2 = c^2 + e^2, which fails away from characteristic 2.
        auto add = [](std::pair<int, int> u, std::pair<int, int> v) {
            return std::pair<int, int>{(u.first + v.first) % 3,
                                       (u.first * v.first + u.second + v.second) % 3};
        };
        auto mul = [](std::pair<int, int> u, std::pair<int, int> v) {
            return std::pair<int, int>{
                (u.first * v.first) % 3,
                (u.second * v.first * v.first + u.first * u.first * v.second) % 3};
        };
        auto show = [](std::pair<int, int> u) {
            return "(" + std::to_string(u.first) + "," + std::to_string(u.second) + ")";
        };
        std::vector<std::pair<int, int>> V;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                V.push_back({a, b});
        std::optional<std::string> witness;
        for (const auto& u : V)
            for (const auto& v : V)
                for (const auto& w : V) {
                    if (witness)
                        break;
                    auto left_lhs = mul(u, add(v, w));
                    auto left_rhs = add(mul(u, v), mul(u, w));
                    if (left_lhs != left_rhs) {
                        witness = "left: u=" + show(u) + "; v=" + show(v) + "; w=" + show(w) +
                                  "; u*(v+w)=" + show(left_lhs) + "; u*v+u*w=" + show(left_rhs);
                        break;
                    }
                    auto right_lhs = mul(add(u, v), w);
                    auto right_rhs = add(mul(u, w), mul(v, w));
                    if (right_lhs != right_rhs) {
                        witness = "right: u=" + show(u) + "; v=" + show(v) + "; w=" + show(w) +
                                  "; (u+v)*w=" + show(right_lhs) + "; u*w+v*w=" + show(right_rhs);
                        break;
                    }
                }
        if (witness)
            rep.pass("distributivity_fails_over_gf3", *witness);
        else
            rep.fail("distributivity_fails_over_gf3",
                     "distributivity unexpectedly held over GF(3)");
    });
}

}  // namespace elring
