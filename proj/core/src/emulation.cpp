#include "elring/emulation.hpp"

#include "elring/axioms.hpp"

namespace elring {

EmulationContext::EmulationContext(RingPtr ring, std::uint32_t n)
    : ring_(std::move(ring)),
      n_(n),
      w12_(weyl(ring_, n, WeylKind::w12)),
      w12_inv_(weyl_inverse(ring_, n, WeylKind::w12)),
      w23_(weyl(ring_, n, WeylKind::w23)),
      w23_inv_(weyl_inverse(ring_, n, WeylKind::w23)),
      zero_(RingMatrix::identity(ring_, n)),
      one_(RingMatrix::elementary(ring_, n, 1, 3, ring_->one())) {
    if (n < 3)
        throw std::invalid_argument("ring emulation needs n >= 3");
}

RingMatrix EmulationContext::rho(const Value& r) const {
    return RingMatrix::elementary(ring_, n_, 1, 3, r);
}

std::optional<Value> EmulationContext::u_entry(const RingMatrix& m) const {
    if (m.dim() != n_)
        return std::nullopt;
    for (std::uint32_t i = 1; i <= n_; ++i) {
        for (std::uint32_t j = 1; j <= n_; ++j) {
            if (i == 1 && j == 3)
                continue;
            const Value& e = m.at(i, j);
            if (i == j ? !ring_->is_one(e) : !ring_->is_zero(e))
                return std::nullopt;
        }
    }
    return m.at(1, 3);
}

RingMatrix EmulationContext::require_u(const RingMatrix& m, const char* op) const {
    if (!u_entry(m))
        throw std::domain_error(std::string(op) + ": operand is not of U-shape (Id + r*E13)");
    return m;
}

RingMatrix EmulationContext::add(const RingMatrix& u1, const RingMatrix& u2) const {
    return require_u(u1, "emulated add") * require_u(u2, "emulated add");
}

RingMatrix EmulationContext::neg(const RingMatrix& u) const {
    auto r = u_entry(u);
    if (!r)
        throw std::domain_error("emulated neg: operand is not of U-shape (Id + r*E13)");
    return rho(ring_->neg(*r));
}

RingMatrix EmulationContext::mul(const RingMatrix& u1, const RingMatrix& u2) const {
    require_u(u1, "emulated mul");
    require_u(u2, "emulated mul");
    RingMatrix g = w23_ * u1 * w23_inv_;
    RingMatrix h = w12_ * u2 * w12_inv_;
    // structural inverses: conjugates of x_13(-r)
    RingMatrix g_inv = w23_ * neg(u1) * w23_inv_;
    RingMatrix h_inv = w12_ * neg(u2) * w12_inv_;
    return commutator(g, g_inv, h, h_inv);
}

namespace {

/// The image U as a ring in its own right, with the emulated operations.
/// Elements are the matrices themselves, so running the generic axiom
/// checker on this wrapper exercises exactly the group-side operations.
class EmulatedImageRing final : public Ring {
public:
    EmulatedImageRing(RingPtr base, std::uint32_t n)
        : Ring("U(" + base->spec() + ")"), base_(std::move(base)), ctx_(base_, n) {}

    std::uint64_t characteristic() const override { return base_->characteristic(); }

    Value zero() const override { return wrap(ctx_.zero()); }
    Value one() const override { return wrap(ctx_.one()); }

    Value add(const Value& a, const Value& b) const override {
        return wrap(ctx_.add(unwrap(a), unwrap(b)));
    }
    Value neg(const Value& a) const override { return wrap(ctx_.neg(unwrap(a))); }
    Value mul(const Value& a, const Value& b) const override {
        return wrap(ctx_.mul(unwrap(a), unwrap(b)));
    }

    std::optional<std::uint64_t> cardinality() const override { return base_->cardinality(); }

    Value element(std::uint64_t index) const override {
        return wrap(ctx_.rho(base_->element(index)));
    }

    Value random_element(Rng& rng, const SampleParams& params) const override {
        return wrap(ctx_.rho(base_->random_element(rng, params)));
    }

    std::string show(const Value& v) const override { return unwrap(v).show(); }

private:
    Value wrap(const RingMatrix& m) const { return Value{MatrixRep{m.dim(), m.entries()}}; }

    RingMatrix unwrap(const Value& v) const {
        const auto& m = std::get<MatrixRep>(v.rep);
        return RingMatrix(base_, m.n, m.entries);
    }

    RingPtr base_;
    EmulationContext ctx_;
};

}  // namespace

VerificationReport verify_emulated_ring(const RingPtr& ring, const Strategy& strategy,
                                        std::uint32_t n) {
    VerificationReport report;
    report.suite = "emulate";
    report.ring = ring->spec();
    report.mode = strategy.mode_name();
    if (strategy.is_random())
        report.seed = strategy.seed;

    return timed_report(std::move(report), [&](VerificationReport& rep) {
        EmulationContext ctx(ring, n);

        auto pair_cx = [&](std::span<const Value> t, const RingMatrix& lhs, const RingMatrix& rhs) {
            return "r=" + ring->show(t[0]) + "; s=" + ring->show(t[1]) + "; lhs=" + lhs.show() +
                   "; rhs=" + rhs.show();
        };

        ScanOutcome out = scan_tuples(*ring, strategy, 2,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                RingMatrix lhs = ctx.rho(ring->add(t[0], t[1]));
                RingMatrix rhs = ctx.add(ctx.rho(t[0]), ctx.rho(t[1]));
                if (lhs == rhs)
                    return std::nullopt;
                return pair_cx(t, lhs, rhs);
            });
        if (out.counterexample)
            rep.fail("rho_add_hom", *out.counterexample);
        else
            rep.pass("rho_add_hom", "pairs=" + std::to_string(out.tuples));

        out = scan_tuples(*ring, strategy, 1,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                RingMatrix lhs = ctx.rho(ring->neg(t[0]));
                RingMatrix rhs = ctx.neg(ctx.rho(t[0]));
                if (lhs == rhs)
                    return std::nullopt;
                return "r=" + ring->show(t[0]) + "; lhs=" + lhs.show() + "; rhs=" + rhs.show();
            });
        if (out.counterexample)
            rep.fail("rho_neg_hom", *out.counterexample);
        else
            rep.pass("rho_neg_hom", "elements=" + std::to_string(out.tuples));

        out = scan_tuples(*ring, strategy, 2,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                RingMatrix lhs = ctx.rho(ring->mul(t[0], t[1]));
                RingMatrix rhs = ctx.mul(ctx.rho(t[0]), ctx.rho(t[1]));
                if (lhs == rhs)
                    return std::nullopt;
                return pair_cx(t, lhs, rhs);
            });
        if (out.counterexample)
            rep.fail("rho_mul_hom", *out.counterexample);
        else
            rep.pass("rho_mul_hom", "pairs=" + std::to_string(out.tuples));

        // rho(1) is the two-sided unit on U
        out = scan_tuples(*ring, strategy, 1,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                RingMatrix u = ctx.rho(t[0]);
                if (ctx.mul(ctx.one(), u) == u && ctx.mul(u, ctx.one()) == u)
                    return std::nullopt;
                return "r=" + ring->show(t[0]);
            });
        if (out.counterexample)
            rep.fail("rho_one_unit", *out.counterexample);
        else
            rep.pass("rho_one_unit", "elements=" + std::to_string(out.tuples));

        out = scan_tuples(*ring, strategy, 2,
            [&](std::span<const Value> t) -> std::optional<std::string> {
                bool equal_elems = t[0] == t[1];
                bool equal_images = ctx.rho(t[0]) == ctx.rho(t[1]);
                if (equal_elems == equal_images)
                    return std::nullopt;
                return "r=" + ring->show(t[0]) + "; s=" + ring->show(t[1]);
            });
        if (out.counterexample)
            rep.fail("rho_injective", *out.counterexample);
        else
            rep.pass("rho_injective", "pairs=" + std::to_string(out.tuples));

        EmulatedImageRing image(ring, n);
        VerificationReport axioms = ring_axioms_check(image, strategy);
        for (auto& c : axioms.checks)
            rep.checks.push_back({"image_" + c.name, c.status, std::move(c.counterexample)});
    });
}

}  // namespace elring
