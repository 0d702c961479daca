#include "qgr/ring_checks.hpp"

#include <random>

#include "qgr/quantum_ring.hpp"
#include "sampling.hpp"

namespace qgr {

using detail::label;

namespace {

Report start(const char* name, const Grassmannian& g) {
    Report rep;
    rep.suite = name;
    rep.k = g.k();
    rep.n = g.n();
    return rep;
}

}  // namespace

Report verify_commutativity(const GrassmannianPtr& ctx) {
    Report rep = start("commutativity", *ctx);
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        for (Rank b = a + 1; b < ctx->dim(); ++b) {
            const CohomClass sb = CohomClass::basis(ctx, b);
            const CohomClass ab = sa * sb;
            const CohomClass ba = sb * sa;
            ++rep.checked;
            if (ab != ba) rep.fail(label(*ctx, a) + "*" + label(*ctx, b), format_class(ab), format_class(ba));
        }
    }
    return rep;
}

Report verify_associativity(const GrassmannianPtr& ctx, std::size_t samples, std::uint64_t seed) {
    Report rep = start("associativity", *ctx);
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Rank a = detail::random_rank(rng, ctx->dim());
        const Rank b = detail::random_rank(rng, ctx->dim());
        const Rank c = detail::random_rank(rng, ctx->dim());
        const CohomClass sa = CohomClass::basis(ctx, a);
        const CohomClass sb = CohomClass::basis(ctx, b);
        const CohomClass sc = CohomClass::basis(ctx, c);
        const CohomClass left = (sa * sb) * sc;
        const CohomClass right = sa * (sb * sc);
        ++rep.checked;
        if (left != right)
            rep.fail(label(*ctx, a) + "*" + label(*ctx, b) + "*" + label(*ctx, c), format_class(left),
                     format_class(right));
    }
    return rep;
}

Report verify_top_degree(const GrassmannianPtr& ctx) {
    Report rep = start("top_degree", *ctx);
    const int n = ctx->n();
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        for (Rank b = a; b < ctx->dim(); ++b) {
            const CohomClass sb = CohomClass::basis(ctx, b);
            const CohomClass prod = sa * sb;
            const int total = ctx->at(a).degree() + ctx->at(b).degree();
            CohomClass top(ctx);
            for (auto [r, c] : prod.terms()) {
                const int d = ctx->at(r).degree();
                if (d > total || (total - d) % n != 0)
                    rep.fail(label(*ctx, a) + "*" + label(*ctx, b) + " grading", format_class(prod),
                             "term " + label(*ctx, r) + " of degree " + std::to_string(d));
                if (d == total) top.add_term(r, c);
            }
            const CohomClass cup = cup_product(sa, sb);
            ++rep.checked;
            if (top != cup)
                rep.fail(label(*ctx, a) + "*" + label(*ctx, b) + " top degree", format_class(top), format_class(cup));
        }
    }
    return rep;
}

Report verify_pieri_consistency(const GrassmannianPtr& ctx) {
    Report rep = start("pieri_consistency", *ctx);
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const BoxPartition& la = ctx->at(a);
        for (int r = 0; r <= ctx->k(); ++r) {
            const CohomClass q = quantum_pieri_product(r, CohomClass::basis(ctx, a));
            CohomClass top(ctx);
            for (auto [t, c] : q.terms())
                if (ctx->at(t).degree() == la.degree() + r) top.add_term(t, c);
            const CohomClass classical = classical_pieri(ctx, la, r);
            ++rep.checked;
            if (top != classical)
                rep.fail("sigma_" + std::to_string(r) + "*" + label(*ctx, a), format_class(top),
                         format_class(classical));
        }
    }
    return rep;
}

Report verify_giambelli(const GrassmannianPtr& ctx) {
    Report rep = start("giambelli", *ctx);
    const CohomClass one = CohomClass::unit(ctx);
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass evaluated = apply_giambelli(giambelli_expand(*ctx, ctx->at(a)), one);
        const CohomClass expected = CohomClass::basis(ctx, a);
        ++rep.checked;
        if (evaluated != expected) rep.fail(label(*ctx, a), format_class(evaluated), format_class(expected));
    }
    return rep;
}

Report verify_gw_symmetry(const GrassmannianPtr& ctx, std::size_t samples, std::uint64_t seed) {
    Report rep = start("gw_symmetry", *ctx);
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        Rank idx[3];
        for (Rank& r : idx) r = detail::random_rank(rng, ctx->dim());
        const CohomClass cls[3] = {CohomClass::basis(ctx, idx[0]), CohomClass::basis(ctx, idx[1]),
                                   CohomClass::basis(ctx, idx[2])};
        const Coeff ref = gw_invariant(cls[0], cls[1], cls[2]);
        constexpr int perms[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        ++rep.checked;
        for (const auto& p : perms) {
            const Coeff v = gw_invariant(cls[p[0]], cls[p[1]], cls[p[2]]);
            if (v != ref) {
                rep.fail("<" + label(*ctx, idx[0]) + "," + label(*ctx, idx[1]) + "," + label(*ctx, idx[2]) + ">",
                         std::to_string(ref), std::to_string(v));
                break;
            }
        }
    }
    return rep;
}

Report verify_c_operator(const GrassmannianPtr& ctx) {
    Report rep = start("c_operator", *ctx);
    const CohomClass column = CohomClass::of(ctx, ctx->column());
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        const CohomClass shifted = c_apply(sa, 1);
        const CohomClass multiplied = column * sa;
        ++rep.checked;
        if (shifted != multiplied)
            rep.fail("c*" + label(*ctx, a), format_class(shifted), format_class(multiplied));

        BoxPartition p = ctx->at(a);
        for (int i = 0; i < ctx->n(); ++i) p = c_shift(*ctx, p, 1);
        ++rep.checked;
        if (p != ctx->at(a)) rep.fail("c^n " + label(*ctx, a), "(" + format_parts(p) + ")", label(*ctx, a));
        ++rep.checked;
        if (c_shift(*ctx, ctx->at(a), ctx->n()) != ctx->at(a))
            rep.fail("c_shift(n) " + label(*ctx, a), "(" + format_parts(c_shift(*ctx, ctx->at(a), ctx->n())) + ")",
                     label(*ctx, a));
    }
    return rep;
}

}  // namespace qgr
