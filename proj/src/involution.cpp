#include "qgr/involution.hpp"

#include <algorithm>
#include <random>
#include <set>

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

CohomClass bar(const CohomClass& a) {
    const Grassmannian& g = a.grassmannian();
    return map_basis(a, [&](const BoxPartition& p) { return bar_involution(g, p); });
}

CohomClass dual(const CohomClass& a) {
    const Grassmannian& g = a.grassmannian();
    return map_basis(a, [&](const BoxPartition& p) { return poincare_dual(g, p); });
}

Report verify_lemma_bar_eq_hat_ck(const GrassmannianPtr& ctx) {
    Report rep = start("bar_eq_dual_ck", *ctx);
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass s = CohomClass::basis(ctx, a);
        const CohomClass lhs = bar(s);
        const CohomClass rhs = dual(c_apply(s, ctx->k()));
        ++rep.checked;
        if (lhs != rhs) rep.fail(label(*ctx, a), format_class(lhs), format_class(rhs));
    }
    return rep;
}

Report verify_theorem1(const GrassmannianPtr& ctx, SampleMode mode, std::uint64_t seed, std::size_t samples) {
    Report rep = start("bar_is_ring_map", *ctx);
    auto check = [&](Rank a, Rank b) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        const CohomClass sb = CohomClass::basis(ctx, b);
        const CohomClass lhs = bar(sa * sb);
        const CohomClass rhs = bar(sa) * bar(sb);
        ++rep.checked;
        if (lhs != rhs) rep.fail(label(*ctx, a) + "*" + label(*ctx, b), format_class(lhs), format_class(rhs));
    };
    if (mode == SampleMode::exhaustive) {
        for (Rank a = 0; a < ctx->dim(); ++a)
            for (Rank b = a; b < ctx->dim(); ++b) check(a, b);
    } else {
        rep.seed = seed;
        std::mt19937_64 rng(seed);
        for (std::size_t s = 0; s < samples; ++s) {
            const Rank a = detail::random_rank(rng, ctx->dim());
            const Rank b = detail::random_rank(rng, ctx->dim());
            check(std::min(a, b), std::max(a, b));
        }
    }
    return rep;
}

Report verify_eq1_and_for1(const GrassmannianPtr& ctx) {
    Report rep = start("dual_shift_and_pieri_gw", *ctx);
    const int k = ctx->k();
    const int n = ctx->n();
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass s = CohomClass::basis(ctx, a);
        const CohomClass lhs = dual(c_apply(s, k));
        const CohomClass rhs = c_apply(dual(s), n - k);
        ++rep.checked;
        if (lhs != rhs) rep.fail("dual(c^k " + label(*ctx, a) + ")", format_class(lhs), format_class(rhs));
    }

    std::vector<CohomClass> rows, bar_rows;
    for (int r = 1; r <= k; ++r) {
        rows.push_back(CohomClass::of(ctx, ctx->row(r)));
        bar_rows.push_back(bar(rows.back()));
    }
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        const CohomClass da = dual(sa);
        for (Rank s = 0; s < ctx->dim(); ++s) {
            const CohomClass ss = CohomClass::basis(ctx, s);
            // <A, S, X> = pairing(A * S, X); one product serves every r
            const CohomClass prod = sa * ss;
            const CohomClass dual_prod = da * dual(ss);
            for (int r = 1; r <= k; ++r) {
                const Coeff lhs = pairing(prod, rows[static_cast<std::size_t>(r - 1)]);
                const Coeff rhs = pairing(dual_prod, bar_rows[static_cast<std::size_t>(r - 1)]);
                ++rep.checked;
                if (lhs != rhs)
                    rep.fail("<" + label(*ctx, a) + "," + label(*ctx, s) + ",sigma_" + std::to_string(r) + ">",
                             std::to_string(lhs), std::to_string(rhs));
            }
        }
    }
    return rep;
}

Report verify_corollary(const GrassmannianPtr& ctx, std::size_t samples, std::uint64_t seed) {
    Report rep = start("dual_bar_identities", *ctx);
    rep.seed = seed;
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        for (Rank c = 0; c < ctx->dim(); ++c) {
            const CohomClass sc = CohomClass::basis(ctx, c);
            const CohomClass lhs = dual(sa * sc);
            const CohomClass rhs = dual(sa) * bar(sc);
            ++rep.checked;
            if (lhs != rhs)
                rep.fail("dual(" + label(*ctx, a) + "*" + label(*ctx, c) + ")", format_class(lhs), format_class(rhs));
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Rank a = detail::random_rank(rng, ctx->dim());
        const Rank c = detail::random_rank(rng, ctx->dim());
        const Rank b = detail::random_rank(rng, ctx->dim());
        const CohomClass sa = CohomClass::basis(ctx, a);
        const CohomClass sc = CohomClass::basis(ctx, c);
        const CohomClass sb = CohomClass::basis(ctx, b);
        const Coeff lhs = gw_invariant(sa, sc, sb);
        const Coeff rhs = gw_invariant(dual(sa), dual(sc), bar(sb));
        ++rep.checked;
        if (lhs != rhs)
            rep.fail("<" + label(*ctx, a) + "," + label(*ctx, c) + "," + label(*ctx, b) + ">", std::to_string(lhs),
                     std::to_string(rhs));
    }
    return rep;
}

Report verify_involution_structure(const GrassmannianPtr& ctx) {
    Report rep = start("involution_structure", *ctx);
    const Grassmannian& g = *ctx;
    auto expect = [&](bool ok, const std::string& where, const std::string& lhs, const std::string& rhs) {
        ++rep.checked;
        if (!ok) rep.fail(where, lhs, rhs);
    };
    auto str = [](const BoxPartition& p) { return "(" + format_parts(p) + ")"; };

    std::set<std::vector<int>> subsets;
    for (Rank a = 0; a < g.dim(); ++a) {
        const BoxPartition& p = g.at(a);
        const BoxPartition b = bar_involution(g, p);
        const std::string where = label(g, a);
        expect(g.contains(b), "bar" + where + " in box", str(b), "valid box partition");
        if (!g.contains(b)) continue;
        expect(bar_involution(g, b) == p, "bar(bar" + where + ")", str(bar_involution(g, b)), where);
        expect(durfee(b) == durfee(p), "durfee(bar" + where + ")", std::to_string(durfee(b)),
               std::to_string(durfee(p)));
        const int want = g.n() * durfee(p) - p.degree();
        expect(b.degree() == want, "deg(bar" + where + ")", std::to_string(b.degree()), std::to_string(want));
        const int wrapped = ((b.degree() + p.degree()) % g.n() + g.n()) % g.n();
        expect(wrapped == 0, "deg(bar" + where + ") mod n", std::to_string(b.degree()), "-" + std::to_string(p.degree()));

        const BoxPartition d = poincare_dual(g, p);
        expect(g.contains(d) && poincare_dual(g, d) == p, "dual(dual" + where + ")", str(poincare_dual(g, d)), where);
        expect(d.degree() + p.degree() == g.top_degree(), "deg(dual" + where + ")", std::to_string(d.degree()),
               std::to_string(g.top_degree() - p.degree()));

        const LSubset s = to_subset(g, p);
        expect(from_subset(g, s) == p, "from_subset(to_subset" + where + ")", str(from_subset(g, s)), where);
        bool valid = s.elems.size() == static_cast<std::size_t>(g.l());
        for (std::size_t i = 0; i < s.elems.size(); ++i)
            valid = valid && s.elems[i] >= 1 && s.elems[i] <= g.n() && (i == 0 || s.elems[i] > s.elems[i - 1]);
        expect(valid, "to_subset" + where, format_subset(s), "strictly increasing subset of 1..n");
        subsets.insert(s.elems);
    }
    expect(subsets.size() == binomial(g.n(), g.l()), "subset image size", std::to_string(subsets.size()),
           std::to_string(binomial(g.n(), g.l())));
    expect(g.dim() == binomial(g.n(), g.k()), "basis size", std::to_string(g.dim()),
           std::to_string(binomial(g.n(), g.k())));
    expect(bar_involution(g, g.unit()) == g.unit(), "bar(1)", str(bar_involution(g, g.unit())), "()");
    const int point_target = g.n() * std::min(g.k(), g.l()) - g.top_degree();
    expect(bar_involution(g, g.point()).degree() == point_target, "deg bar(point)",
           std::to_string(bar_involution(g, g.point()).degree()), std::to_string(point_target));
    return rep;
}

}  // namespace qgr
