#include "qgr/classical_ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace qgr {

CohomClass CohomClass::basis(GrassmannianPtr ctx, Rank r, Coeff c) {
    CohomClass out(std::move(ctx));
    out.add_term(r, c);
    return out;
}

CohomClass CohomClass::of(GrassmannianPtr ctx, const BoxPartition& lambda, Coeff c) {
    const Rank r = ctx->rank(lambda);
    return basis(std::move(ctx), r, c);
}

CohomClass CohomClass::unit(GrassmannianPtr ctx) { return basis(std::move(ctx), 0); }

Coeff CohomClass::coefficient(Rank r) const {
    auto it = terms_.find(r);
    return it == terms_.end() ? 0 : it->second;
}

void CohomClass::add_term(Rank r, Coeff c) {
    if (c == 0) return;
    if (r >= ctx_->dim()) throw std::out_of_range("basis rank out of range");
    auto [it, inserted] = terms_.try_emplace(r, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void CohomClass::add_scaled(const CohomClass& other, Coeff c) {
    require_same_ctx(*this, other);
    if (c == 0) return;
    for (auto [r, v] : other.terms_) add_term(r, checked_mul(c, v));
}

CohomClass& CohomClass::operator+=(const CohomClass& o) {
    add_scaled(o, 1);
    return *this;
}

CohomClass& CohomClass::operator-=(const CohomClass& o) {
    add_scaled(o, -1);
    return *this;
}

void require_same_ctx(const CohomClass& a, const CohomClass& b) {
    if (!(*a.ctx() == *b.ctx()))
        throw ContextMismatch("classes belong to G(" + std::to_string(a.ctx()->k()) + "," +
                              std::to_string(a.ctx()->n()) + ") and G(" + std::to_string(b.ctx()->k()) + "," +
                              std::to_string(b.ctx()->n()) + ")");
}

CohomClass class_add(const CohomClass& a, const CohomClass& b) {
    CohomClass out = a;
    out += b;
    return out;
}

CohomClass class_scale(Coeff c, const CohomClass& a) {
    CohomClass out(a.ctx());
    out.add_scaled(a, c);
    return out;
}

namespace {

struct LrSearch {
    std::vector<int> lambda, mu, nu;
    std::vector<std::vector<int>> tab;  // tab[r][c], 0 for cells of lambda
    std::vector<int> count;             // count[v] for v = 1..len(mu)
    std::vector<std::pair<int, int>> cells;
    Coeff found = 0;

    int lam(std::size_t r) const { return r < lambda.size() ? lambda[r] : 0; }

    void run(std::size_t idx) {
        if (idx == cells.size()) {
            found = checked_add(found, 1);
            return;
        }
        auto [r, c] = cells[idx];
        const auto ur = static_cast<std::size_t>(r);
        const auto uc = static_cast<std::size_t>(c);
        int hi = static_cast<int>(mu.size());
        if (c + 1 < nu[ur]) hi = std::min(hi, tab[ur][uc + 1]);  // rows weakly increase
        int lo = 1;
        if (r > 0 && c >= lam(ur - 1)) lo = tab[ur - 1][uc] + 1;  // columns strictly increase
        for (int v = lo; v <= hi; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (count[uv] >= mu[uv - 1]) continue;
            if (v > 1 && count[uv] + 1 > count[uv - 1]) continue;  // lattice condition
            ++count[uv];
            tab[ur][uc] = v;
            run(idx + 1);
            tab[ur][uc] = 0;
            --count[uv];
        }
    }
};

void trim(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void pieri_rec(const Grassmannian& g, const BoxPartition& lambda, std::size_t row, int left, std::vector<int>& cur,
               CohomClass& out) {
    const auto l = static_cast<std::size_t>(g.l());
    if (row == l) {
        if (left == 0) out.add_term(g.rank(BoxPartition(cur)), 1);
        return;
    }
    const int ceiling = row == 0 ? g.k() : lambda[row - 1];
    for (int add = 0; add <= left && lambda[row] + add <= ceiling; ++add) {
        cur[row] = lambda[row] + add;
        pieri_rec(g, lambda, row + 1, left - add, cur, out);
    }
}

}  // namespace

Coeff lr_coefficient(std::vector<int> lambda, std::vector<int> mu, std::vector<int> nu) {
    trim(lambda);
    trim(mu);
    trim(nu);
    const int sl = std::accumulate(lambda.begin(), lambda.end(), 0);
    const int sm = std::accumulate(mu.begin(), mu.end(), 0);
    const int sn = std::accumulate(nu.begin(), nu.end(), 0);
    if (sn != sl + sm) return 0;
    if (lambda.size() > nu.size()) return 0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > nu[i]) return 0;
    if (mu.empty()) return 1;

    LrSearch s{lambda, mu, nu, {}, {}, {}, 0};
    s.tab.resize(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r) {
        s.tab[r].assign(static_cast<std::size_t>(nu[r]), 0);
        for (int c = nu[r] - 1; c >= s.lam(r); --c) s.cells.emplace_back(static_cast<int>(r), c);
    }
    s.count.assign(mu.size() + 1, 0);
    s.run(0);
    return s.found;
}

CohomClass cup_product(const CohomClass& a, const CohomClass& b) {
    require_same_ctx(a, b);
    const Grassmannian& g = a.grassmannian();
    CohomClass out(a.ctx());
    for (auto [ra, ca] : a.terms()) {
        const BoxPartition& la = g.at(ra);
        for (auto [rb, cb] : b.terms()) {
            const BoxPartition& lb = g.at(rb);
            const Coeff coef = checked_mul(ca, cb);
            for (Rank rn : g.ranks_of_degree(la.degree() + lb.degree())) {
                const Coeff lr = lr_coefficient(la.trimmed(), lb.trimmed(), g.at(rn).trimmed());
                if (lr != 0) out.add_term(rn, checked_mul(coef, lr));
            }
        }
    }
    return out;
}

CohomClass classical_pieri(const GrassmannianPtr& ctx, const BoxPartition& lambda, int r) {
    if (r < 0 || r > ctx->k())
        throw std::invalid_argument("Pieri index r=" + std::to_string(r) + " outside 0.." + std::to_string(ctx->k()));
    CohomClass out(ctx);
    std::vector<int> cur(static_cast<std::size_t>(ctx->l()), 0);
    pieri_rec(*ctx, lambda, 0, r, cur, out);
    return out;
}

Coeff pairing(const CohomClass& a, const CohomClass& b) {
    require_same_ctx(a, b);
    const Grassmannian& g = a.grassmannian();
    Coeff total = 0;
    for (auto [r, c] : a.terms()) {
        const Coeff other = b.coefficient(g.rank(poincare_dual(g, g.at(r))));
        if (other != 0) total = checked_add(total, checked_mul(c, other));
    }
    return total;
}

std::string format_class(const CohomClass& a) {
    if (a.is_zero()) return "0";
    const Grassmannian& g = a.grassmannian();
    std::string out;
    bool first = true;
    for (auto [r, c] : a.terms()) {
        const bool neg = c < 0;
        const Coeff mag = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (r == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += "(" + format_parts(g.at(r)) + ")";
        }
    }
    return out;
}

CohomClass parse_class(const GrassmannianPtr& ctx, std::string_view text) {
    if (text.find('(') == std::string_view::npos) return CohomClass::of(ctx, parse_partition(*ctx, text));

    CohomClass out(ctx);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        Coeff sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms at position " + std::to_string(i));
        }
        first = false;
        Coeff mag = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, mag);
            if (ec != std::errc{}) throw ParseError("bad coefficient");
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' at position " + std::to_string(i));
        const std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis");
        out.add_term(ctx->rank(parse_partition(*ctx, text.substr(i + 1, close - i - 1))), checked_mul(sign, mag));
        i = close + 1;
    }
    return out;
}

}  // namespace qgr
