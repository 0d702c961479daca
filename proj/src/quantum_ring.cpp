#include "qgr/quantum_ring.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace qgr {

namespace {

// Per-(k,n) memo of Pieri rows and Giambelli expansions.  Contents depend
// only on (k, n), so sharing it across calls is unobservable.
struct RingMemo {
    // pieri[r][a] = ranks T with <a, sigma_r, dual T> = 1
    std::vector<std::vector<std::vector<Rank>>> pieri;
    std::mutex giambelli_mutex;
    std::map<Rank, std::vector<GiambelliTerm>> giambelli;
};

RingMemo& memo_for(const Grassmannian& g) {
    static std::mutex registry_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<RingMemo>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[{g.k(), g.n()}];
    if (!slot) {
        auto memo = std::make_unique<RingMemo>();
        memo->pieri.resize(static_cast<std::size_t>(g.k()) + 1);
        for (int r = 1; r <= g.k(); ++r) {
            auto& rows = memo->pieri[static_cast<std::size_t>(r)];
            rows.resize(g.dim());
            for (Rank a = 0; a < g.dim(); ++a) {
                const BoxPartition& la = g.at(a);
                for (int deg : {la.degree() + r, la.degree() + r - g.n()})
                    for (Rank t : g.ranks_of_degree(deg))
                        if (quantum_pieri_invariant(g, la, poincare_dual(g, g.at(t)), r)) rows[a].push_back(t);
                std::sort(rows[a].begin(), rows[a].end());
            }
        }
        slot = std::move(memo);
    }
    return *slot;
}

const std::vector<GiambelliTerm>& cached_giambelli(const Grassmannian& g, Rank r) {
    RingMemo& memo = memo_for(g);
    std::lock_guard lock(memo.giambelli_mutex);
    auto it = memo.giambelli.find(r);
    if (it == memo.giambelli.end()) it = memo.giambelli.emplace(r, giambelli_expand(g, g.at(r))).first;
    return it->second;
}

std::vector<int> json_parts(const BoxPartition& p) { return p.trimmed(); }

}  // namespace

int quantum_pieri_invariant(const Grassmannian& ctx, const BoxPartition& a, const BoxPartition& s, int r) {
    const int k = ctx.k();
    const int l = ctx.l();
    if (r < 1 || r > k)
        throw std::invalid_argument("Pieri index r=" + std::to_string(r) + " outside 1.." + std::to_string(k));
    const int total = a.degree() + s.degree() + r;
    int bound = 0;
    int ge_sum = 0;  // i + j for the lower-bound conditions; i + j = ge_sum + 1 for the upper ones
    if (total == ctx.top_degree()) {
        bound = k;
        ge_sum = l;
    } else if (total == ctx.top_degree() + ctx.n()) {
        bound = k + 1;
        ge_sum = l + 1;
    } else {
        return 0;
    }
    for (int i = 1; i <= l; ++i) {
        const int a_i = a[static_cast<std::size_t>(i - 1)];
        const int j_ge = ge_sum - i;
        if (j_ge >= 1 && j_ge <= l && a_i + s[static_cast<std::size_t>(j_ge - 1)] < bound) return 0;
        const int j_le = ge_sum + 1 - i;
        if (j_le >= 1 && j_le <= l && a_i + s[static_cast<std::size_t>(j_le - 1)] > bound) return 0;
    }
    return 1;
}

CohomClass quantum_pieri_product(int r, const CohomClass& a) {
    const Grassmannian& g = a.grassmannian();
    if (r < 0 || r > g.k())
        throw std::invalid_argument("Pieri index r=" + std::to_string(r) + " outside 0.." + std::to_string(g.k()));
    if (r == 0) return a;
    const auto& rows = memo_for(g).pieri[static_cast<std::size_t>(r)];
    CohomClass out(a.ctx());
    for (auto [ra, c] : a.terms())
        for (Rank t : rows[ra]) out.add_term(t, c);
    return out;
}

std::vector<GiambelliTerm> giambelli_expand(const Grassmannian& ctx, const BoxPartition& lambda) {
    const std::vector<int> parts = lambda.trimmed();
    const int m = static_cast<int>(parts.size());
    using Poly = std::map<std::vector<int>, Coeff>;
    // Row-by-row Laplace expansion; the key is the set of columns used so far.
    std::map<unsigned, Poly> states{{0u, Poly{{{}, 1}}}};
    for (int i = 0; i < m; ++i) {
        std::map<unsigned, Poly> next;
        for (const auto& [mask, poly] : states) {
            for (int j = 0; j < m; ++j) {
                if (mask & (1u << j)) continue;
                const int idx = parts[static_cast<std::size_t>(i)] + j - i;
                if (idx < 0 || idx > ctx.k()) continue;
                const Coeff sign = (std::popcount(mask >> (j + 1)) % 2) ? -1 : 1;
                Poly& dst = next[mask | (1u << j)];
                for (const auto& [mono, c] : poly) {
                    std::vector<int> grown = mono;
                    if (idx > 0) {
                        grown.push_back(idx);
                        std::sort(grown.begin(), grown.end(), std::greater<>());
                    }
                    Coeff& slot = dst[grown];
                    slot = checked_add(slot, checked_mul(sign, c));
                }
            }
        }
        states = std::move(next);
    }
    std::vector<GiambelliTerm> out;
    auto it = states.find(m == 0 ? 0u : (1u << m) - 1u);
    if (it == states.end()) return out;
    for (const auto& [mono, c] : it->second)
        if (c != 0) out.push_back({c, mono});
    return out;
}

CohomClass apply_giambelli(const std::vector<GiambelliTerm>& expansion, const CohomClass& b) {
    CohomClass out(b.ctx());
    for (const auto& term : expansion) {
        CohomClass cur = b;
        for (int r : term.rows) cur = quantum_pieri_product(r, cur);
        out.add_scaled(cur, term.coeff);
    }
    return out;
}

CohomClass quantum_product(const CohomClass& a, const CohomClass& b) {
    require_same_ctx(a, b);
    const bool expand_a = a.terms().size() <= b.terms().size();
    const CohomClass& expanded = expand_a ? a : b;
    const CohomClass& other = expand_a ? b : a;
    CohomClass out(a.ctx());
    for (auto [r, c] : expanded.terms())
        out.add_scaled(apply_giambelli(cached_giambelli(a.grassmannian(), r), other), c);
    return out;
}

std::optional<int> quantum_degree(const Grassmannian& ctx, int deg_a, int deg_b, int deg_c) {
    const int excess = deg_a + deg_b + deg_c - ctx.top_degree();
    if (excess < 0 || excess % ctx.n() != 0) return std::nullopt;
    return excess / ctx.n();
}

Coeff gw_invariant(const CohomClass& a, const CohomClass& b, const CohomClass& c) {
    require_same_ctx(a, c);
    return pairing(quantum_product(a, b), c);
}

GWRecord gw_record(const GrassmannianPtr& ctx, const BoxPartition& a, const BoxPartition& b, const BoxPartition& c) {
    GWRecord rec{a, b, c, 0, quantum_degree(*ctx, a.degree(), b.degree(), c.degree())};
    if (rec.degree_d)
        rec.value = gw_invariant(CohomClass::of(ctx, a), CohomClass::of(ctx, b), CohomClass::of(ctx, c));
    return rec;
}

CohomClass c_apply(const CohomClass& a, long long j) {
    const Grassmannian& g = a.grassmannian();
    return map_basis(a, [&](const BoxPartition& p) { return c_shift(g, p, j); });
}

CohomClass StructureTable::product(Rank a, Rank b) const {
    if (a > b) std::swap(a, b);
    CohomClass out(ctx);
    for (auto [r, c] : entries.at({a, b})) out.add_term(r, c);
    return out;
}

StructureTable build_table(const GrassmannianPtr& ctx) {
    StructureTable table{ctx, {}};
    for (Rank a = 0; a < ctx->dim(); ++a) {
        const CohomClass sa = CohomClass::basis(ctx, a);
        for (Rank b = a; b < ctx->dim(); ++b) {
            const CohomClass prod = quantum_product(sa, CohomClass::basis(ctx, b));
            table.entries[{a, b}] = {prod.terms().begin(), prod.terms().end()};
        }
    }
    return table;
}

std::string table_to_json(const StructureTable& table) {
    using nlohmann::ordered_json;
    const Grassmannian& g = *table.ctx;
    ordered_json doc;
    doc["k"] = g.k();
    doc["n"] = g.n();
    doc["format"] = kTableFormat;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, terms] : table.entries) {
        ordered_json e;
        e["a"] = json_parts(g.at(key.first));
        e["b"] = json_parts(g.at(key.second));
        ordered_json ts = ordered_json::array();
        for (auto [r, c] : terms) ts.push_back(ordered_json{{"p", json_parts(g.at(r))}, {"c", c}});
        e["terms"] = std::move(ts);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(1) + "\n";
}

StructureTable table_from_json(const GrassmannianPtr& ctx, const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("table is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<int>() != kTableFormat) throw CacheMismatch("unsupported table format");
        const int k = doc.at("k").get<int>();
        const int n = doc.at("n").get<int>();
        if (k != ctx->k() || n != ctx->n())
            throw CacheMismatch("table is for G(" + std::to_string(k) + "," + std::to_string(n) + "), expected G(" +
                                std::to_string(ctx->k()) + "," + std::to_string(ctx->n()) + ")");
        StructureTable table{ctx, {}};
        auto rank_of = [&](const json& p) { return ctx->rank(ctx->partition(p.get<std::vector<int>>())); };
        for (const json& e : doc.at("entries")) {
            Rank a = rank_of(e.at("a"));
            Rank b = rank_of(e.at("b"));
            if (a > b) std::swap(a, b);
            std::map<Rank, Coeff> terms;
            for (const json& t : e.at("terms")) terms[rank_of(t.at("p"))] += t.at("c").get<Coeff>();
            table.entries[{a, b}] = {terms.begin(), terms.end()};
        }
        if (table.entries.size() != ctx->dim() * (ctx->dim() + 1) / 2)
            throw ParseError("table has " + std::to_string(table.entries.size()) + " entries, expected " +
                             std::to_string(ctx->dim() * (ctx->dim() + 1) / 2));
        return table;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed table: ") + e.what());
    } catch (const std::invalid_argument& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw ParseError(std::string("malformed table: ") + e.what());
    }
}

void save_table(const StructureTable& table, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << table_to_json(table);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

StructureTable load_table(const GrassmannianPtr& ctx, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return table_from_json(ctx, buf.str());
}

}  // namespace qgr
