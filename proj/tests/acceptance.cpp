// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qgr/involution.hpp"
#include "qgr/quantum_ring.hpp"
#include "qgr/ring_checks.hpp"
#include "qgr/spectrum.hpp"

using namespace qgr;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
    void absorb(const Report& r) {
        require(r.ok(), r.suite + " k=" + std::to_string(r.k) + " n=" + std::to_string(r.n) + ": " +
                            std::to_string(r.failures.size()) + " failures");
    }
};

template <class F>
void for_each_ctx(int max_n, F&& f) {
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k) f(Grassmannian::make(k, n));
}

using Parts = std::vector<int>;
using Terms = std::map<Parts, Coeff>;

Terms terms_of(const CohomClass& c) {
    Terms out;
    for (auto [r, v] : c.terms()) out[c.grassmannian().at(r).trimmed()] = v;
    return out;
}

Outcome gr24_table() {
    // Hand-derived products in G(2,4) at q = 1, each unordered pair once.
    const std::vector<std::tuple<Parts, Parts, Terms>> oracle{
        {{}, {}, {{{}, 1}}},
        {{}, {1}, {{{1}, 1}}},
        {{}, {2}, {{{2}, 1}}},
        {{}, {1, 1}, {{{1, 1}, 1}}},
        {{}, {2, 1}, {{{2, 1}, 1}}},
        {{}, {2, 2}, {{{2, 2}, 1}}},
        {{1}, {1}, {{{2}, 1}, {{1, 1}, 1}}},
        {{1}, {2}, {{{2, 1}, 1}}},
        {{1}, {1, 1}, {{{2, 1}, 1}}},
        {{1}, {2, 1}, {{{2, 2}, 1}, {{}, 1}}},
        {{1}, {2, 2}, {{{1}, 1}}},
        {{2}, {2}, {{{2, 2}, 1}}},
        {{2}, {1, 1}, {{{}, 1}}},
        {{2}, {2, 1}, {{{1}, 1}}},
        {{2}, {2, 2}, {{{1, 1}, 1}}},
        {{1, 1}, {1, 1}, {{{2, 2}, 1}}},
        {{1, 1}, {2, 1}, {{{1}, 1}}},
        {{1, 1}, {2, 2}, {{{2}, 1}}},
        {{2, 1}, {2, 1}, {{{2}, 1}, {{1, 1}, 1}}},
        {{2, 1}, {2, 2}, {{{2, 1}, 1}}},
        {{2, 2}, {2, 2}, {{{}, 1}}},
    };
    auto g = Grassmannian::make(2, 4);
    Outcome o;
    for (const auto& [a, b, expected] : oracle) {
        const CohomClass sa = CohomClass::of(g, g->partition(a)), sb = CohomClass::of(g, g->partition(b));
        o.require(terms_of(sa * sb) == expected, format_class(sa) + " * " + format_class(sb));
        o.require(terms_of(sb * sa) == expected, format_class(sb) + " * " + format_class(sa));
    }
    o.require(oracle.size() == 21, "oracle size");
    return o;
}

Outcome gr24_involution() {
    const std::vector<std::pair<Parts, Parts>> table{{{}, {}},     {{1}, {2, 1}}, {{2}, {1, 1}},
                                                     {{1, 1}, {2}}, {{2, 1}, {1}}, {{2, 2}, {2, 2}}};
    auto g = Grassmannian::make(2, 4);
    Outcome o;
    for (const auto& [from, to] : table)
        o.require(bar(CohomClass::of(g, g->partition(from))) == CohomClass::of(g, g->partition(to)),
                  "bar of (" + format_parts(g->partition(from)) + ")");
    return o;
}

Outcome bar_ring_map() {
    Outcome o;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 6}, {2, 6}, {3, 7}}) {
        auto g = Grassmannian::make(k, n);
        const Report r = verify_theorem1(g, SampleMode::exhaustive);
        o.absorb(r);
        o.require(r.checked == g->dim() * (g->dim() + 1) / 2, "pair count");
    }
    return o;
}

Outcome bar_via_shift() {
    Outcome o;
    for_each_ctx(10, [&](const GrassmannianPtr& g) {
        const Report r = verify_lemma_bar_eq_hat_ck(g);
        o.absorb(r);
        o.require(r.checked == g->dim(), "basis count");
    });
    return o;
}

Outcome dual_shift_and_pieri_gw() {
    Outcome o;
    for_each_ctx(8, [&](const GrassmannianPtr& g) { o.absorb(verify_eq1_and_for1(g)); });
    return o;
}

Outcome dual_bar_identities() {
    Outcome o;
    for_each_ctx(6, [&](const GrassmannianPtr& g) {
        const Report r = verify_corollary(g, 1000);
        o.absorb(r);
        o.require(r.checked == g->dim() * g->dim() + 1000, "check count");
    });
    return o;
}

Outcome structure() {
    Outcome o;
    for_each_ctx(10, [&](const GrassmannianPtr& g) {
        o.absorb(verify_involution_structure(g));
        o.absorb(verify_c_operator(g));
    });
    return o;
}

Outcome ring_axioms() {
    Outcome o;
    for_each_ctx(8, [&](const GrassmannianPtr& g) {
        o.absorb(verify_commutativity(g));
        o.absorb(verify_associativity(g, 1000));
        o.absorb(verify_top_degree(g));
    });
    return o;
}

Outcome spectrum_suite() {
    Outcome o;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {2, 5}, {3, 6}}) {
        auto g = Grassmannian::make(k, n);
        const SpectralData s = joint_eigenbasis(g, kDefaultSeed, 1e-8);
        o.require(s.points.size() == g->dim(), "point count");
        for (const auto& p : s.points) o.require(p.residual <= 1e-8, "generator residual");
        const Report c = verify_conjugation(s, 1e-6);
        o.absorb(c);
        o.require(c.max_deviation && *c.max_deviation <= 1e-6, "conjugation deviation");
        o.absorb(verify_point_conjugation(s, 1e-6));
    }
    return o;
}

Outcome positivity() {
    Outcome o;
    for_each_ctx(6, [&](const GrassmannianPtr& g) {
        const SpectralData s = joint_eigenbasis(g);
        const auto classes = probe_classes(g, 100, kDefaultSeed);
        o.require(classes.size() == g->dim() + 100, "class count");
        o.absorb(verify_sympos(s, classes, 1e-8));
        o.absorb(verify_vanishing(s, classes, 1e-7));
    });
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_golden() {
    Outcome o;
    auto expect = [&](std::vector<std::string> args, int code, const std::string& out) {
        std::ostringstream so, se;
        const int got = cli::run(args, so, se);
        std::string cmd;
        for (const auto& a : args) cmd += a + " ";
        o.require(got == code, cmd + "exit " + std::to_string(got));
        if (!out.empty()) o.require(so.str() == out, cmd + "printed " + so.str());
        return so.str();
    };
    expect({"mul", "--k", "2", "--n", "4", "--a", "1", "--b", "1"}, 0, "(2) + (1,1)\n");
    expect({"mul", "--k", "2", "--n", "4", "--a", "2,2", "--b", "2,2"}, 0, "1\n");
    expect({"mul", "--k", "2", "--n", "4", "--a", "", "--b", "2,1"}, 0, "(2,1)\n");
    expect({"bar", "--k", "2", "--n", "4", "--class", "1"}, 0, "(2,1)\n");
    expect({"dual", "--k", "2", "--n", "4", "--class", "2,1"}, 0, "(1)\n");
    expect({"cshift", "--k", "2", "--n", "4", "--class", "", "--j", "1"}, 0, "(1,1)\n");
    expect({"gw", "--k", "2", "--n", "4", "--a", "2,1", "--b", "2,1", "--c", "2"}, 0, "value 1, d 1\n");
    expect({"gw", "--k", "2", "--n", "4", "--a", "1", "--b", "1", "--c", "1"}, 0, "value 0, d none\n");
    expect({"gw", "--k", "2", "--n", "4", "--a", "", "--b", "", "--c", "2,2"}, 0, "value 1, d 0\n");
    expect({"verify", "--k", "2", "--n", "4", "--suite", "all"}, 0, "");
    expect({"verify", "--k", "0", "--n", "4"}, 2, "");
    const std::string inv = expect({"verify", "--k", "2", "--n", "5", "--suite", "involution"}, 0, "");
    o.require(inv.find("\"suite\":\"bar_is_ring_map\",\"ctx\":{\"k\":2,\"n\":5},\"checked\":55") !=
                  std::string::npos,
              "ring-map pair count");
    const std::string s1 = expect({"spectrum", "--k", "2", "--n", "4"}, 0, "");
    expect({"spectrum", "--k", "2", "--n", "4"}, 0, s1);
    expect({"spectrum", "--k", "3", "--n", "6", "--tol", "1e-30"}, 3, "");

    const auto dir = std::filesystem::temp_directory_path() / "qgr-acceptance-cache";
    std::filesystem::remove_all(dir);
    expect({"table", "--k", "3", "--n", "6", "--cache-dir", dir.string()}, 0, "");
    const auto file = cli::cache_file(dir, 3, 6);
    const std::string first = slurp(file);
    const std::string direct = expect({"mul", "--k", "3", "--n", "6", "--a", "2,1", "--b", "3,2"}, 0, "");
    expect({"mul", "--k", "3", "--n", "6", "--a", "2,1", "--b", "3,2", "--cache", "--cache-dir", dir.string()}, 0,
           direct);
    expect({"table", "--k", "3", "--n", "6", "--out", (dir / "again.json").string()}, 0, "");
    o.require(!first.empty() && slurp(dir / "again.json") == first && slurp(file) == first, "cache bytes");
    std::filesystem::remove_all(dir);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "G(2,4) quantum multiplication table", 1, gr24_table},
        {2, "G(2,4) involution table", 1, gr24_involution},
        {3, "bar is a ring map, exhaustive on six contexts", 120, bar_ring_map},
        {4, "bar = dual(c^k) for n <= 10", 60, bar_via_shift},
        {5, "dual/c^k exchange and the Pieri GW identity for n <= 8", 0, dual_shift_and_pieri_gw},
        {6, "dual(A*C) = dual(A)*bar(C), GW triple identity", 0, dual_bar_identities},
        {7, "involution and c-operator structure for n <= 10", 0, structure},
        {8, "commutativity, associativity, top degree for n <= 8", 0, ring_axioms},
        {9, "spectrum: points, residuals, conjugation", 30, spectrum_suite},
        {10, "positivity and vanishing for n <= 6", 0, positivity},
        {11, "CLI golden invocations and cache round trip", 0, cli_golden},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.ok = false;
            o.detail = "time limit " + std::to_string(c.limit_s) + " s exceeded";
        }
        std::printf("%s [%2d] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.ok ? "" : ": ", o.detail.c_str());
        failed += !o.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
