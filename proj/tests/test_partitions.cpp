#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qgr/errors.hpp"
#include "qgr/partitions.hpp"

using namespace qgr;

namespace {

BoxPartition P(const Grassmannian& g, std::vector<int> parts) { return g.partition(std::move(parts)); }

// Brute force: every l-tuple over 0..k, kept if weakly decreasing.
std::size_t brute_force_count(int k, int l) {
    std::size_t count = 0;
    std::vector<int> t(static_cast<std::size_t>(l), 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 1; i < t.size(); ++i) ok = ok && t[i] <= t[i - 1];
        count += ok;
        std::size_t i = 0;
        while (i < t.size() && t[i] == k) t[i++] = 0;
        if (i == t.size()) break;
        ++t[i];
    }
    return count;
}

// Side of the largest square of cells inside the diagram.
int largest_square(const BoxPartition& p) {
    int side = 0;
    for (int s = 1; s <= static_cast<int>(p.length()); ++s) {
        bool fits = true;
        for (int row = 0; row < s; ++row) fits = fits && p[static_cast<std::size_t>(row)] >= s;
        if (fits) side = s;
    }
    return side;
}

template <class F>
void for_each_ctx(int max_n, F&& f) {
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k) f(Grassmannian::make(k, n));
}

}  // namespace

TEST_CASE("enumerate_basis lists the box in graded-lex order") {
    auto g = Grassmannian::make(2, 4);
    const std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {2, 2}};
    REQUIRE(g->dim() == 6);
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(g->at(i) == BoxPartition(expected[i]));

    auto p1 = Grassmannian::make(1, 2);
    CHECK(p1->basis() == std::vector<BoxPartition>{BoxPartition({0}), BoxPartition({1})});

    CHECK(Grassmannian::make(3, 6)->dim() == brute_force_count(3, 3));
    CHECK(brute_force_count(3, 3) == 20);
}

TEST_CASE("basis size is binomial(n,k) and ranks are a bijection") {
    for_each_ctx(12, [](const GrassmannianPtr& g) {
        CHECK(g->dim() == binomial(g->n(), g->k()));
        for (Rank r = 0; r < g->dim(); ++r) {
            CHECK(g->contains(g->at(r)));
            CHECK(g->rank(g->at(r)) == r);
        }
    });
}

TEST_CASE("invalid contexts are rejected") {
    CHECK_THROWS_AS(Grassmannian::make(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Grassmannian::make(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(Grassmannian::make(3, 2), std::invalid_argument);
}

TEST_CASE("durfee") {
    auto g = Grassmannian::make(2, 4);
    CHECK(durfee(P(*g, {})) == 0);
    CHECK(durfee(P(*g, {2, 1})) == 1);
    auto h = Grassmannian::make(3, 6);
    CHECK(durfee(P(*h, {3, 3, 2})) == 2);
    for_each_ctx(10, [](const GrassmannianPtr& c) {
        for (const auto& p : c->basis()) CHECK(durfee(p) == largest_square(p));
    });
}

TEST_CASE("poincare_dual") {
    auto g = Grassmannian::make(2, 4);
    CHECK(poincare_dual(*g, P(*g, {})) == P(*g, {2, 2}));
    CHECK(poincare_dual(*g, P(*g, {1})) == P(*g, {2, 1}));
    CHECK(poincare_dual(*g, P(*g, {2})) == P(*g, {2}));
    for_each_ctx(12, [](const GrassmannianPtr& c) {
        for (const auto& p : c->basis()) {
            const BoxPartition d = poincare_dual(*c, p);
            REQUIRE(c->contains(d));
            CHECK(poincare_dual(*c, d) == p);
            CHECK(d.degree() + p.degree() == c->top_degree());
        }
    });
}

TEST_CASE("bar_involution examples agree with the two-branch formula and dual(c^k)") {
    auto g = Grassmannian::make(2, 4);
    CHECK(bar_involution(*g, P(*g, {})) == P(*g, {}));
    CHECK(bar_involution(*g, P(*g, {1})) == P(*g, {2, 1}));
    CHECK(bar_involution(*g, P(*g, {2})) == P(*g, {1, 1}));
    CHECK(bar_involution(*g, P(*g, {2, 2})) == P(*g, {2, 2}));
    for (const auto& p : g->basis()) CHECK(bar_involution(*g, p) == poincare_dual(*g, c_shift(*g, p, g->k())));
}

TEST_CASE("bar_involution laws for n <= 12") {
    for_each_ctx(12, [](const GrassmannianPtr& c) {
        for (const auto& p : c->basis()) {
            const BoxPartition b = bar_involution(*c, p);
            REQUIRE(c->contains(b));
            CHECK(bar_involution(*c, b) == p);
            CHECK(durfee(b) == durfee(p));
            CHECK(b.degree() == c->n() * durfee(p) - p.degree());
            CHECK(c_shift(*c, p, c->k()) == poincare_dual(*c, b));
        }
    });
}

TEST_CASE("bar of a single row is (k-r+1, 1, ..., 1)") {
    for_each_ctx(10, [](const GrassmannianPtr& c) {
        for (int r = 1; r <= c->k(); ++r) {
            std::vector<int> expected(static_cast<std::size_t>(c->l()), 1);
            expected[0] = c->k() - r + 1;
            CHECK(bar_involution(*c, c->row(r)) == BoxPartition(expected));
        }
    });
}

TEST_CASE("subset coordinates") {
    auto g = Grassmannian::make(2, 4);
    CHECK(to_subset(*g, P(*g, {})) == LSubset{{3, 4}});
    CHECK(to_subset(*g, P(*g, {1})) == LSubset{{2, 4}});
    CHECK(to_subset(*g, P(*g, {2, 2})) == LSubset{{1, 2}});
    CHECK(format_subset(to_subset(*g, P(*g, {1}))) == "{2,4}");
    CHECK(parse_subset(*g, "{1,3}") == LSubset{{1, 3}});
    CHECK_THROWS_AS(parse_subset(*g, "{3,1}"), ParseError);
    CHECK_THROWS_AS(parse_subset(*g, "{1,5}"), ParseError);
    CHECK_THROWS_AS(parse_subset(*g, "{1}"), ParseError);

    for_each_ctx(12, [](const GrassmannianPtr& c) {
        std::set<std::vector<int>> seen;
        for (const auto& p : c->basis()) {
            const LSubset s = to_subset(*c, p);
            CHECK(from_subset(*c, s) == p);
            for (std::size_t i = 0; i < s.elems.size(); ++i) {
                CHECK(s.elems[i] >= 1);
                CHECK(s.elems[i] <= c->n());
                if (i) CHECK(s.elems[i] > s.elems[i - 1]);
            }
            seen.insert(s.elems);
        }
        CHECK(seen.size() == binomial(c->n(), c->l()));
    });
}

TEST_CASE("c_shift") {
    auto g = Grassmannian::make(2, 4);
    CHECK(c_shift(*g, P(*g, {1}), 1) == P(*g, {2, 1}));
    CHECK(c_shift(*g, P(*g, {2, 1}), 1) == P(*g, {1}));
    CHECK(c_shift(*g, P(*g, {}), 1) == P(*g, {1, 1}));
    CHECK(c_shift(*g, P(*g, {2}), 1) == P(*g, {}));
    CHECK(c_shift(*g, P(*g, {1}), -1) == P(*g, {2, 1}));
    CHECK(c_shift(*g, c_shift(*g, P(*g, {1}), -1), 1) == P(*g, {1}));

    for_each_ctx(10, [](const GrassmannianPtr& c) {
        for (const auto& p : c->basis()) {
            CHECK(c_shift(*c, p, 0) == p);
            CHECK(c_shift(*c, p, c->n()) == p);
            CHECK(c_shift(*c, p, -3 * c->n()) == p);
            BoxPartition q = p;
            for (int i = 0; i < c->n(); ++i) q = c_shift(*c, q, 1);
            CHECK(q == p);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 4; ++b) CHECK(c_shift(*c, c_shift(*c, p, a), b) == c_shift(*c, p, a + b));
        }
    });
}

TEST_CASE("partition text format") {
    auto g = Grassmannian::make(2, 4);
    CHECK(parse_partition(*g, "2,1") == P(*g, {2, 1}));
    CHECK(parse_partition(*g, "1") == P(*g, {1}));
    CHECK(parse_partition(*g, "1,0") == P(*g, {1}));
    CHECK(parse_partition(*g, "") == P(*g, {}));
    CHECK(parse_partition(*g, "[]") == P(*g, {}));
    CHECK(parse_partition(*g, "[2, 2]") == P(*g, {2, 2}));
    CHECK(format_parts(P(*g, {2, 1})) == "2,1");
    CHECK(format_parts(P(*g, {})).empty());

    CHECK_THROWS_AS(parse_partition(*g, "1,2"), ParseError);
    CHECK_THROWS_AS(parse_partition(*g, "a"), ParseError);
    CHECK_THROWS_AS(parse_partition(*g, "1,,1"), ParseError);
    CHECK_THROWS_AS(parse_partition(*g, "-1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition(*g, "3"), doctest::Contains("exceeds k=2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition(*g, "1,1,1"), doctest::Contains("at most l=2"), ParseError);

    auto h = Grassmannian::make(3, 7);
    for (const auto& p : h->basis()) CHECK(parse_partition(*h, format_parts(p)) == p);
}
