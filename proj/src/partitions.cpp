#include "qgr/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "qgr/errors.hpp"

namespace qgr {

namespace {

void enumerate_rec(int row, int rows, int max_part, std::vector<int>& cur,
                   std::vector<BoxPartition>& out) {
    if (row == rows) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 0; p <= max_part; ++p) {
        cur[row] = p;
        enumerate_rec(row + 1, rows, p, cur, out);
    }
    cur[row] = 0;
}

std::uint64_t subset_mask(int k, const BoxPartition& lambda) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        int e = k + static_cast<int>(i) + 1 - lambda[i];
        mask |= std::uint64_t{1} << (e - 1);
    }
    return mask;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view body, std::string_view what) {
    std::vector<int> out;
    body = strip(body);
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok =
            strip(body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("malformed " + std::string(what) + " entry '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int BoxPartition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> BoxPartition::trimmed() const {
    std::vector<int> out(parts_);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<BoxPartition> enumerate_basis(int k, int n) {
    std::vector<BoxPartition> out;
    std::vector<int> cur(static_cast<std::size_t>(n - k), 0);
    enumerate_rec(0, n - k, k, cur, out);
    std::sort(out.begin(), out.end(), [](const BoxPartition& a, const BoxPartition& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a > b;
    });
    return out;
}

Grassmannian::Grassmannian(int k, int n) : k_(k), n_(n) {
    basis_ = enumerate_basis(k, n);
    by_degree_.resize(static_cast<std::size_t>(top_degree()) + 1);
    for (Rank r = 0; r < basis_.size(); ++r) {
        by_degree_[static_cast<std::size_t>(basis_[r].degree())].push_back(r);
        rank_of_mask_.emplace(subset_mask(k_, basis_[r]), r);
    }
}

GrassmannianPtr Grassmannian::make(int k, int n) {
    if (k < 1 || n <= k)
        throw std::invalid_argument("need 1 <= k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (n > 62) throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the supported maximum 62");
    return GrassmannianPtr(new Grassmannian(k, n));
}

bool Grassmannian::contains(const BoxPartition& lambda) const {
    if (lambda.length() != static_cast<std::size_t>(l())) return false;
    int prev = k_;
    for (int p : lambda.parts()) {
        if (p < 0 || p > prev) return false;
        prev = p;
    }
    return true;
}

Rank Grassmannian::rank(const BoxPartition& lambda) const {
    if (!contains(lambda)) throw std::invalid_argument("partition is not in the " + std::to_string(l()) + "x" +
                                                       std::to_string(k_) + " box");
    return rank_of_mask_.at(subset_mask(k_, lambda));
}

BoxPartition Grassmannian::partition(std::vector<int> parts) const {
    while (parts.size() > static_cast<std::size_t>(l()) && parts.back() == 0) parts.pop_back();
    if (parts.size() > static_cast<std::size_t>(l()))
        throw std::invalid_argument("partition has " + std::to_string(parts.size()) +
                                    " nonzero rows but at most l=" + std::to_string(l()) + " are allowed");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (parts[i] > k_)
            throw std::invalid_argument("part " + std::to_string(parts[i]) + " exceeds k=" + std::to_string(k_));
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("parts are not weakly decreasing");
    }
    parts.resize(static_cast<std::size_t>(l()), 0);
    return BoxPartition(std::move(parts));
}

const std::vector<Rank>& Grassmannian::ranks_of_degree(int degree) const {
    static const std::vector<Rank> none;
    if (degree < 0 || degree > top_degree()) return none;
    return by_degree_[static_cast<std::size_t>(degree)];
}

BoxPartition Grassmannian::unit() const { return partition({}); }
BoxPartition Grassmannian::point() const { return partition(std::vector<int>(static_cast<std::size_t>(l()), k_)); }
BoxPartition Grassmannian::row(int r) const { return partition({r}); }
BoxPartition Grassmannian::column() const { return partition(std::vector<int>(static_cast<std::size_t>(l()), 1)); }

int durfee(const BoxPartition& lambda) {
    int d = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        if (lambda[i] >= static_cast<int>(i) + 1) d = static_cast<int>(i) + 1;
    return d;
}

BoxPartition poincare_dual(const Grassmannian& ctx, const BoxPartition& lambda) {
    const auto l = static_cast<std::size_t>(ctx.l());
    std::vector<int> out(l);
    for (std::size_t i = 0; i < l; ++i) out[i] = ctx.k() - lambda[l - 1 - i];
    return BoxPartition(std::move(out));
}

BoxPartition bar_involution(const Grassmannian& ctx, const BoxPartition& lambda) {
    const int l = ctx.l();
    const int k = ctx.k();
    const int d = durfee(lambda);
    // 1-based accessor for the formula below
    auto lam = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
    std::vector<int> mu(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
        mu[static_cast<std::size_t>(i - 1)] = i <= d ? d + k - lam(d - i + 1) : d - lam(l - i + d + 1);
    return BoxPartition(std::move(mu));
}

LSubset to_subset(const Grassmannian& ctx, const BoxPartition& lambda) {
    LSubset s;
    s.elems.reserve(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) s.elems.push_back(ctx.k() + static_cast<int>(i) + 1 - lambda[i]);
    return s;
}

BoxPartition from_subset(const Grassmannian& ctx, const LSubset& s) {
    std::vector<int> parts(s.elems.size());
    for (std::size_t i = 0; i < s.elems.size(); ++i) parts[i] = ctx.k() + static_cast<int>(i) + 1 - s.elems[i];
    return BoxPartition(std::move(parts));
}

BoxPartition c_shift(const Grassmannian& ctx, const BoxPartition& lambda, long long j) {
    const long long n = ctx.n();
    const long long shift = ((j % n) + n) % n;
    LSubset s = to_subset(ctx, lambda);
    for (int& e : s.elems) e = static_cast<int>(((e - 1 - shift) % n + n) % n + 1);
    std::sort(s.elems.begin(), s.elems.end());
    return from_subset(ctx, s);
}

std::vector<int> parse_parts(std::string_view text) {
    std::string_view body = strip(text);
    if (body.size() >= 2 && ((body.front() == '[' && body.back() == ']') || (body.front() == '(' && body.back() == ')')))
        body = body.substr(1, body.size() - 2);
    std::vector<int> parts = parse_int_list(body, "partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw ParseError("negative part " + std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("parts must be weakly decreasing: '" + std::string(text) + "'");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

BoxPartition parse_partition(const Grassmannian& ctx, std::string_view text) {
    std::vector<int> parts = parse_parts(text);
    try {
        return ctx.partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in G(" + std::to_string(ctx.k()) + "," +
                         std::to_string(ctx.n()) + ")");
    }
}

std::string format_parts(const BoxPartition& lambda) {
    std::string out;
    for (int p : lambda.trimmed()) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

LSubset parse_subset(const Grassmannian& ctx, std::string_view text) {
    std::string_view body = strip(text);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw ParseError("subset must be written as {a,b,...}");
    LSubset s{parse_int_list(body.substr(1, body.size() - 2), "subset")};
    if (s.elems.size() != static_cast<std::size_t>(ctx.l()))
        throw ParseError("subset must have l=" + std::to_string(ctx.l()) + " elements");
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (s.elems[i] < 1 || s.elems[i] > ctx.n())
            throw ParseError("subset element " + std::to_string(s.elems[i]) + " outside 1.." + std::to_string(ctx.n()));
        if (i > 0 && s.elems[i] <= s.elems[i - 1]) throw ParseError("subset must be strictly increasing");
    }
    return s;
}

std::string format_subset(const LSubset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.elems[i]);
    }
    return out + "}";
}

}  // namespace qgr
