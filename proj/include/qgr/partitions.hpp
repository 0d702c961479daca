#pragma once

// Young diagrams in the l x k box and the combinatorial maps on them:
// Poincare-dual complement, the Durfee-square involution, and the l-subset
// coordinates on which the cyclic operator c acts by a shift.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qgr {

using Rank = std::size_t;

/// A weakly decreasing sequence of parts, stored zero-padded to a fixed length.
class BoxPartition {
  public:
    BoxPartition() = default;
    explicit BoxPartition(std::vector<int> parts) : parts_(std::move(parts)) {}

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    /// 0-based access; positions past the stored length read as 0.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int degree() const;
    /// Parts with trailing zeros removed.
    std::vector<int> trimmed() const;

    friend bool operator==(const BoxPartition&, const BoxPartition&) = default;
    friend auto operator<=>(const BoxPartition&, const BoxPartition&) = default;

  private:
    std::vector<int> parts_;
};

/// Strictly increasing l-element subset of {1, ..., n}.
struct LSubset {
    std::vector<int> elems;
    friend bool operator==(const LSubset&, const LSubset&) = default;
};

class Grassmannian;
using GrassmannianPtr = std::shared_ptr<const Grassmannian>;

/// G(k, n) together with its ranked Schubert basis.
///
/// The basis is ordered by ascending degree, then lexicographically
/// descending parts; ranks index into that order.
class Grassmannian {
  public:
    /// Throws std::invalid_argument unless 1 <= k < n <= 62.
    static GrassmannianPtr make(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    int l() const { return n_ - k_; }
    int top_degree() const { return k_ * (n_ - k_); }
    std::size_t dim() const { return basis_.size(); }

    const std::vector<BoxPartition>& basis() const { return basis_; }
    const BoxPartition& at(Rank r) const { return basis_.at(r); }
    Rank rank(const BoxPartition& lambda) const;
    bool contains(const BoxPartition& lambda) const;

    /// Pads `parts` with zeros to length l and validates it against the box.
    /// Throws std::invalid_argument naming the violated bound.
    BoxPartition partition(std::vector<int> parts) const;

    /// Ranks of all basis partitions of the given degree (empty if none).
    const std::vector<Rank>& ranks_of_degree(int degree) const;

    BoxPartition unit() const;
    BoxPartition point() const;
    /// sigma_r = (r, 0, ..., 0).
    BoxPartition row(int r) const;
    /// (1, ..., 1), the class whose multiplication is the operator c.
    BoxPartition column() const;

    bool operator==(const Grassmannian& o) const { return k_ == o.k_ && n_ == o.n_; }

  private:
    Grassmannian(int k, int n);

    int k_;
    int n_;
    std::vector<BoxPartition> basis_;
    std::vector<std::vector<Rank>> by_degree_;
    std::unordered_map<std::uint64_t, Rank> rank_of_mask_;
};

/// All partitions in the l x k box in basis order; length binomial(n, k).
std::vector<BoxPartition> enumerate_basis(int k, int n);

std::uint64_t binomial(int n, int k);

/// Largest i with lambda_i >= i (1-based); 0 for the empty diagram.
int durfee(const BoxPartition& lambda);

/// Complement in the box: dual_i = k - lambda_{l-i+1}.
BoxPartition poincare_dual(const Grassmannian& ctx, const BoxPartition& lambda);

/// The Durfee-square involution.  With d = durfee(lambda):
///   mu_i = d + k - lambda_{d-i+1}      for i <= d,
///   mu_i = d - lambda_{l-i+d+1}        for i >  d.
/// It preserves d and sends degree m to n*d - m.  For a single row,
/// bar(sigma_r) = (k-r+1, 1, ..., 1) with l-1 trailing ones.
BoxPartition bar_involution(const Grassmannian& ctx, const BoxPartition& lambda);

/// lambda^i = k + i - lambda_i.
LSubset to_subset(const Grassmannian& ctx, const BoxPartition& lambda);
BoxPartition from_subset(const Grassmannian& ctx, const LSubset& s);

/// The basis partition representing c^j S_lambda at q = 1: every subset
/// element is lowered by j modulo n (representatives 1..n) and re-sorted.
BoxPartition c_shift(const Grassmannian& ctx, const BoxPartition& lambda, long long j);

/// Parses "2,1", "2,1,0", "[2,1]", "(2,1)", "" or "[]".  Rejects negative
/// parts and sequences that are not weakly decreasing; does not check a box.
std::vector<int> parse_parts(std::string_view text);
/// Parses and validates against ctx's box.
BoxPartition parse_partition(const Grassmannian& ctx, std::string_view text);
/// "2,1"; the empty diagram is "".
std::string format_parts(const BoxPartition& lambda);

/// Parses "{1,3}"; checks strict increase, range 1..n and size l.
LSubset parse_subset(const Grassmannian& ctx, std::string_view text);
std::string format_subset(const LSubset& s);

}  // namespace qgr
