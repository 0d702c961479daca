#pragma once

// The small quantum cohomology ring QH*(G(k,n), Z) with q specialized to 1.
//
// Products are computed from the quantum Pieri rule alone: a general
// Schubert class is expanded as a Giambelli determinant in the row classes
// sigma_1..sigma_k, and each monomial is applied to the other factor by
// iterated Pieri multiplication.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgr/classical_ring.hpp"

namespace qgr {

/// Three-point invariant <A, S, sigma_r> for basis A, S and 1 <= r <= k.
/// It is 1 in exactly two situations:
///   deg A + deg S + r = kl      with a_i + s_j >= k   (i + j = l)
///                                    a_i + s_j <= k   (i + j = l + 1)
///   deg A + deg S + r = kl + n  with a_i + s_j >= k+1 (i + j = l + 1)
///                                    a_i + s_j <= k+1 (i + j = l + 2)
/// where only pairs with 1 <= i, j <= l impose a condition.  Otherwise 0.
int quantum_pieri_invariant(const Grassmannian& ctx, const BoxPartition& a, const BoxPartition& s, int r);

/// sigma_r * A = sum over T of <A, sigma_r, dual T> T.  r = 0 returns A.
CohomClass quantum_pieri_product(int r, const CohomClass& a);

/// One monomial of a Giambelli expansion: coeff * sigma_{rows[0]} * sigma_{rows[1]} * ...
/// `rows` is sorted descending and never contains 0.
struct GiambelliTerm {
    Coeff coeff;
    std::vector<int> rows;
    friend bool operator==(const GiambelliTerm&, const GiambelliTerm&) = default;
};

/// det(sigma_{lambda_i + j - i}) over the nonzero rows of lambda, expanded
/// and with equal monomials merged.  sigma_0 = 1; sigma_r = 0 outside 0..k.
/// Terms are ordered by ascending monomial (lexicographic on `rows`).
std::vector<GiambelliTerm> giambelli_expand(const Grassmannian& ctx, const BoxPartition& lambda);

/// Evaluates a signed sum of sigma-monomials against `b` with Pieri steps.
CohomClass apply_giambelli(const std::vector<GiambelliTerm>& expansion, const CohomClass& b);

/// Quantum product at q = 1.  The factor with the smaller support (the first
/// one on ties) is Giambelli-expanded and applied to the other.
CohomClass quantum_product(const CohomClass& a, const CohomClass& b);
inline CohomClass operator*(const CohomClass& a, const CohomClass& b) { return quantum_product(a, b); }

/// Curve degree d with deg a + deg b + deg c = kl + d n, if one exists.
std::optional<int> quantum_degree(const Grassmannian& ctx, int deg_a, int deg_b, int deg_c);

/// <A, B, C> = pairing(A * B, C).
Coeff gw_invariant(const CohomClass& a, const CohomClass& b, const CohomClass& c);

struct GWRecord {
    BoxPartition a, b, c;
    Coeff value = 0;
    /// Empty when the total degree is not kl + d n for an integer d >= 0;
    /// the value is then 0.
    std::optional<int> degree_d;
};

GWRecord gw_record(const GrassmannianPtr& ctx, const BoxPartition& a, const BoxPartition& b, const BoxPartition& c);

/// c^j applied linearly; c is quantum multiplication by the column class.
CohomClass c_apply(const CohomClass& a, long long j);

/// All pairwise products of basis classes.
struct StructureTable {
    GrassmannianPtr ctx;
    /// Keyed by (rank a, rank b) with rank a <= rank b; terms sorted by rank.
    std::map<std::pair<Rank, Rank>, std::vector<std::pair<Rank, Coeff>>> entries;

    CohomClass product(Rank a, Rank b) const;
    friend bool operator==(const StructureTable& x, const StructureTable& y) {
        return *x.ctx == *y.ctx && x.entries == y.entries;
    }
};

StructureTable build_table(const GrassmannianPtr& ctx);

/// Canonical JSON text of a table (header k, n, format; sorted entries).
std::string table_to_json(const StructureTable& table);
/// Throws CacheMismatch if the header does not describe `ctx`, ParseError on
/// malformed content.
StructureTable table_from_json(const GrassmannianPtr& ctx, const std::string& text);

void save_table(const StructureTable& table, const std::filesystem::path& path);
StructureTable load_table(const GrassmannianPtr& ctx, const std::filesystem::path& path);

inline constexpr int kTableFormat = 1;

}  // namespace qgr
