#pragma once

// The involution S -> bar(S) extended linearly to classes, and exact
// verification suites for its algebraic properties.

#include <cstddef>
#include <cstdint>

#include "qgr/classical_ring.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Relabels every term by bar_involution, keeping coefficients.
CohomClass bar(const CohomClass& a);

/// Poincare duality extended linearly.
CohomClass dual(const CohomClass& a);

/// bar(S) = dual(c^k S) for every basis class.
Report verify_lemma_bar_eq_hat_ck(const GrassmannianPtr& ctx);

enum class SampleMode { exhaustive, sampled };

/// bar(S_a * S_b) = bar(S_a) * bar(S_b), over all unordered basis pairs
/// (exhaustive) or `samples` seeded-random pairs.
Report verify_theorem1(const GrassmannianPtr& ctx, SampleMode mode = SampleMode::exhaustive,
                       std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

/// dual(c^k A) = c^(n-k) dual(A) for every basis A, and
/// <A, S, sigma_r> = <dual A, dual S, bar(sigma_r)> for all basis A, S and 1 <= r <= k.
Report verify_eq1_and_for1(const GrassmannianPtr& ctx);

/// dual(A * C) = dual(A) * bar(C) for every ordered basis pair, and
/// <A, C, B> = <dual A, dual C, bar B> on `samples` seeded-random triples.
Report verify_corollary(const GrassmannianPtr& ctx, std::size_t samples = 1000, std::uint64_t seed = kDefaultSeed);

/// Combinatorial laws: bar and dual are involutions, bar preserves the
/// Durfee size with deg(bar S) = n d - deg S, dual reverses degree in the box,
/// subset coordinates are a bijection, unit and point go where they should.
Report verify_involution_structure(const GrassmannianPtr& ctx);

}  // namespace qgr
