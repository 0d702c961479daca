#pragma once

// Exact property checks of the quantum product itself: the ring axioms,
// agreement with the classical ring in top degree, and consistency of the
// Pieri rule, the Giambelli expansion and the cyclic operator c.

#include <cstddef>
#include <cstdint>

#include "qgr/partitions.hpp"
#include "qgr/report.hpp"

namespace qgr {

Report verify_commutativity(const GrassmannianPtr& ctx);
Report verify_associativity(const GrassmannianPtr& ctx, std::size_t samples = 1000, std::uint64_t seed = kDefaultSeed);

/// Every term of S_a * S_b has degree = deg a + deg b (mod n) and at most
/// deg a + deg b; the top-degree part equals the classical cup product.
Report verify_top_degree(const GrassmannianPtr& ctx);

/// Top-degree part of quantum Pieri equals classical Pieri, all lambda, r.
Report verify_pieri_consistency(const GrassmannianPtr& ctx);

/// Evaluating the Giambelli expansion of lambda reproduces S_lambda.
Report verify_giambelli(const GrassmannianPtr& ctx);

Report verify_gw_symmetry(const GrassmannianPtr& ctx, std::size_t samples = 1000, std::uint64_t seed = kDefaultSeed);

/// c as a subset shift equals multiplication by the column class, and
/// c has period dividing n.
Report verify_c_operator(const GrassmannianPtr& ctx);

}  // namespace qgr
