#pragma once

// R = QH*(G, C) as functions on its finite spectrum.
//
// The multiplication operators of the generators sigma_1..sigma_k commute
// and R is semisimple, so a generic real combination of them has dim R
// simple eigenvalues.  Its eigenvectors are the idempotents of R up to
// scale, and the character of a point on a class T is the Rayleigh value
// of T's multiplication matrix at that eigenvector.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgr/classical_ring.hpp"
#include "qgr/quantum_ring.hpp"
#include "qgr/report.hpp"

namespace qgr {

using IntMatrix = Eigen::Matrix<Coeff, Eigen::Dynamic, Eigen::Dynamic>;
using Complex = std::complex<double>;

/// Matrix of phi_C in the Schubert basis: column j holds the coordinates of
/// C * basis[j].
struct MultMatrix {
    GrassmannianPtr ctx;
    IntMatrix entries;

    bool is_symmetric() const { return entries == entries.transpose(); }
    friend bool operator==(const MultMatrix& a, const MultMatrix& b) {
        return *a.ctx == *b.ctx && a.entries == b.entries;
    }
};

MultMatrix mult_matrix(const CohomClass& c);
/// Same matrix, reading basis products from a prebuilt table.
MultMatrix mult_matrix(const CohomClass& c, const StructureTable& table);
/// Exact integer product; throws OverflowError.
MultMatrix multiply(const MultMatrix& a, const MultMatrix& b);

struct SpectralPoint {
    /// Unit length, first entry of magnitude > 1e-10 real positive.
    Eigen::VectorXcd eigenvector;
    /// chi_p(T) indexed by basis rank.
    std::vector<Complex> characters;
    /// (chi_p(sigma_1), ..., chi_p(sigma_k)).
    std::vector<Complex> coords;
    /// max over generators of |M_sigma v - chi v| / |v|.
    double residual = 0;
};

struct SpectralData {
    GrassmannianPtr ctx;
    std::vector<SpectralPoint> points;
    double residual = 0;
    std::uint64_t seed = kDefaultSeed;
    double tol = 0;
    /// Weights t_i of the generic combination that was accepted.
    std::vector<double> weights;
    /// Basis products the characters were read from.
    std::shared_ptr<const StructureTable> table;
};

inline constexpr double kResidualTol = 1e-8;
inline constexpr double kGapTol = 1e-9;
inline constexpr double kConjugationTol = 1e-6;
inline constexpr double kVanishingTol = 1e-7;

/// Draws t_i uniformly in [1, 2] from `seed`, diagonalizes sum t_i M_sigma_i,
/// and redraws (at most five attempts) until the eigenvalues are pairwise
/// separated by more than kGapTol * max(1, max |eigenvalue|).  Points are
/// sorted by coordinates.  Throws DegenerateSpectrum if no attempt separates
/// the spectrum or a residual exceeds `tol`.
SpectralData joint_eigenbasis(const GrassmannianPtr& ctx, std::uint64_t seed = kDefaultSeed, double tol = kResidualTol);

/// Values of a class at every point.
std::vector<Complex> evaluate(const CohomClass& c, const SpectralData& spectrum);

/// {"k","n","seed","points":[{"coords":[[re,im],...],"residual":x}],"characters":{"2,1":[[re,im],...]}}
std::string spectrum_to_json(const SpectralData& spectrum);

/// Every coefficient drawn uniformly from [lo, hi].
CohomClass random_class(const GrassmannianPtr& ctx, std::mt19937_64& rng, Coeff lo = -5, Coeff hi = 5);

/// All basis classes followed by `random_count` seeded random classes.
std::vector<CohomClass> probe_classes(const GrassmannianPtr& ctx, std::size_t random_count, std::uint64_t seed);

/// |chi_p(bar S) - conj chi_p(S)| <= tol for every basis S and point p.
Report verify_conjugation(const SpectralData& spectrum, double tol = kConjugationTol);
Report verify_conjugation(const GrassmannianPtr& ctx, std::uint64_t seed = kDefaultSeed, double tol = kConjugationTol);

/// Conjugating coordinates permutes the point set (matching distance <= tol).
Report verify_point_conjugation(const SpectralData& spectrum, double tol = kConjugationTol);

/// Point count, generator residuals, chi(1) = 1, and
/// |chi(S_a * S_b) - chi(S_a) chi(S_b)| <= tol for every basis pair.
Report verify_characters(const SpectralData& spectrum, double tol = kConjugationTol);

/// phi_{C * bar C} is exactly symmetric with eigenvalues >= -tol, and
/// C * bar C takes values with |Im| <= tol and Re >= -tol.
Report verify_sympos(const SpectralData& spectrum, const CohomClass& c, double tol = kResidualTol);
Report verify_sympos(const SpectralData& spectrum, const std::vector<CohomClass>& classes, double tol = kResidualTol);

/// |chi_p(C)| < tol  iff  |chi_p(bar C)| < tol, for each class and point.
Report verify_vanishing(const SpectralData& spectrum, const std::vector<CohomClass>& classes,
                        double tol = kVanishingTol);

}  // namespace qgr
