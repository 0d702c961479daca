#include "qgr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "json.hpp"
#include "qgr/involution.hpp"
#include "sampling.hpp"

namespace qgr {

using detail::label;

namespace {

Report start(const char* name, const SpectralData& s) {
    Report rep;
    rep.suite = name;
    rep.k = s.ctx->k();
    rep.n = s.ctx->n();
    rep.seed = s.seed;
    rep.max_deviation = 0.0;
    return rep;
}

void note_deviation(Report& rep, double dev) { rep.max_deviation = std::max(*rep.max_deviation, dev); }

std::string fmt_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

// For each basis T, M_T v, read off the table.
std::vector<Eigen::VectorXcd> apply_all(const StructureTable& table, const Eigen::VectorXcd& v) {
    const std::size_t dim = table.ctx->dim();
    std::vector<Eigen::VectorXcd> out(dim, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim)));
    for (const auto& [key, terms] : table.entries) {
        const auto [a, b] = key;
        for (auto [r, c] : terms) {
            const auto ri = static_cast<Eigen::Index>(r);
            out[a](ri) += static_cast<double>(c) * v(static_cast<Eigen::Index>(b));
            if (a != b) out[b](ri) += static_cast<double>(c) * v(static_cast<Eigen::Index>(a));
        }
    }
    return out;
}

bool coords_less(const SpectralPoint& x, const SpectralPoint& y) {
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].real() != y.coords[i].real()) return x.coords[i].real() < y.coords[i].real();
        if (x.coords[i].imag() != y.coords[i].imag()) return x.coords[i].imag() < y.coords[i].imag();
    }
    return false;
}

}  // namespace

MultMatrix mult_matrix(const CohomClass& c) {
    const auto& ctx = c.ctx();
    const auto dim = static_cast<Eigen::Index>(ctx->dim());
    MultMatrix m{ctx, IntMatrix::Zero(dim, dim)};
    for (Eigen::Index j = 0; j < dim; ++j) {
        const CohomClass col = c * CohomClass::basis(ctx, static_cast<Rank>(j));
        for (auto [r, v] : col.terms()) m.entries(static_cast<Eigen::Index>(r), j) = v;
    }
    return m;
}

MultMatrix mult_matrix(const CohomClass& c, const StructureTable& table) {
    const auto& ctx = c.ctx();
    if (!(*ctx == *table.ctx)) throw ContextMismatch("structure table belongs to a different Grassmannian");
    const auto dim = static_cast<Eigen::Index>(ctx->dim());
    MultMatrix m{ctx, IntMatrix::Zero(dim, dim)};
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (auto [a, ca] : c.terms()) {
            const Rank b = static_cast<Rank>(j);
            for (auto [r, v] : table.entries.at({std::min(a, b), std::max(a, b)})) {
                Coeff& slot = m.entries(static_cast<Eigen::Index>(r), j);
                slot = checked_add(slot, checked_mul(ca, v));
            }
        }
    }
    return m;
}

MultMatrix multiply(const MultMatrix& a, const MultMatrix& b) {
    if (!(*a.ctx == *b.ctx)) throw ContextMismatch("matrices belong to different Grassmannians");
    const Eigen::Index dim = a.entries.rows();
    MultMatrix out{a.ctx, IntMatrix::Zero(dim, dim)};
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index m = 0; m < dim; ++m) {
            const Coeff x = a.entries(i, m);
            if (x == 0) continue;
            for (Eigen::Index j = 0; j < dim; ++j)
                if (b.entries(m, j) != 0)
                    out.entries(i, j) = checked_add(out.entries(i, j), checked_mul(x, b.entries(m, j)));
        }
    return out;
}

SpectralData joint_eigenbasis(const GrassmannianPtr& ctx, std::uint64_t seed, double tol) {
    const int k = ctx->k();
    const auto dim = static_cast<Eigen::Index>(ctx->dim());
    auto table = std::make_shared<const StructureTable>(build_table(ctx));

    std::vector<Eigen::MatrixXd> gens;
    for (int r = 1; r <= k; ++r)
        gens.push_back(mult_matrix(CohomClass::of(ctx, ctx->row(r)), *table).entries.cast<double>());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight(1.0, 2.0);
    constexpr int kAttempts = 5;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<double> t(static_cast<std::size_t>(k));
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < k; ++i) {
            t[static_cast<std::size_t>(i)] = weight(rng);
            m += t[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(i)];
        }
        Eigen::EigenSolver<Eigen::MatrixXd> solver(m, true);
        if (solver.info() != Eigen::Success) continue;
        const Eigen::VectorXcd vals = solver.eigenvalues();
        double scale = 1.0;
        for (Eigen::Index i = 0; i < dim; ++i) scale = std::max(scale, std::abs(vals(i)));
        double gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = i + 1; j < dim; ++j) gap = std::min(gap, std::abs(vals(i) - vals(j)));
        if (gap <= kGapTol * scale) continue;

        SpectralData out;
        out.ctx = ctx;
        out.seed = seed;
        out.tol = tol;
        out.weights = t;
        out.table = table;
        const Eigen::MatrixXcd vecs = solver.eigenvectors();
        for (Eigen::Index p = 0; p < dim; ++p) {
            Eigen::VectorXcd v = vecs.col(p);
            v /= v.norm();
            for (Eigen::Index i = 0; i < dim; ++i)
                if (std::abs(v(i)) > 1e-10) {
                    v *= std::conj(v(i)) / std::abs(v(i));
                    v(i) = std::abs(v(i));
                    break;
                }
            SpectralPoint pt;
            const std::vector<Eigen::VectorXcd> images = apply_all(*table, v);
            pt.characters.resize(ctx->dim());
            for (Rank r = 0; r < ctx->dim(); ++r) pt.characters[r] = v.dot(images[r]) / v.squaredNorm();
            for (int i = 1; i <= k; ++i) {
                const Rank g = ctx->rank(ctx->row(i));
                pt.coords.push_back(pt.characters[g]);
                pt.residual = std::max(pt.residual, (images[g] - pt.characters[g] * v).norm() / v.norm());
            }
            if (pt.residual > tol)
                throw DegenerateSpectrum("generator residual " + std::to_string(pt.residual) + " exceeds tolerance " +
                                         std::to_string(tol) + " in " + detail::ctx_label(*ctx));
            out.residual = std::max(out.residual, pt.residual);
            pt.eigenvector = std::move(v);
            out.points.push_back(std::move(pt));
        }
        std::sort(out.points.begin(), out.points.end(), coords_less);
        return out;
    }
    throw DegenerateSpectrum("could not separate the spectrum of " + detail::ctx_label(*ctx) + " after " +
                             std::to_string(kAttempts) + " attempts");
}

std::vector<Complex> evaluate(const CohomClass& c, const SpectralData& spectrum) {
    if (!(*c.ctx() == *spectrum.ctx)) throw ContextMismatch("class and spectrum belong to different Grassmannians");
    std::vector<Complex> out(spectrum.points.size());
    for (std::size_t p = 0; p < spectrum.points.size(); ++p)
        for (auto [r, v] : c.terms()) out[p] += static_cast<double>(v) * spectrum.points[p].characters[r];
    return out;
}

std::string spectrum_to_json(const SpectralData& spectrum) {
    using nlohmann::ordered_json;
    auto pair = [](Complex z) { return ordered_json::array({z.real(), z.imag()}); };
    ordered_json doc;
    doc["k"] = spectrum.ctx->k();
    doc["n"] = spectrum.ctx->n();
    doc["seed"] = spectrum.seed;
    ordered_json pts = ordered_json::array();
    for (const auto& p : spectrum.points) {
        ordered_json coords = ordered_json::array();
        for (Complex z : p.coords) coords.push_back(pair(z));
        pts.push_back(ordered_json{{"coords", std::move(coords)}, {"residual", p.residual}});
    }
    doc["points"] = std::move(pts);
    ordered_json chars = ordered_json::object();
    for (Rank r = 0; r < spectrum.ctx->dim(); ++r) {
        ordered_json vals = ordered_json::array();
        for (const auto& p : spectrum.points) vals.push_back(pair(p.characters[r]));
        chars[format_parts(spectrum.ctx->at(r))] = std::move(vals);
    }
    doc["characters"] = std::move(chars);
    return doc.dump() + "\n";
}

CohomClass random_class(const GrassmannianPtr& ctx, std::mt19937_64& rng, Coeff lo, Coeff hi) {
    std::uniform_int_distribution<Coeff> coeff(lo, hi);
    CohomClass out(ctx);
    for (Rank r = 0; r < ctx->dim(); ++r) out.add_term(r, coeff(rng));
    return out;
}

std::vector<CohomClass> probe_classes(const GrassmannianPtr& ctx, std::size_t random_count, std::uint64_t seed) {
    std::vector<CohomClass> out;
    for (Rank r = 0; r < ctx->dim(); ++r) out.push_back(CohomClass::basis(ctx, r));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) out.push_back(random_class(ctx, rng));
    return out;
}

Report verify_conjugation(const SpectralData& spectrum, double tol) {
    Report rep = start("conjugation", spectrum);
    const Grassmannian& g = *spectrum.ctx;
    for (Rank a = 0; a < g.dim(); ++a) {
        const Rank b = g.rank(bar_involution(g, g.at(a)));
        for (std::size_t p = 0; p < spectrum.points.size(); ++p) {
            const Complex lhs = spectrum.points[p].characters[b];
            const Complex rhs = std::conj(spectrum.points[p].characters[a]);
            const double dev = std::abs(lhs - rhs);
            note_deviation(rep, dev);
            ++rep.checked;
            if (!(dev <= tol))
                rep.fail("bar" + label(g, a) + " at point " + std::to_string(p), fmt_complex(lhs), fmt_complex(rhs));
        }
    }
    return rep;
}

Report verify_conjugation(const GrassmannianPtr& ctx, std::uint64_t seed, double tol) {
    return verify_conjugation(joint_eigenbasis(ctx, seed), tol);
}

Report verify_point_conjugation(const SpectralData& spectrum, double tol) {
    Report rep = start("point_conjugation", spectrum);
    const auto& pts = spectrum.points;
    std::vector<int> hits(pts.size(), 0);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t q = 0; q < pts.size(); ++q) {
            double dist = 0;
            for (std::size_t i = 0; i < pts[p].coords.size(); ++i)
                dist = std::max(dist, std::abs(pts[q].coords[i] - std::conj(pts[p].coords[i])));
            if (dist < best_dist) {
                best_dist = dist;
                best = q;
            }
        }
        note_deviation(rep, best_dist);
        ++hits[best];
        ++rep.checked;
        if (!(best_dist <= tol))
            rep.fail("conj(point " + std::to_string(p) + ")", "nearest point at distance " + std::to_string(best_dist),
                     "<= " + std::to_string(tol));
    }
    for (std::size_t q = 0; q < pts.size(); ++q) {
        ++rep.checked;
        if (hits[q] != 1)
            rep.fail("point " + std::to_string(q), "hit " + std::to_string(hits[q]) + " times by conjugation", "1");
    }
    return rep;
}

Report verify_characters(const SpectralData& spectrum, double tol) {
    Report rep = start("characters", spectrum);
    const Grassmannian& g = *spectrum.ctx;
    ++rep.checked;
    if (spectrum.points.size() != g.dim())
        rep.fail("point count", std::to_string(spectrum.points.size()), std::to_string(g.dim()));
    for (std::size_t p = 0; p < spectrum.points.size(); ++p) {
        const SpectralPoint& pt = spectrum.points[p];
        const std::string where = "point " + std::to_string(p);
        ++rep.checked;
        if (!(pt.residual <= kResidualTol)) rep.fail(where + " residual", std::to_string(pt.residual), "<= 1e-8");
        const double unit_dev = std::abs(pt.characters[0] - 1.0);
        note_deviation(rep, unit_dev);
        ++rep.checked;
        if (!(unit_dev <= tol)) rep.fail(where + " chi(1)", fmt_complex(pt.characters[0]), "1");
    }
    for (const auto& [key, terms] : spectrum.table->entries) {
        CohomClass prod(spectrum.ctx);
        for (auto [r, c] : terms) prod.add_term(r, c);
        const std::vector<Complex> vals = evaluate(prod, spectrum);
        for (std::size_t p = 0; p < spectrum.points.size(); ++p) {
            const Complex expected = spectrum.points[p].characters[key.first] * spectrum.points[p].characters[key.second];
            const double dev = std::abs(vals[p] - expected);
            note_deviation(rep, dev);
            ++rep.checked;
            if (!(dev <= tol))
                rep.fail("chi(" + label(g, key.first) + "*" + label(g, key.second) + ") at point " + std::to_string(p),
                         fmt_complex(vals[p]), fmt_complex(expected));
        }
    }
    return rep;
}

namespace {

void sympos_into(Report& rep, const SpectralData& spectrum, const CohomClass& c, double tol) {
    const CohomClass prod = c * bar(c);
    const MultMatrix m = mult_matrix(prod, *spectrum.table);
    const std::string where = format_class(c);
    ++rep.checked;
    if (!m.is_symmetric()) rep.fail("phi(C*bar C) symmetric for C = " + where, "asymmetric", "symmetric");
    if (m.entries.rows() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries.cast<double>(), Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        note_deviation(rep, std::max(0.0, -min_eig));
        ++rep.checked;
        if (!(min_eig >= -tol))
            rep.fail("min eigenvalue of phi(C*bar C) for C = " + where, std::to_string(min_eig), ">= -tol");
    }
    const std::vector<Complex> vals = evaluate(prod, spectrum);
    for (std::size_t p = 0; p < vals.size(); ++p) {
        note_deviation(rep, std::max(std::abs(vals[p].imag()), -vals[p].real()));
        ++rep.checked;
        if (!(std::abs(vals[p].imag()) <= tol && vals[p].real() >= -tol))
            rep.fail("(C*bar C)(point " + std::to_string(p) + ") for C = " + where, fmt_complex(vals[p]),
                     "real and >= 0");
    }
}

}  // namespace

Report verify_sympos(const SpectralData& spectrum, const CohomClass& c, double tol) {
    Report rep = start("sympos", spectrum);
    sympos_into(rep, spectrum, c, tol);
    return rep;
}

Report verify_sympos(const SpectralData& spectrum, const std::vector<CohomClass>& classes, double tol) {
    Report rep = start("sympos", spectrum);
    for (const auto& c : classes) sympos_into(rep, spectrum, c, tol);
    return rep;
}

Report verify_vanishing(const SpectralData& spectrum, const std::vector<CohomClass>& classes, double tol) {
    Report rep = start("vanishing", spectrum);
    for (const auto& c : classes) {
        const std::vector<Complex> v = evaluate(c, spectrum);
        const std::vector<Complex> vb = evaluate(bar(c), spectrum);
        for (std::size_t p = 0; p < v.size(); ++p) {
            note_deviation(rep, std::abs(std::abs(v[p]) - std::abs(vb[p])));
            ++rep.checked;
            if ((std::abs(v[p]) < tol) != (std::abs(vb[p]) < tol))
                rep.fail(format_class(c) + " at point " + std::to_string(p), fmt_complex(v[p]), fmt_complex(vb[p]));
        }
    }
    return rep;
}

}  // namespace qgr
