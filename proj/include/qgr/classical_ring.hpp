#pragma once

// Integer cohomology classes and the classical ring H*(G(k,n), Z).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qgr/errors.hpp"
#include "qgr/partitions.hpp"

namespace qgr {

/// Finitely supported integer combination of Schubert classes.
/// Zero coefficients are never stored.
class CohomClass {
  public:
    using Terms = std::map<Rank, Coeff>;

    explicit CohomClass(GrassmannianPtr ctx) : ctx_(std::move(ctx)) {}

    static CohomClass zero(GrassmannianPtr ctx) { return CohomClass(std::move(ctx)); }
    static CohomClass basis(GrassmannianPtr ctx, Rank r, Coeff c = 1);
    static CohomClass of(GrassmannianPtr ctx, const BoxPartition& lambda, Coeff c = 1);
    static CohomClass unit(GrassmannianPtr ctx);

    const GrassmannianPtr& ctx() const { return ctx_; }
    const Grassmannian& grassmannian() const { return *ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(Rank r) const;

    /// Adds c to the coefficient of basis element r, pruning zeros.
    void add_term(Rank r, Coeff c);
    /// this += c * other.
    void add_scaled(const CohomClass& other, Coeff c);

    CohomClass& operator+=(const CohomClass& o);
    CohomClass& operator-=(const CohomClass& o);

    friend bool operator==(const CohomClass& a, const CohomClass& b) {
        return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
    }

  private:
    GrassmannianPtr ctx_;
    Terms terms_;
};

/// Throws ContextMismatch unless both classes live in the same G(k, n).
void require_same_ctx(const CohomClass& a, const CohomClass& b);

CohomClass class_add(const CohomClass& a, const CohomClass& b);
CohomClass class_scale(Coeff c, const CohomClass& a);
inline CohomClass operator+(const CohomClass& a, const CohomClass& b) { return class_add(a, b); }
inline CohomClass operator-(const CohomClass& a, const CohomClass& b) { return class_add(a, class_scale(-1, b)); }
inline CohomClass operator*(Coeff c, const CohomClass& a) { return class_scale(c, a); }

/// Applies a basis relabeling term-wise, keeping coefficients.
template <class F>
CohomClass map_basis(const CohomClass& a, F&& relabel) {
    CohomClass out(a.ctx());
    const Grassmannian& g = a.grassmannian();
    for (auto [r, c] : a.terms()) out.add_term(g.rank(relabel(g.at(r))), c);
    return out;
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu} for unrestricted
/// partitions, by counting LR tableaux of shape nu/lambda and content mu.
/// Returns 0 when |nu| != |lambda| + |mu| or lambda is not inside nu.
Coeff lr_coefficient(std::vector<int> lambda, std::vector<int> mu, std::vector<int> nu);

/// Classical cup product, truncated to the box.
CohomClass cup_product(const CohomClass& a, const CohomClass& b);

/// sigma_r cup S_lambda: horizontal strips of size r added inside the box.
/// Throws std::invalid_argument unless 0 <= r <= k.
CohomClass classical_pieri(const GrassmannianPtr& ctx, const BoxPartition& lambda, int r);

/// Poincare pairing: sum over T of coeff_A(T) * coeff_B(dual T).
Coeff pairing(const CohomClass& a, const CohomClass& b);

/// Sum of terms rendered in basis order: "(2) + (1,1)", "1" for the unit,
/// "0" for the zero class, "2*(1) - (2,1)" for general coefficients.
std::string format_class(const CohomClass& a);

/// Accepts either a single partition in partition text ("2,1", "", "[]")
/// or a signed sum of parenthesized terms ("2*(1) - (2,1) + ()").
CohomClass parse_class(const GrassmannianPtr& ctx, std::string_view text);

}  // namespace qgr
