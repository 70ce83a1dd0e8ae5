#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isotype/ordgroups.hpp"
#include "isotype/orders.hpp"
#include "isotype/rational.hpp"

namespace isotype {

// Truncated series over the rationals with exponents in the ordered group
// ⊕_A Q: a finite map from group exponents to nonzero rational coefficients,
// understood modulo exponents >= the precision cutoff. Field arithmetic is
// exact below the cutoff; every operation re-truncates.
class Series {
public:
    // Zero series with the given ambient index order and cutoff.
    Series(OrderExpr index_order, GroupElement precision);

    static Series constant(const OrderExpr& index_order, const GroupElement& precision,
                           const Rational& value);
    // coeff * x[index]^exponent
    static Series monomial(const OrderExpr& index_order, const GroupElement& precision,
                           const Element& index, const Rational& exponent, const Rational& coeff);
    static Series from_terms(OrderExpr index_order, GroupElement precision,
                             std::vector<std::pair<GroupElement, Rational>> terms);

    const OrderExpr& index_order() const { return index_order_; }
    const GroupElement& precision() const { return precision_; }
    // Ascending by exponent under the group order; coefficients nonzero;
    // exponents strictly below the precision cutoff.
    const std::vector<std::pair<GroupElement, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Series& other) const;
    bool operator!=(const Series& other) const { return !(*this == other); }

private:
    OrderExpr index_order_;
    std::vector<std::pair<GroupElement, Rational>> terms_;
    GroupElement precision_;
};

// Valuation: the minimal exponent of a nonzero series. Throws
// std::domain_error on the zero series (no sentinel is fabricated).
GroupElement val(const Series& f);
// Angular component: the coefficient at the minimal exponent.
Rational ang(const Series& f);
// Coefficient at the zero exponent (the image in the residue field for
// integral series).
Rational residue(const Series& f);

Series add(const Series& f, const Series& g);
Series neg(const Series& f);
Series sub(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);
Series scalar_mul(const Rational& scalar, const Series& f);
// Multiply by coeff * x^exponent; shifts the precision cutoff along.
Series mul_monomial(const Series& f, const GroupElement& exponent, const Rational& coeff);

// Inverse modulo precision via leading-term factorization and a geometric
// series: f = c x^γ (1 + u) with v(u) > 0 gives 1/f = c⁻¹ x^(-γ) Σ (-u)^k.
// The result carries precision p - 2γ. Throws std::domain_error on zero and
// when the geometric tail cannot cross the cutoff (exponents below the
// cutoff in infinitely many Archimedean classes — outside the finite-support
// model). The multiply-back identity is verified on every call.
Series invert(const Series& f);

// Polynomial with Series coefficients, ascending degree.
class SeriesPolynomial {
public:
    explicit SeriesPolynomial(std::vector<Series> coefficients);

    const std::vector<Series>& coefficients() const { return coefficients_; }
    std::size_t degree() const { return coefficients_.size() - 1; }

    Series eval(const Series& z) const;
    SeriesPolynomial derivative() const;
    // Polynomial over the residue field, ascending degree.
    std::vector<Rational> residue_coefficients() const;

private:
    std::vector<Series> coefficients_;
};

// Hensel lifting at finite precision: Newton iteration from a simple root r0
// of the residue polynomial, until the defect p(z) vanishes modulo the
// cutoff. Requires integral coefficients (v >= 0). The returned root z has
// residue(z) = r0 and v(p(z)) >= precision; both are verified on every call.
Series hensel_lift(const SeriesPolynomial& p, const Rational& r0);

// Order-preserving relabeling of a finite index list into another catalog
// order; strictly monotone by construction.
class SupportMap {
public:
    SupportMap(OrderExpr from_order, OrderExpr to_order,
               std::vector<std::pair<Element, Element>> pairs);

    const OrderExpr& from_order() const { return from_order_; }
    const OrderExpr& to_order() const { return to_order_; }
    const std::vector<std::pair<Element, Element>>& pairs() const { return pairs_; }

    // Image of an index; throws std::invalid_argument when not covered.
    Element apply(const Element& index) const;
    // Push a group exponent through the relabeling.
    GroupElement relabel(const GroupElement& exponent) const;

private:
    OrderExpr from_order_, to_order_;
    std::vector<std::pair<Element, Element>> pairs_;  // ascending in from_order
};

// Relabel every exponent's support through sigma; coefficients unchanged,
// precision relabeled. A valuation-preserving ring embedding.
Series substitute(const Series& f, const SupportMap& sigma);

// Quantifier-free ring term in variables u1..un with integer constants.
class RingTerm {
public:
    static RingTerm variable(std::size_t index);  // 0-based; prints as u<index+1>
    static RingTerm constant(long long value);
    static RingTerm add(RingTerm lhs, RingTerm rhs);
    static RingTerm sub(RingTerm lhs, RingTerm rhs);
    static RingTerm mul(RingTerm lhs, RingTerm rhs);
    static RingTerm negate(RingTerm operand);

    // Largest variable index referenced plus one (0 for constant terms).
    std::size_t arity() const;
    Series eval(const OrderExpr& index_order, const GroupElement& precision,
                const std::vector<Series>& args) const;
    std::string to_string() const;

private:
    enum class Op { Var, Const, Add, Sub, Mul, Neg };

    struct Node {
        Op op;
        std::size_t var_index = 0;
        long long constant = 0;
        std::shared_ptr<const Node> lhs, rhs;
    };

    explicit RingTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static std::string render(const Node& node, int parent_precedence);
    static Series eval_node(const Node& node, const OrderExpr& index_order,
                            const GroupElement& precision, const std::vector<Series>& args);
    static std::size_t arity_node(const Node& node);

    std::shared_ptr<const Node> node_;
};

// Outcome of the three Pas-language checks for one term: t(ξ) = 0 iff
// t(ζ) = 0; the valuation transported through sigma equals the valuation on
// the relabeled side; the angular components agree.
struct PasTermCheck {
    std::string term;
    bool both_zero = false;
    bool zero_agree = false;
    bool valuation_agrees = false;  // vacuously true for zero values
    bool angular_agrees = false;
    bool pass = false;
};

struct PasReport {
    std::vector<PasTermCheck> terms;
    // Pairwise order relations among the nonzero valuations agree on both
    // sides.
    bool valuation_relations_agree = true;
    bool pass = true;
};

// Evaluate every term on ξ and on ζ = substitute(ξ, sigma) and compare the
// three quantifier-free formula classes of the Pas language.
PasReport pas_check(const std::vector<RingTerm>& terms, const std::vector<Series>& xi,
                    const SupportMap& sigma);

// Canonical literal, e.g. "1 - 2*x[0]^{1/2}*x[1] + x[0]^2"; "0" when zero.
std::string to_string(const Series& f);

}  // namespace isotype
