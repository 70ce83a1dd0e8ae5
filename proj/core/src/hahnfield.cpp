#include "isotype/hahnfield.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "isotype/errors.hpp"

namespace isotype {

// ---- Series ----------------------------------------------------------------

Series::Series(OrderExpr index_order, GroupElement precision)
    : index_order_(std::move(index_order)), precision_(std::move(precision)) {
    if (precision_.index_order() != index_order_)
        throw std::invalid_argument("precision cutoff over a different index order");
}

Series Series::constant(const OrderExpr& index_order, const GroupElement& precision,
                        const Rational& value) {
    std::vector<std::pair<GroupElement, Rational>> terms;
    if (value != 0) terms.emplace_back(GroupElement(index_order), value);
    return from_terms(index_order, precision, std::move(terms));
}

Series Series::monomial(const OrderExpr& index_order, const GroupElement& precision,
                        const Element& index, const Rational& exponent, const Rational& coeff) {
    std::vector<std::pair<GroupElement, Rational>> terms;
    if (coeff != 0) {
        GroupElement expo(index_order, {{index, exponent}});
        terms.emplace_back(std::move(expo), coeff);
    }
    return from_terms(index_order, precision, std::move(terms));
}

Series Series::from_terms(OrderExpr index_order, GroupElement precision,
                          std::vector<std::pair<GroupElement, Rational>> terms) {
    Series out(std::move(index_order), std::move(precision));
    std::map<GroupElement, Rational, bool (*)(const GroupElement&, const GroupElement&)> bucket(
        [](const GroupElement& a, const GroupElement& b) {
            return compare(a, b) == Ordering::LT;
        });
    for (auto& [exponent, coeff] : terms) {
        if (exponent.index_order() != out.index_order_)
            throw std::invalid_argument("series term exponent over a different index order");
        if (coeff == 0) continue;
        if (compare(exponent, out.precision_) != Ordering::LT) continue;  // truncated away
        auto [it, inserted] = bucket.emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) bucket.erase(it);
        }
    }
    out.terms_.assign(bucket.begin(), bucket.end());
    return out;
}

bool Series::operator==(const Series& other) const {
    return index_order_ == other.index_order_ && precision_ == other.precision_ &&
           terms_ == other.terms_;
}

GroupElement val(const Series& f) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero series");
    return f.terms().front().first;
}

Rational ang(const Series& f) {
    if (f.is_zero()) throw std::domain_error("angular component of the zero series");
    return f.terms().front().second;
}

Rational residue(const Series& f) {
    GroupElement zero(f.index_order());
    for (const auto& [exponent, coeff] : f.terms()) {
        if (exponent == zero) return coeff;
        if (compare(exponent, zero) == Ordering::GT) break;
    }
    return Rational(0);
}

namespace {

void require_compatible(const Series& f, const Series& g) {
    if (f.index_order() != g.index_order())
        throw std::invalid_argument("series over different index orders");
}

GroupElement min_precision(const Series& f, const Series& g) {
    return compare(f.precision(), g.precision()) == Ordering::LT ? f.precision() : g.precision();
}

}  // namespace

Series add(const Series& f, const Series& g) {
    require_compatible(f, g);
    std::vector<std::pair<GroupElement, Rational>> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return Series::from_terms(f.index_order(), min_precision(f, g), std::move(terms));
}

Series neg(const Series& f) { return scalar_mul(Rational(-1), f); }

Series sub(const Series& f, const Series& g) { return add(f, neg(g)); }

Series mul(const Series& f, const Series& g) {
    require_compatible(f, g);
    std::vector<std::pair<GroupElement, Rational>> cross;
    cross.reserve(f.terms().size() * g.terms().size());
    for (const auto& [fe, fc] : f.terms()) {
        for (const auto& [ge, gc] : g.terms()) {
            cross.emplace_back(add(fe, ge), Rational(fc * gc));
        }
    }
    return Series::from_terms(f.index_order(), min_precision(f, g), std::move(cross));
}

Series scalar_mul(const Rational& scalar, const Series& f) {
    std::vector<std::pair<GroupElement, Rational>> terms;
    if (scalar != 0) {
        terms.reserve(f.terms().size());
        for (const auto& [exponent, coeff] : f.terms())
            terms.emplace_back(exponent, Rational(scalar * coeff));
    }
    return Series::from_terms(f.index_order(), f.precision(), std::move(terms));
}

Series mul_monomial(const Series& f, const GroupElement& exponent, const Rational& coeff) {
    std::vector<std::pair<GroupElement, Rational>> terms;
    terms.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) terms.emplace_back(add(e, exponent), Rational(coeff * c));
    return Series::from_terms(f.index_order(), add(f.precision(), exponent), std::move(terms));
}

Series invert(const Series& f) {
    if (f.is_zero()) throw std::domain_error("inverse of the zero series");
    const GroupElement gamma = val(f);
    const Rational c = ang(f);

    // 1 + u = f / (c x^γ), with v(u) > 0.
    Series unit = mul_monomial(f, neg(gamma), Rational(1) / c);
    Series one = Series::constant(f.index_order(), unit.precision(), Rational(1));
    Series u = sub(unit, one);

    // Geometric series Σ (-u)^k until the running power truncates to zero.
    Series acc = one;
    Series power = one;
    Series minus_u = neg(u);
    constexpr int kMaxTerms = 4096;
    int k = 0;
    while (!power.is_zero()) {
        if (++k > kMaxTerms)
            throw std::domain_error(
                "inverse support does not reach the precision cutoff (non-Archimedean tail)");
        power = mul(power, minus_u);
        acc = add(acc, power);
    }

    Series result = mul_monomial(acc, neg(gamma), Rational(1) / c);
    // Result precision p - 2γ; pin it explicitly (mul_monomial shifted by -γ
    // once starting from p - γ).
    Series check = mul(f, result);
    Series expected = Series::constant(f.index_order(), check.precision(), Rational(1));
    if (check != expected) throw std::logic_error("invert: multiply-back check failed");
    return result;
}

// ---- SeriesPolynomial / Hensel ----------------------------------------------

SeriesPolynomial::SeriesPolynomial(std::vector<Series> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("polynomial needs coefficients");
    for (const auto& c : coefficients_) {
        if (c.index_order() != coefficients_.front().index_order())
            throw std::invalid_argument("polynomial coefficients over different index orders");
    }
}

Series SeriesPolynomial::eval(const Series& z) const {
    Series acc = coefficients_.back();
    for (std::size_t i = coefficients_.size() - 1; i-- > 0;) {
        acc = add(mul(acc, z), coefficients_[i]);
    }
    return acc;
}

SeriesPolynomial SeriesPolynomial::derivative() const {
    if (coefficients_.size() == 1) {
        Series zero(coefficients_.front().index_order(), coefficients_.front().precision());
        return SeriesPolynomial({zero});
    }
    std::vector<Series> derived;
    derived.reserve(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        derived.push_back(scalar_mul(Rational(static_cast<long>(i)), coefficients_[i]));
    }
    return SeriesPolynomial(std::move(derived));
}

std::vector<Rational> SeriesPolynomial::residue_coefficients() const {
    std::vector<Rational> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) out.push_back(residue(c));
    return out;
}

namespace {

Rational eval_rational_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

std::vector<Rational> derive_rational_poly(const std::vector<Rational>& coeffs) {
    std::vector<Rational> out;
    if (coeffs.size() <= 1) return {Rational(0)};
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        out.push_back(coeffs[i] * Rational(static_cast<long>(i)));
    return out;
}

}  // namespace

Series hensel_lift(const SeriesPolynomial& p, const Rational& r0) {
    const OrderExpr& order = p.coefficients().front().index_order();
    GroupElement zero(order);
    GroupElement precision = p.coefficients().front().precision();
    for (const auto& c : p.coefficients()) {
        if (!c.is_zero() && compare(val(c), zero) == Ordering::LT)
            throw std::invalid_argument("hensel_lift requires integral coefficients (v >= 0)");
        if (compare(c.precision(), precision) == Ordering::LT) precision = c.precision();
    }

    std::vector<Rational> rbar = p.residue_coefficients();
    if (eval_rational_poly(rbar, r0) != 0)
        throw std::invalid_argument("r0 is not a root of the residue polynomial");
    if (eval_rational_poly(derive_rational_poly(rbar), r0) == 0)
        throw std::invalid_argument("r0 is not a simple residue root");

    SeriesPolynomial dp = p.derivative();
    Series z = Series::constant(order, precision, r0);
    constexpr int kMaxIterations = 64;
    for (int i = 0; i < kMaxIterations; ++i) {
        Series defect = p.eval(z);
        if (defect.is_zero()) {
            if (residue(z) != r0) throw std::logic_error("hensel_lift: residue drifted");
            return z;
        }
        z = sub(z, mul(defect, invert(dp.eval(z))));
    }
    throw std::runtime_error("hensel_lift: Newton iteration did not reach the cutoff");
}

// ---- SupportMap / substitute -------------------------------------------------

SupportMap::SupportMap(OrderExpr from_order, OrderExpr to_order,
                       std::vector<std::pair<Element, Element>> pairs)
    : from_order_(std::move(from_order)), to_order_(std::move(to_order)),
      pairs_(std::move(pairs)) {
    for (auto& [src, dst] : pairs_) {
        require_belongs(from_order_, src);
        require_belongs(to_order_, dst);
    }
    std::sort(pairs_.begin(), pairs_.end(), [this](const auto& a, const auto& b) {
        return compare(from_order_, a.first, b.first) == Ordering::LT;
    });
    for (std::size_t i = 1; i < pairs_.size(); ++i) {
        if (compare(from_order_, pairs_[i - 1].first, pairs_[i].first) != Ordering::LT)
            throw std::invalid_argument("support map sources must be distinct");
        if (compare(to_order_, pairs_[i - 1].second, pairs_[i].second) != Ordering::LT)
            throw std::invalid_argument("support map is not strictly monotone");
    }
}

Element SupportMap::apply(const Element& index) const {
    for (const auto& [src, dst] : pairs_) {
        if (src == index) return dst;
    }
    throw std::invalid_argument("support map does not cover index " + to_string(index));
}

GroupElement SupportMap::relabel(const GroupElement& exponent) const {
    if (exponent.index_order() != from_order_)
        throw std::invalid_argument("relabel: exponent over a different index order");
    std::vector<std::pair<Element, Rational>> entries;
    entries.reserve(exponent.support_size());
    for (const auto& [index, coeff] : exponent.entries())
        entries.emplace_back(apply(index), coeff);
    return GroupElement(to_order_, std::move(entries));
}

Series substitute(const Series& f, const SupportMap& sigma) {
    if (f.index_order() != sigma.from_order())
        throw std::invalid_argument("substitute: series over a different index order");
    std::vector<std::pair<GroupElement, Rational>> terms;
    terms.reserve(f.terms().size());
    for (const auto& [exponent, coeff] : f.terms())
        terms.emplace_back(sigma.relabel(exponent), coeff);
    return Series::from_terms(sigma.to_order(), sigma.relabel(f.precision()), std::move(terms));
}

// ---- RingTerm ----------------------------------------------------------------

RingTerm RingTerm::variable(std::size_t index) {
    auto node = std::make_shared<Node>();
    node->op = Op::Var;
    node->var_index = index;
    return RingTerm(std::move(node));
}

RingTerm RingTerm::constant(long long value) {
    auto node = std::make_shared<Node>();
    node->op = Op::Const;
    node->constant = value;
    return RingTerm(std::move(node));
}

RingTerm RingTerm::add(RingTerm lhs, RingTerm rhs) {
    auto node = std::make_shared<Node>();
    node->op = Op::Add;
    node->lhs = lhs.node_;
    node->rhs = rhs.node_;
    return RingTerm(std::move(node));
}

RingTerm RingTerm::sub(RingTerm lhs, RingTerm rhs) {
    auto node = std::make_shared<Node>();
    node->op = Op::Sub;
    node->lhs = lhs.node_;
    node->rhs = rhs.node_;
    return RingTerm(std::move(node));
}

RingTerm RingTerm::mul(RingTerm lhs, RingTerm rhs) {
    auto node = std::make_shared<Node>();
    node->op = Op::Mul;
    node->lhs = lhs.node_;
    node->rhs = rhs.node_;
    return RingTerm(std::move(node));
}

RingTerm RingTerm::negate(RingTerm operand) {
    auto node = std::make_shared<Node>();
    node->op = Op::Neg;
    node->lhs = operand.node_;
    return RingTerm(std::move(node));
}

std::size_t RingTerm::arity_node(const Node& node) {
    switch (node.op) {
        case Op::Var: return node.var_index + 1;
        case Op::Const: return 0;
        case Op::Neg: return arity_node(*node.lhs);
        default: return std::max(arity_node(*node.lhs), arity_node(*node.rhs));
    }
}

std::size_t RingTerm::arity() const { return arity_node(*node_); }

Series RingTerm::eval_node(const Node& node, const OrderExpr& index_order,
                           const GroupElement& precision, const std::vector<Series>& args) {
    switch (node.op) {
        case Op::Var:
            if (node.var_index >= args.size())
                throw std::invalid_argument("term references variable u" +
                                            std::to_string(node.var_index + 1) +
                                            " beyond the tuple");
            return args[node.var_index];
        case Op::Const:
            return Series::constant(index_order, precision, Rational(static_cast<long>(node.constant)));
        case Op::Add:
            return isotype::add(eval_node(*node.lhs, index_order, precision, args),
                                eval_node(*node.rhs, index_order, precision, args));
        case Op::Sub:
            return isotype::sub(eval_node(*node.lhs, index_order, precision, args),
                                eval_node(*node.rhs, index_order, precision, args));
        case Op::Mul:
            return isotype::mul(eval_node(*node.lhs, index_order, precision, args),
                                eval_node(*node.rhs, index_order, precision, args));
        case Op::Neg:
            return isotype::neg(eval_node(*node.lhs, index_order, precision, args));
    }
    throw std::logic_error("unreachable term op");
}

Series RingTerm::eval(const OrderExpr& index_order, const GroupElement& precision,
                      const std::vector<Series>& args) const {
    return eval_node(*node_, index_order, precision, args);
}

std::string RingTerm::render(const Node& node, int parent_precedence) {
    // precedence: add/sub 1, mul 2, neg 3, atoms 4
    switch (node.op) {
        case Op::Var: return "u" + std::to_string(node.var_index + 1);
        case Op::Const: return std::to_string(node.constant);
        case Op::Neg: {
            std::string inner = "-" + render(*node.lhs, 3);
            return parent_precedence > 2 ? "(" + inner + ")" : inner;
        }
        case Op::Mul: {
            std::string s = render(*node.lhs, 2) + "*" + render(*node.rhs, 2);
            return parent_precedence > 2 ? "(" + s + ")" : s;
        }
        case Op::Add:
        case Op::Sub: {
            std::string s = render(*node.lhs, 1) + (node.op == Op::Add ? " + " : " - ") +
                            render(*node.rhs, 2);
            return parent_precedence > 1 ? "(" + s + ")" : s;
        }
    }
    return "?";
}

std::string RingTerm::to_string() const { return render(*node_, 0); }

// ---- pas_check ---------------------------------------------------------------

PasReport pas_check(const std::vector<RingTerm>& terms, const std::vector<Series>& xi,
                    const SupportMap& sigma) {
    if (xi.empty()) throw std::invalid_argument("pas_check needs a nonempty tuple");
    const OrderExpr& order = xi.front().index_order();
    GroupElement precision = xi.front().precision();
    for (const auto& f : xi) {
        if (f.index_order() != order)
            throw std::invalid_argument("tuple entries over different index orders");
        if (compare(f.precision(), precision) == Ordering::LT) precision = f.precision();
    }

    std::vector<Series> zeta;
    zeta.reserve(xi.size());
    for (const auto& f : xi) zeta.push_back(substitute(f, sigma));
    GroupElement zeta_precision = sigma.relabel(precision);

    PasReport report;
    std::vector<std::optional<GroupElement>> vals_xi, vals_zeta;
    for (const auto& term : terms) {
        if (term.arity() > xi.size())
            throw std::invalid_argument("term " + term.to_string() + " references u" +
                                        std::to_string(term.arity()) + " beyond the tuple");
        PasTermCheck check;
        check.term = term.to_string();
        Series fx = term.eval(order, precision, xi);
        Series fz = term.eval(sigma.to_order(), zeta_precision, zeta);
        check.both_zero = fx.is_zero() && fz.is_zero();
        check.zero_agree = fx.is_zero() == fz.is_zero();
        if (fx.is_zero() || fz.is_zero()) {
            check.valuation_agrees = check.zero_agree;
            check.angular_agrees = check.zero_agree;
            vals_xi.push_back(std::nullopt);
            vals_zeta.push_back(std::nullopt);
        } else {
            check.valuation_agrees = sigma.relabel(val(fx)) == val(fz);
            check.angular_agrees = ang(fx) == ang(fz);
            vals_xi.push_back(val(fx));
            vals_zeta.push_back(val(fz));
        }
        check.pass = check.zero_agree && check.valuation_agrees && check.angular_agrees;
        report.pass = report.pass && check.pass;
        report.terms.push_back(std::move(check));
    }

    for (std::size_t i = 0; i < vals_xi.size(); ++i) {
        for (std::size_t j = i + 1; j < vals_xi.size(); ++j) {
            if (!vals_xi[i] || !vals_xi[j] || !vals_zeta[i] || !vals_zeta[j]) continue;
            if (compare(*vals_xi[i], *vals_xi[j]) != compare(*vals_zeta[i], *vals_zeta[j])) {
                report.valuation_relations_agree = false;
            }
        }
    }
    report.pass = report.pass && report.valuation_relations_agree;
    return report;
}

// ---- literal -----------------------------------------------------------------

namespace {

std::string term_to_string(const GroupElement& exponent, const Rational& coeff,
                           bool leading) {
    Rational c = coeff;
    std::string out;
    if (!leading) {
        out += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
    } else if (c < 0) {
        out += "-";
        c = -c;
    }
    if (exponent.is_zero()) {
        out += rational_to_string(c);
        return out;
    }
    bool wrote_factor = false;
    if (c != 1) {
        out += rational_to_string(c);
        wrote_factor = true;
    }
    for (const auto& [index, power] : exponent.entries()) {
        if (wrote_factor) out += "*";
        out += "x[" + to_string(index) + "]";
        if (power != 1) {
            if (is_integral(power) && power > 0) {
                out += "^" + rational_to_string(power);
            } else {
                out += "^{" + rational_to_string(power) + "}";
            }
        }
        wrote_factor = true;
    }
    return out;
}

}  // namespace

std::string to_string(const Series& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [exponent, coeff] : f.terms()) {
        out += term_to_string(exponent, coeff, leading);
        leading = false;
    }
    return out;
}

}  // namespace isotype
