#include "isotype/ordgroups.hpp"

#include <algorithm>
#include <stdexcept>

#include "isotype/errors.hpp"

namespace isotype {

std::string to_string(Sign s) {
    switch (s) {
        case Sign::NEG: return "NEG";
        case Sign::ZERO: return "ZERO";
        case Sign::POS: return "POS";
    }
    return "?";
}

GroupElement::GroupElement(OrderExpr index_order) : index_order_(std::move(index_order)) {}

GroupElement::GroupElement(OrderExpr index_order,
                           std::vector<std::pair<Element, Rational>> entries)
    : index_order_(std::move(index_order)) {
    for (auto& [index, coeff] : entries) require_belongs(index_order_, index);
    std::stable_sort(entries.begin(), entries.end(), [this](const auto& a, const auto& b) {
        return compare(index_order_, a.first, b.first) == Ordering::LT;
    });
    for (auto& [index, coeff] : entries) {
        if (!entries_.empty() && entries_.back().first == index) {
            entries_.back().second += coeff;
            if (entries_.back().second == 0) entries_.pop_back();
        } else if (coeff != 0) {
            entries_.emplace_back(index, coeff);
        }
    }
}

Rational GroupElement::coefficient(const Element& index) const {
    for (const auto& [idx, coeff] : entries_) {
        if (idx == index) return coeff;
    }
    return Rational(0);
}

bool GroupElement::operator==(const GroupElement& other) const {
    return index_order_ == other.index_order_ && entries_ == other.entries_;
}

namespace {

void require_same_order(const GroupElement& g, const GroupElement& h) {
    if (g.index_order() != h.index_order()) {
        throw std::invalid_argument("group elements over different index orders: " +
                                    to_string(g.index_order()) + " vs " +
                                    to_string(h.index_order()));
    }
}

}  // namespace

GroupElement add(const GroupElement& g, const GroupElement& h) {
    require_same_order(g, h);
    const OrderExpr& order = g.index_order();
    std::vector<std::pair<Element, Rational>> merged;
    merged.reserve(g.support_size() + h.support_size());
    auto gi = g.entries().begin(), ge = g.entries().end();
    auto hi = h.entries().begin(), he = h.entries().end();
    while (gi != ge || hi != he) {
        if (hi == he) {
            merged.push_back(*gi++);
        } else if (gi == ge) {
            merged.push_back(*hi++);
        } else {
            switch (compare(order, gi->first, hi->first)) {
                case Ordering::LT: merged.push_back(*gi++); break;
                case Ordering::GT: merged.push_back(*hi++); break;
                case Ordering::EQ: {
                    Rational sum = gi->second + hi->second;
                    if (sum != 0) merged.emplace_back(gi->first, sum);
                    ++gi, ++hi;
                    break;
                }
            }
        }
    }
    GroupElement result(order);
    // merged is already sorted with nonzero coefficients; reuse the
    // normalizing constructor for safety on the cheap path.
    return GroupElement(order, std::move(merged));
}

GroupElement neg(const GroupElement& g) {
    std::vector<std::pair<Element, Rational>> flipped;
    flipped.reserve(g.support_size());
    for (const auto& [index, coeff] : g.entries()) flipped.emplace_back(index, Rational(-coeff));
    return GroupElement(g.index_order(), std::move(flipped));
}

GroupElement sub(const GroupElement& g, const GroupElement& h) { return add(g, neg(h)); }

GroupElement scalar_mul(const Rational& scalar, const GroupElement& g) {
    std::vector<std::pair<Element, Rational>> scaled;
    if (scalar != 0) {
        scaled.reserve(g.support_size());
        for (const auto& [index, coeff] : g.entries())
            scaled.emplace_back(index, Rational(scalar * coeff));
    }
    return GroupElement(g.index_order(), std::move(scaled));
}

Sign sign(const GroupElement& g) {
    if (g.is_zero()) return Sign::ZERO;
    return g.entries().back().second > 0 ? Sign::POS : Sign::NEG;
}

Ordering compare(const GroupElement& g, const GroupElement& h) {
    switch (sign(sub(g, h))) {
        case Sign::NEG: return Ordering::LT;
        case Sign::ZERO: return Ordering::EQ;
        case Sign::POS: return Ordering::GT;
    }
    return Ordering::EQ;
}

GroupElement abs(const GroupElement& g) { return sign(g) == Sign::NEG ? neg(g) : g; }

bool arch_equiv(const GroupElement& g, const GroupElement& h) {
    require_same_order(g, h);
    if (g.is_zero() || h.is_zero()) return g.is_zero() == h.is_zero();
    return g.entries().back().first == h.entries().back().first;
}

Element arch_class(const GroupElement& g) {
    if (g.is_zero()) throw std::domain_error("arch_class of the zero element");
    return g.entries().back().first;
}

OrderExpr arch_classes_order(const OrderExpr& index_order) { return index_order; }

std::string to_string(const GroupElement& g) {
    std::string out = "{";
    bool first = true;
    for (const auto& [index, coeff] : g.entries()) {
        if (!first) out += ", ";
        first = false;
        out += to_string(index) + ":" + rational_to_string(coeff);
    }
    out += "}";
    return out;
}

}  // namespace isotype
