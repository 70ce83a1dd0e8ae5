#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isotype/orders.hpp"
#include "isotype/rational.hpp"

namespace isotype {

enum class Sign { NEG, ZERO, POS };

std::string to_string(Sign s);

// Element of the ordered abelian group ⊕_{a∈A} Q for a catalog index order A:
// a finite support map from indices to nonzero rationals, ordered
// lexicographically (the sign is the sign of the coefficient at the highest
// supported index). Exact rational arithmetic throughout.
class GroupElement {
public:
    // Zero element over the given index order.
    explicit GroupElement(OrderExpr index_order);
    // From (index, coefficient) pairs; zero coefficients are dropped,
    // repeated indices accumulate.
    GroupElement(OrderExpr index_order, std::vector<std::pair<Element, Rational>> entries);

    const OrderExpr& index_order() const { return index_order_; }
    // Support entries, ascending by index; all coefficients nonzero.
    const std::vector<std::pair<Element, Rational>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    // Coefficient at an index (0 when absent).
    Rational coefficient(const Element& index) const;

    bool operator==(const GroupElement& other) const;
    bool operator!=(const GroupElement& other) const { return !(*this == other); }

private:
    OrderExpr index_order_;
    std::vector<std::pair<Element, Rational>> entries_;
};

GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement neg(const GroupElement& g);
GroupElement sub(const GroupElement& g, const GroupElement& h);
GroupElement scalar_mul(const Rational& scalar, const GroupElement& g);

// POS iff the coefficient at the maximal support index is positive.
Sign sign(const GroupElement& g);
Ordering compare(const GroupElement& g, const GroupElement& h);
GroupElement abs(const GroupElement& g);

// Archimedean equivalence, decided symbolically: nonzero elements are
// equivalent iff their maximal support indices coincide; zero only pairs
// with zero. The defining existential over n is discharged by lexicographic
// dominance (validated against bounded brute force in the test suite).
bool arch_equiv(const GroupElement& g, const GroupElement& h);

// Maximal support index of a nonzero element; throws std::domain_error on
// zero.
Element arch_class(const GroupElement& g);

// The order inherited by the set of Archimedean classes of ⊕_A Q is A
// itself.
OrderExpr arch_classes_order(const OrderExpr& index_order);

// Literal "{idx:coeff, ...}" with entries ascending by index; "{}" is zero.
std::string to_string(const GroupElement& g);

}  // namespace isotype
