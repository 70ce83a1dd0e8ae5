#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isotype/extnat.hpp"
#include "isotype/rational.hpp"

namespace isotype {

enum class Ordering { LT, EQ, GT };

std::string to_string(Ordering o);

// Symbolic description of a countable total order. The catalog: Fin(n)
// (finite chains), N (order type omega), Z (zeta), Q (eta), and lexicographic
// products lex(A, B) ordered by the left coordinate first.
class OrderExpr {
public:
    enum class Kind { Fin, Nat, Int, Rat, Lex };

    static OrderExpr fin(long long size);
    static OrderExpr nat();
    static OrderExpr integers();
    static OrderExpr rationals();
    static OrderExpr lex(OrderExpr left, OrderExpr right);

    Kind kind() const { return node_->kind; }
    long long fin_size() const;
    const OrderExpr& left() const;
    const OrderExpr& right() const;

    bool operator==(const OrderExpr& other) const;
    bool operator!=(const OrderExpr& other) const { return !(*this == other); }

private:
    struct Node {
        Kind kind;
        long long fin_size = 0;
        // Lex children wrapped as full OrderExpr values for cheap sharing.
        std::shared_ptr<const OrderExpr> lex_left, lex_right;
    };

    explicit OrderExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// A point of some catalog order: an integer (Fin/N/Z index or value), an
// exact rational (Q), or an ordered pair (lex products). Elements carry no
// reference to their order; every operation takes the OrderExpr explicitly.
// Rationals with denominator 1 normalize to the integer payload so that
// structural equality coincides with value equality.
class Element {
public:
    enum class Kind { Integer, Rational, Pair };

    Element() : payload_(static_cast<long long>(0)) {}

    static Element integer(long long value) { return Element(value); }
    static Element rational(Rational value);
    static Element pair(Element first, Element second);

    Kind kind() const;
    bool is_scalar() const { return kind() != Kind::Pair; }

    long long integer_value() const;
    const Rational& rational_value() const;
    // Numeric view of a scalar payload (integer widened to rational).
    Rational scalar_value() const;

    const Element& first() const;
    const Element& second() const;

    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

private:
    explicit Element(long long v) : payload_(v) {}

    struct PairNode;

    using Payload = std::variant<long long, Rational, std::shared_ptr<const PairNode>>;
    Payload payload_;
};

struct Element::PairNode {
    Element first, second;
};

// ---- Literals --------------------------------------------------------------

// Canonical literals: orders as "Fin(3)", "N", "Z", "Q", "lex(A,B)"; elements
// as "3", "-1/2", "(a,b)". Both round-trip through the parsers in parse.hpp.
std::string to_string(const OrderExpr& order);
std::string to_string(const Element& element);
std::string to_string(const std::vector<Element>& tuple);

// ---- Core operations -------------------------------------------------------

// True iff the element's shape (and Fin range) matches the order expression.
bool belongs(const OrderExpr& order, const Element& element);
// Throws ShapeError when the element does not belong to the order.
void require_belongs(const OrderExpr& order, const Element& element);

// Total-order comparison. Lex compares left coordinates first.
Ordering compare(const OrderExpr& order, const Element& x, const Element& y);

// Number of elements of the order, ∞ when infinite.
ExtNat cardinality(const OrderExpr& order);

// |{z : z > x}| and |{z : z < x}| in the given order.
ExtNat ray_above(const OrderExpr& order, const Element& x);
ExtNat ray_below(const OrderExpr& order, const Element& x);

// Exact size of the open interval (x, y); requires x < y.
ExtNat interval_size(const OrderExpr& order, const Element& x, const Element& y);

// 0 when x = y, otherwise one plus the open-interval size, saturating.
ExtNat dist(const OrderExpr& order, const Element& x, const Element& y);

// Structural classifiers over the catalog. For lex(A, B): an infinite right
// factor decides both answers; lex(A, Fin(1)) inherits from A; lex(A, Fin(n))
// with n >= 2 is never dense and is discrete exactly when A is.
bool is_dense(const OrderExpr& order);
bool is_discrete(const OrderExpr& order);

// ---- Canonical enumeration -------------------------------------------------
//
// Deterministic surjective enumeration, fixed once and for all so that
// brute-force oracles are reproducible bit for bit:
//   Fin(n), N : 0, 1, 2, ...
//   Z         : 0, 1, -1, 2, -2, ...           (zig-zag)
//   Q         : 0, then cw(k) and -cw(k) alternating, where cw is the
//               breadth-first Calkin-Wilf sequence 1, 1/2, 2, 1/3, 3/2, ...
//   lex(A,B)  : Cantor-style diagonals over the factor enumerations; the
//               diagonal s lists pairs with index sum s by ascending left
//               index, skipping cells that fall beyond a finite factor.

// Element at the given enumeration position; nullopt past the end of a
// finite carrier.
std::optional<Element> element_at(const OrderExpr& order, std::uint64_t index);

// First min(count, |order|) elements of the enumeration.
std::vector<Element> enumerate_prefix(const OrderExpr& order, std::uint64_t count);

// Position of an element in the canonical enumeration (inverse of
// element_at). Exact for arbitrarily deep elements, hence the big integer.
BigInt enum_index(const OrderExpr& order, const Element& element);

// ---- Navigation helpers ----------------------------------------------------
//
// Structural order-walking used by interval arithmetic oracles and the game
// engine's move generator. All are deterministic and total over the catalog;
// nullopt means the requested point does not exist.

std::optional<Element> minimum(const OrderExpr& order);
std::optional<Element> maximum(const OrderExpr& order);
std::optional<Element> successor(const OrderExpr& order, const Element& x);
std::optional<Element> predecessor(const OrderExpr& order, const Element& x);

// Element at distance exactly |delta| from x (above when delta > 0, below
// when delta < 0), obtained by repeated successor/predecessor steps.
std::optional<Element> advance(const OrderExpr& order, const Element& x, long long delta);

// Some element strictly above / below x; prefers staying inside the same
// lex class. For Q this is x + 1 (resp. x - 1).
std::optional<Element> pick_above(const OrderExpr& order, const Element& x);
std::optional<Element> pick_below(const OrderExpr& order, const Element& x);

// Some element strictly between x and y (requires x < y). For Q this is the
// Stern-Brocot mediant; for lex products it prefers a fresh class.
std::optional<Element> pick_between(const OrderExpr& order, const Element& x, const Element& y);

// Canonical element with dist(x, result) >= offset above (resp. below) x.
// Discrete directions land at distance exactly `offset`; dense directions
// shift the scalar by offset (distance ∞).
std::optional<Element> far_above(const OrderExpr& order, const Element& x, std::uint64_t offset);
std::optional<Element> far_below(const OrderExpr& order, const Element& x, std::uint64_t offset);

// Canonical element of the open interval (lo, hi) at distance >= min_dist
// from both endpoints, when the gap admits one.
std::optional<Element> deep_in_gap(const OrderExpr& order, const Element& lo, const Element& hi,
                                   std::uint64_t min_dist);

}  // namespace isotype
