#include "isotype/orders.hpp"

#include <algorithm>
#include <stdexcept>

#include "isotype/errors.hpp"

namespace isotype {

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

// ---- OrderExpr -------------------------------------------------------------

OrderExpr OrderExpr::fin(long long size) {
    if (size < 1) throw std::invalid_argument("Fin(n) requires n >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Fin;
    node->fin_size = size;
    return OrderExpr(std::move(node));
}

OrderExpr OrderExpr::nat() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Nat;
    return OrderExpr(std::move(node));
}

OrderExpr OrderExpr::integers() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Int;
    return OrderExpr(std::move(node));
}

OrderExpr OrderExpr::rationals() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Rat;
    return OrderExpr(std::move(node));
}

OrderExpr OrderExpr::lex(OrderExpr left, OrderExpr right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Lex;
    node->lex_left = std::make_shared<const OrderExpr>(std::move(left));
    node->lex_right = std::make_shared<const OrderExpr>(std::move(right));
    return OrderExpr(std::move(node));
}

long long OrderExpr::fin_size() const {
    if (kind() != Kind::Fin) throw std::logic_error("fin_size() on non-Fin order");
    return node_->fin_size;
}

const OrderExpr& OrderExpr::left() const {
    if (kind() != Kind::Lex) throw std::logic_error("left() on non-Lex order");
    return *node_->lex_left;
}

const OrderExpr& OrderExpr::right() const {
    if (kind() != Kind::Lex) throw std::logic_error("right() on non-Lex order");
    return *node_->lex_right;
}

bool OrderExpr::operator==(const OrderExpr& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::Fin: return fin_size() == other.fin_size();
        case Kind::Lex: return left() == other.left() && right() == other.right();
        default: return true;
    }
}

// ---- Element ---------------------------------------------------------------

Element Element::rational(Rational value) {
    value.canonicalize();
    if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
        return Element(static_cast<long long>(value.get_num().get_si()));
    }
    Element e;
    e.payload_ = std::move(value);
    return e;
}

Element Element::pair(Element first, Element second) {
    Element e;
    e.payload_ = std::make_shared<const PairNode>(PairNode{std::move(first), std::move(second)});
    return e;
}

Element::Kind Element::kind() const {
    switch (payload_.index()) {
        case 0: return Kind::Integer;
        case 1: return Kind::Rational;
        default: return Kind::Pair;
    }
}

long long Element::integer_value() const {
    if (kind() != Kind::Integer) throw ShapeError("element is not an integer");
    return std::get<long long>(payload_);
}

const Rational& Element::rational_value() const {
    if (kind() != Kind::Rational) throw ShapeError("element is not a (non-integral) rational");
    return std::get<Rational>(payload_);
}

Rational Element::scalar_value() const {
    switch (kind()) {
        case Kind::Integer: return Rational(static_cast<long>(std::get<long long>(payload_)));
        case Kind::Rational: return std::get<Rational>(payload_);
        default: throw ShapeError("element is a pair, not a scalar");
    }
}

const Element& Element::first() const {
    if (kind() != Kind::Pair) throw ShapeError("element is not a pair");
    return std::get<std::shared_ptr<const PairNode>>(payload_)->first;
}

const Element& Element::second() const {
    if (kind() != Kind::Pair) throw ShapeError("element is not a pair");
    return std::get<std::shared_ptr<const PairNode>>(payload_)->second;
}

bool Element::operator==(const Element& other) const {
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::Integer: return integer_value() == other.integer_value();
        case Kind::Rational: return rational_value() == other.rational_value();
        default: return first() == other.first() && second() == other.second();
    }
}

// ---- Literals --------------------------------------------------------------

std::string to_string(const OrderExpr& order) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin: return "Fin(" + std::to_string(order.fin_size()) + ")";
        case OrderExpr::Kind::Nat: return "N";
        case OrderExpr::Kind::Int: return "Z";
        case OrderExpr::Kind::Rat: return "Q";
        case OrderExpr::Kind::Lex:
            return "lex(" + to_string(order.left()) + "," + to_string(order.right()) + ")";
    }
    return "?";
}

std::string to_string(const Element& element) {
    switch (element.kind()) {
        case Element::Kind::Integer: return std::to_string(element.integer_value());
        case Element::Kind::Rational: return rational_to_string(element.rational_value());
        case Element::Kind::Pair:
            return "(" + to_string(element.first()) + "," + to_string(element.second()) + ")";
    }
    return "?";
}

std::string to_string(const std::vector<Element>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += to_string(tuple[i]);
    }
    out += ")";
    return out;
}

// ---- belongs / compare -----------------------------------------------------

bool belongs(const OrderExpr& order, const Element& element) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
            return element.kind() == Element::Kind::Integer && element.integer_value() >= 0 &&
                   element.integer_value() < order.fin_size();
        case OrderExpr::Kind::Nat:
            return element.kind() == Element::Kind::Integer && element.integer_value() >= 0;
        case OrderExpr::Kind::Int: return element.kind() == Element::Kind::Integer;
        case OrderExpr::Kind::Rat: return element.is_scalar();
        case OrderExpr::Kind::Lex:
            return element.kind() == Element::Kind::Pair &&
                   belongs(order.left(), element.first()) &&
                   belongs(order.right(), element.second());
    }
    return false;
}

void require_belongs(const OrderExpr& order, const Element& element) {
    if (!belongs(order, element)) {
        throw ShapeError("element " + to_string(element) + " does not belong to " +
                         to_string(order));
    }
}

namespace {

Ordering compare_scalar(const Element& x, const Element& y) {
    if (x.kind() == Element::Kind::Integer && y.kind() == Element::Kind::Integer) {
        long long a = x.integer_value(), b = y.integer_value();
        return a < b ? Ordering::LT : a == b ? Ordering::EQ : Ordering::GT;
    }
    int c = cmp(x.scalar_value(), y.scalar_value());
    return c < 0 ? Ordering::LT : c == 0 ? Ordering::EQ : Ordering::GT;
}

}  // namespace

Ordering compare(const OrderExpr& order, const Element& x, const Element& y) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int:
            if (x.kind() != Element::Kind::Integer || y.kind() != Element::Kind::Integer)
                throw ShapeError("integer order compared with non-integer element");
            return compare_scalar(x, y);
        case OrderExpr::Kind::Rat:
            if (!x.is_scalar() || !y.is_scalar())
                throw ShapeError("Q compared with non-scalar element");
            return compare_scalar(x, y);
        case OrderExpr::Kind::Lex: {
            Ordering leftcmp = compare(order.left(), x.first(), y.first());
            if (leftcmp != Ordering::EQ) return leftcmp;
            return compare(order.right(), x.second(), y.second());
        }
    }
    throw std::logic_error("unreachable order kind");
}

// ---- cardinality / rays / interval / dist ----------------------------------

ExtNat cardinality(const OrderExpr& order) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin: return ExtNat::of(static_cast<std::uint64_t>(order.fin_size()));
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int:
        case OrderExpr::Kind::Rat: return ExtNat::infinity();
        case OrderExpr::Kind::Lex: return cardinality(order.left()) * cardinality(order.right());
    }
    throw std::logic_error("unreachable order kind");
}

ExtNat ray_above(const OrderExpr& order, const Element& x) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
            return ExtNat::of(static_cast<std::uint64_t>(order.fin_size() - 1 - x.integer_value()));
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int:
        case OrderExpr::Kind::Rat: return ExtNat::infinity();
        case OrderExpr::Kind::Lex:
            return ray_above(order.right(), x.second()) +
                   ray_above(order.left(), x.first()) * cardinality(order.right());
    }
    throw std::logic_error("unreachable order kind");
}

ExtNat ray_below(const OrderExpr& order, const Element& x) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
            return ExtNat::of(static_cast<std::uint64_t>(x.integer_value()));
        case OrderExpr::Kind::Int:
        case OrderExpr::Kind::Rat: return ExtNat::infinity();
        case OrderExpr::Kind::Lex:
            return ray_below(order.right(), x.second()) +
                   ray_below(order.left(), x.first()) * cardinality(order.right());
    }
    throw std::logic_error("unreachable order kind");
}

ExtNat interval_size(const OrderExpr& order, const Element& x, const Element& y) {
    if (compare(order, x, y) != Ordering::LT)
        throw std::invalid_argument("interval_size requires x < y");
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int:
            return ExtNat::of(
                static_cast<std::uint64_t>(y.integer_value() - x.integer_value() - 1));
        case OrderExpr::Kind::Rat: return ExtNat::infinity();
        case OrderExpr::Kind::Lex: break;
    }
    // Lex(A, B), x = (a,b), y = (a',b'). Same class reduces to B; otherwise
    // count the tail of b's class, the full classes strictly between, and the
    // head of b''s class. 0 · ∞ = 0 keeps the middle term correct for
    // adjacent classes.
    if (compare(order.left(), x.first(), y.first()) == Ordering::EQ) {
        return interval_size(order.right(), x.second(), y.second());
    }
    return ray_above(order.right(), x.second()) +
           interval_size(order.left(), x.first(), y.first()) * cardinality(order.right()) +
           ray_below(order.right(), y.second());
}

ExtNat dist(const OrderExpr& order, const Element& x, const Element& y) {
    Ordering c = compare(order, x, y);
    if (c == Ordering::EQ) return ExtNat();
    const Element& lo = (c == Ordering::LT) ? x : y;
    const Element& hi = (c == Ordering::LT) ? y : x;
    return interval_size(order, lo, hi) + ExtNat::of(1);
}

// ---- density classifiers ---------------------------------------------------

bool is_dense(const OrderExpr& order) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin: return order.fin_size() == 1;  // vacuously
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return false;
        case OrderExpr::Kind::Rat: return true;
        case OrderExpr::Kind::Lex: {
            const OrderExpr& b = order.right();
            if (b.kind() == OrderExpr::Kind::Fin) {
                return b.fin_size() == 1 && is_dense(order.left());
            }
            return is_dense(b);
        }
    }
    return false;
}

bool is_discrete(const OrderExpr& order) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return true;
        case OrderExpr::Kind::Rat: return false;
        case OrderExpr::Kind::Lex: {
            const OrderExpr& b = order.right();
            if (b.kind() == OrderExpr::Kind::Fin) {
                // lex(A, Fin(1)) is A; a longer finite block chains the
                // classes, so either way discreteness is A's.
                return is_discrete(order.left());
            }
            return is_discrete(b);
        }
    }
    return false;
}

// ---- canonical enumeration -------------------------------------------------

namespace {

// zig-zag over Z: 0, 1, -1, 2, -2, ...
long long zigzag_value(std::uint64_t index) {
    if (index == 0) return 0;
    if (index % 2 == 1) return static_cast<long long>((index + 1) / 2);
    return -static_cast<long long>(index / 2);
}

BigInt zigzag_index(long long value) {
    if (value == 0) return 0;
    if (value > 0) return BigInt(static_cast<long>(2 * value - 1));
    return BigInt(static_cast<long>(-2 * value));
}

// k-th positive rational in Calkin-Wilf breadth-first order, k from 0.
Rational calkin_wilf_value(std::uint64_t k) {
    // Heap position k+1 in binary (below the leading 1) spells the root-down
    // path: 0 -> left child p/(p+q), 1 -> right child (p+q)/q.
    std::uint64_t h = k + 1;
    int bits = 63;
    while (bits >= 0 && ((h >> bits) & 1) == 0) --bits;
    BigInt p = 1, q = 1;
    for (int i = bits - 1; i >= 0; --i) {
        if ((h >> i) & 1) {
            p += q;
        } else {
            q += p;
        }
    }
    return Rational(p, q);
}

// Heap position of the reduced positive rational p/q in the Calkin-Wilf
// tree, folded run by run so huge continued-fraction coefficients cost one
// big-integer shift each.
BigInt calkin_wilf_index(const Rational& value) {
    BigInt p = value.get_num(), q = value.get_den();
    // Leaf-to-root runs: while p != q, a block of identical steps whose
    // length is the integer quotient.
    std::vector<std::pair<int, BigInt>> runs;  // (bit, length), leaf to root
    while (p != q) {
        if (p > q) {
            BigInt steps = p / q;
            if (p % q == 0) steps -= 1;  // stop at (q, q) = root scale
            runs.emplace_back(1, steps);
            p -= steps * q;
        } else {
            BigInt steps = q / p;
            if (q % p == 0) steps -= 1;
            runs.emplace_back(0, steps);
            q -= steps * p;
        }
    }
    BigInt h = 1;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        // Applying `len` identical steps b: h -> h * 2^len + b * (2^len - 1).
        unsigned long len = it->second.get_ui();
        BigInt shifted = h << len;
        if (it->first == 1) shifted += (BigInt(1) << len) - 1;
        h = shifted;
    }
    return h - 1;
}

Rational rational_value_at(std::uint64_t index) {
    if (index == 0) return Rational(0);
    Rational cw = calkin_wilf_value((index - 1) / 2);
    return (index % 2 == 1) ? cw : Rational(-cw);
}

BigInt rational_index(const Rational& value) {
    if (value == 0) return 0;
    BigInt k = calkin_wilf_index(value > 0 ? value : Rational(-value));
    return value > 0 ? 2 * k + 1 : 2 * k + 2;
}

// Number of valid cells on diagonal t for factor sizes (na, nb); nullopt
// size means infinite.
BigInt diagonal_count(const BigInt& t, const std::optional<BigInt>& na,
                      const std::optional<BigInt>& nb) {
    BigInt lo = 0;
    if (nb && t > *nb - 1) lo = t - (*nb - 1);
    BigInt hi = t;
    if (na && t > *na - 1) hi = *na - 1;
    if (hi < lo) return 0;
    return hi - lo + 1;
}

std::optional<BigInt> order_size(const OrderExpr& order) {
    ExtNat card = cardinality(order);
    if (card.is_infinite()) return std::nullopt;
    return BigInt(static_cast<unsigned long>(card.value()));
}

// Cells on diagonals 0..s-1. Closed form when at most one factor is finite;
// small loop otherwise (both finite only happens for Fin x Fin).
BigInt diagonals_before(const BigInt& s, const std::optional<BigInt>& na,
                        const std::optional<BigInt>& nb) {
    if (!na && !nb) return s * (s + 1) / 2;
    if (na && nb) {
        BigInt total = 0;
        for (BigInt t = 0; t < s; ++t) total += diagonal_count(t, na, nb);
        return total;
    }
    const BigInt& m = na ? *na : *nb;  // min(t+1, m) cells on diagonal t
    if (s <= m) return s * (s + 1) / 2;
    return m * (m + 1) / 2 + (s - m) * m;
}

}  // namespace

std::optional<Element> element_at(const OrderExpr& order, std::uint64_t index) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
            if (index >= static_cast<std::uint64_t>(order.fin_size())) return std::nullopt;
            return Element::integer(static_cast<long long>(index));
        case OrderExpr::Kind::Nat: return Element::integer(static_cast<long long>(index));
        case OrderExpr::Kind::Int: return Element::integer(zigzag_value(index));
        case OrderExpr::Kind::Rat: return Element::rational(rational_value_at(index));
        case OrderExpr::Kind::Lex: {
            auto na = order_size(order.left());
            auto nb = order_size(order.right());
            BigInt remaining(static_cast<unsigned long>(index));
            for (BigInt s = 0;; ++s) {
                if (na && nb && s > *na + *nb - 2) return std::nullopt;
                BigInt count = diagonal_count(s, na, nb);
                if (remaining < count) {
                    BigInt lo = 0;
                    if (nb && s > *nb - 1) lo = s - (*nb - 1);
                    BigInt i = lo + remaining;
                    BigInt j = s - i;
                    auto leftElem = element_at(order.left(), i.get_ui());
                    auto rightElem = element_at(order.right(), j.get_ui());
                    return Element::pair(*leftElem, *rightElem);
                }
                remaining -= count;
            }
        }
    }
    return std::nullopt;
}

std::vector<Element> enumerate_prefix(const OrderExpr& order, std::uint64_t count) {
    std::vector<Element> out;
    out.reserve(count);
    if (order.kind() != OrderExpr::Kind::Lex) {
        for (std::uint64_t i = 0; i < count; ++i) {
            auto e = element_at(order, i);
            if (!e) break;
            out.push_back(std::move(*e));
        }
        return out;
    }

    // Walk the diagonals once, extending the factor prefixes lazily; this
    // keeps long prefixes linear instead of random-accessing every cell.
    auto na = order_size(order.left());
    auto nb = order_size(order.right());
    std::vector<Element> left = enumerate_prefix(order.left(), 1);
    std::vector<Element> right = enumerate_prefix(order.right(), 1);
    for (std::uint64_t s = 0; out.size() < count; ++s) {
        if (na && nb && BigInt(static_cast<unsigned long>(s)) > *na + *nb - 2) break;
        std::uint64_t lo = 0;
        if (nb && BigInt(static_cast<unsigned long>(s)) > *nb - 1)
            lo = s - static_cast<std::uint64_t>(nb->get_ui() - 1);
        std::uint64_t hi = s;
        if (na && BigInt(static_cast<unsigned long>(s)) > *na - 1)
            hi = static_cast<std::uint64_t>(na->get_ui() - 1);
        if (hi + 1 > left.size() && (!na || left.size() < na->get_ui()))
            left = enumerate_prefix(order.left(), hi + 1);
        if (s - lo + 1 > right.size() && (!nb || right.size() < nb->get_ui()))
            right = enumerate_prefix(order.right(), s - lo + 1);
        for (std::uint64_t i = lo; i <= hi && out.size() < count; ++i) {
            out.push_back(Element::pair(left[i], right[s - i]));
        }
    }
    return out;
}

BigInt enum_index(const OrderExpr& order, const Element& element) {
    require_belongs(order, element);
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat: return BigInt(static_cast<long>(element.integer_value()));
        case OrderExpr::Kind::Int: return zigzag_index(element.integer_value());
        case OrderExpr::Kind::Rat: return rational_index(element.scalar_value());
        case OrderExpr::Kind::Lex: {
            BigInt i = enum_index(order.left(), element.first());
            BigInt j = enum_index(order.right(), element.second());
            auto na = order_size(order.left());
            auto nb = order_size(order.right());
            BigInt s = i + j;
            BigInt lo = 0;
            if (nb && s > *nb - 1) lo = s - (*nb - 1);
            return diagonals_before(s, na, nb) + (i - lo);
        }
    }
    throw std::logic_error("unreachable order kind");
}

// ---- navigation ------------------------------------------------------------

std::optional<Element> minimum(const OrderExpr& order) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat: return Element::integer(0);
        case OrderExpr::Kind::Int:
        case OrderExpr::Kind::Rat: return std::nullopt;
        case OrderExpr::Kind::Lex: {
            auto a = minimum(order.left());
            auto b = minimum(order.right());
            if (a && b) return Element::pair(*a, *b);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Element> maximum(const OrderExpr& order) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin: return Element::integer(order.fin_size() - 1);
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int:
        case OrderExpr::Kind::Rat: return std::nullopt;
        case OrderExpr::Kind::Lex: {
            auto a = maximum(order.left());
            auto b = maximum(order.right());
            if (a && b) return Element::pair(*a, *b);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Element> successor(const OrderExpr& order, const Element& x) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
            if (x.integer_value() + 1 >= order.fin_size()) return std::nullopt;
            return Element::integer(x.integer_value() + 1);
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return Element::integer(x.integer_value() + 1);
        case OrderExpr::Kind::Rat: return std::nullopt;
        case OrderExpr::Kind::Lex: {
            if (auto s = successor(order.right(), x.second()))
                return Element::pair(x.first(), *s);
            // End of the class: the next class must exist and B must have a
            // least element.
            auto nextClass = successor(order.left(), x.first());
            auto bottom = minimum(order.right());
            if (nextClass && bottom) return Element::pair(*nextClass, *bottom);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Element> predecessor(const OrderExpr& order, const Element& x) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
            if (x.integer_value() == 0) return std::nullopt;
            return Element::integer(x.integer_value() - 1);
        case OrderExpr::Kind::Int: return Element::integer(x.integer_value() - 1);
        case OrderExpr::Kind::Rat: return std::nullopt;
        case OrderExpr::Kind::Lex: {
            if (auto p = predecessor(order.right(), x.second()))
                return Element::pair(x.first(), *p);
            auto prevClass = predecessor(order.left(), x.first());
            auto top = maximum(order.right());
            if (prevClass && top) return Element::pair(*prevClass, *top);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Element> advance(const OrderExpr& order, const Element& x, long long delta) {
    Element current = x;
    for (long long i = 0; i < (delta < 0 ? -delta : delta); ++i) {
        auto next = delta > 0 ? successor(order, current) : predecessor(order, current);
        if (!next) return std::nullopt;
        current = std::move(*next);
    }
    return current;
}

std::optional<Element> pick_above(const OrderExpr& order, const Element& x) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return successor(order, x);
        case OrderExpr::Kind::Rat: return Element::rational(x.scalar_value() + 1);
        case OrderExpr::Kind::Lex: {
            if (auto b = pick_above(order.right(), x.second()))
                return Element::pair(x.first(), *b);
            if (auto a = pick_above(order.left(), x.first()))
                return Element::pair(*a, *element_at(order.right(), 0));
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Element> pick_below(const OrderExpr& order, const Element& x) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return predecessor(order, x);
        case OrderExpr::Kind::Rat: return Element::rational(x.scalar_value() - 1);
        case OrderExpr::Kind::Lex: {
            if (auto b = pick_below(order.right(), x.second()))
                return Element::pair(x.first(), *b);
            if (auto a = pick_below(order.left(), x.first()))
                return Element::pair(*a, *element_at(order.right(), 0));
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

Rational mediant(const Rational& x, const Rational& y) {
    Rational m(x.get_num() + y.get_num(), x.get_den() + y.get_den());
    m.canonicalize();
    return m;
}

}  // namespace

std::optional<Element> pick_between(const OrderExpr& order, const Element& x, const Element& y) {
    if (compare(order, x, y) != Ordering::LT)
        throw std::invalid_argument("pick_between requires x < y");
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: {
            if (y.integer_value() - x.integer_value() < 2) return std::nullopt;
            return Element::integer(x.integer_value() + 1);
        }
        case OrderExpr::Kind::Rat:
            return Element::rational(mediant(x.scalar_value(), y.scalar_value()));
        case OrderExpr::Kind::Lex: {
            if (compare(order.left(), x.first(), y.first()) == Ordering::EQ) {
                if (auto b = pick_between(order.right(), x.second(), y.second()))
                    return Element::pair(x.first(), *b);
                return std::nullopt;
            }
            if (auto c = pick_between(order.left(), x.first(), y.first()))
                return Element::pair(*c, *element_at(order.right(), 0));
            if (auto b = pick_above(order.right(), x.second()))
                return Element::pair(x.first(), *b);
            if (auto b = pick_below(order.right(), y.second()))
                return Element::pair(y.first(), *b);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Element> far_above(const OrderExpr& order, const Element& x, std::uint64_t offset) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return advance(order, x, static_cast<long long>(offset));
        case OrderExpr::Kind::Rat:
            return Element::rational(x.scalar_value() + Rational(static_cast<long>(offset)));
        case OrderExpr::Kind::Lex: {
            if (auto b = far_above(order.right(), x.second(), offset))
                return Element::pair(x.first(), *b);
            return advance(order, x, static_cast<long long>(offset));
        }
    }
    return std::nullopt;
}

std::optional<Element> far_below(const OrderExpr& order, const Element& x, std::uint64_t offset) {
    switch (order.kind()) {
        case OrderExpr::Kind::Fin:
        case OrderExpr::Kind::Nat:
        case OrderExpr::Kind::Int: return advance(order, x, -static_cast<long long>(offset));
        case OrderExpr::Kind::Rat:
            return Element::rational(x.scalar_value() - Rational(static_cast<long>(offset)));
        case OrderExpr::Kind::Lex: {
            if (auto b = far_below(order.right(), x.second(), offset))
                return Element::pair(x.first(), *b);
            return advance(order, x, -static_cast<long long>(offset));
        }
    }
    return std::nullopt;
}

namespace {

bool deep_enough(const OrderExpr& order, const Element& lo, const Element& z, const Element& hi,
                 std::uint64_t min_dist) {
    if (compare(order, lo, z) != Ordering::LT || compare(order, z, hi) != Ordering::LT)
        return false;
    return dist(order, lo, z) >= ExtNat::of(min_dist) && dist(order, z, hi) >= ExtNat::of(min_dist);
}

}  // namespace

std::optional<Element> deep_in_gap(const OrderExpr& order, const Element& lo, const Element& hi,
                                   std::uint64_t min_dist) {
    if (compare(order, lo, hi) != Ordering::LT)
        throw std::invalid_argument("deep_in_gap requires lo < hi");
    ExtNat gap = dist(order, lo, hi);
    if (!gap.is_infinite()) {
        // d(lo,z) + d(z,hi) = d(lo,hi) for z inside, so the midpoint is deep
        // whenever anything is.
        std::uint64_t half = gap.value() / 2;
        if (half < min_dist) return std::nullopt;
        return advance(order, lo, static_cast<long long>(half));
    }
    if (auto z = far_above(order, lo, min_dist)) {
        if (deep_enough(order, lo, *z, hi, min_dist)) return z;
    }
    if (auto z = far_below(order, hi, min_dist)) {
        if (deep_enough(order, lo, *z, hi, min_dist)) return z;
    }
    if (auto z = pick_between(order, lo, hi)) {
        if (deep_enough(order, lo, *z, hi, min_dist)) return z;
    }
    return std::nullopt;
}

}  // namespace isotype
