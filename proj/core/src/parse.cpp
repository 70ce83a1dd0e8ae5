#include "isotype/parse.hpp"

#include <cctype>
#include <string>

namespace isotype {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view input) : input_(input) {}

    void skip_ws() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= input_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < input_.size() ? input_[pos_] : '\0';
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < input_.size() && input_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool try_consume(std::string_view word) {
        skip_ws();
        if (input_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("'") + c + "'");
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_, expected, std::string(input_));
    }

    void expect_end() {
        if (!at_end()) fail("end of input");
    }

    // digits, as a decimal string
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
        if (pos_ == start) fail("digits");
        return std::string(input_.substr(start, pos_ - start));
    }

    long long integer() {
        skip_ws();
        bool negative = try_consume('-');
        return (negative ? -1 : 1) * std::stoll(digits());
    }

    // rat ::= int [ "/" nat ]; reduced on read; the denominator must be a
    // positive plain natural per the grammar.
    Rational rational() {
        skip_ws();
        bool negative = try_consume('-');
        std::string num = digits();
        std::string den = "1";
        if (try_consume('/')) den = digits();
        Rational q((negative ? "-" : "") + num + "/" + den);
        if (q.get_den() == 0) fail("nonzero denominator");
        q.canonicalize();
        return q;
    }

    Element element() {
        skip_ws();
        if (try_consume('(')) {
            Element first = element();
            expect(',');
            Element second = element();
            expect(')');
            return Element::pair(std::move(first), std::move(second));
        }
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            return Element::rational(rational());
        }
        fail("element literal");
    }

    OrderExpr order() {
        skip_ws();
        if (try_consume("Fin")) {
            expect('(');
            long long n = std::stoll(digits());
            expect(')');
            if (n < 1) fail("Fin size >= 1");
            return OrderExpr::fin(n);
        }
        if (try_consume("lex")) {
            expect('(');
            OrderExpr left = order();
            expect(',');
            OrderExpr right = order();
            expect(')');
            return OrderExpr::lex(std::move(left), std::move(right));
        }
        if (try_consume('N')) return OrderExpr::nat();
        if (try_consume('Z')) return OrderExpr::integers();
        if (try_consume('Q')) return OrderExpr::rationals();
        fail("order expression (Fin(n), N, Z, Q or lex(A,B))");
    }

    ExtNat extnat() {
        skip_ws();
        if (try_consume("inf")) return ExtNat::infinity();
        return ExtNat::of(std::stoull(digits()));
    }

    GroupElement group_element(const OrderExpr& index_order) {
        expect('{');
        std::vector<std::pair<Element, Rational>> entries;
        if (!try_consume('}')) {
            do {
                Element index = element();
                expect(':');
                Rational coeff = rational();
                entries.emplace_back(std::move(index), std::move(coeff));
            } while (try_consume(','));
            expect('}');
        }
        return GroupElement(index_order, std::move(entries));
    }

    // One multiplicand of a series term: a rational coefficient or a
    // variable power x[idx]^q.
    void series_atom(const OrderExpr& index_order, Rational& coeff,
                     std::vector<std::pair<Element, Rational>>& powers) {
        skip_ws();
        if (try_consume('x')) {
            expect('[');
            Element index = element();
            expect(']');
            Rational exponent(1);
            if (try_consume('^')) {
                if (try_consume('{')) {
                    exponent = rational();
                    expect('}');
                } else {
                    exponent = rational();
                }
            }
            powers.emplace_back(std::move(index), std::move(exponent));
            (void)index_order;
            return;
        }
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= rational();
            return;
        }
        fail("series factor (rational or x[idx])");
    }

    Series series(const OrderExpr& index_order, const GroupElement& precision) {
        std::vector<std::pair<GroupElement, Rational>> terms;
        bool negative = try_consume('-');
        for (;;) {
            Rational coeff(negative ? -1 : 1);
            std::vector<std::pair<Element, Rational>> powers;
            series_atom(index_order, coeff, powers);
            while (try_consume('*')) series_atom(index_order, coeff, powers);
            terms.emplace_back(GroupElement(index_order, std::move(powers)), std::move(coeff));
            skip_ws();
            if (try_consume('+')) {
                negative = false;
            } else if (try_consume('-')) {
                negative = true;
            } else {
                break;
            }
        }
        return Series::from_terms(index_order, precision, std::move(terms));
    }

    SupportMap support_map(const OrderExpr& from_order, const OrderExpr& to_order) {
        std::vector<std::pair<Element, Element>> pairs;
        do {
            Element src = element();
            expect('-');
            expect('>');
            Element dst = element();
            pairs.emplace_back(std::move(src), std::move(dst));
        } while (try_consume(','));
        return SupportMap(from_order, to_order, std::move(pairs));
    }

    RingTerm term_sum() {
        RingTerm acc = term_product();
        for (;;) {
            if (try_consume('+')) {
                acc = RingTerm::add(std::move(acc), term_product());
            } else if (try_consume('-')) {
                acc = RingTerm::sub(std::move(acc), term_product());
            } else {
                return acc;
            }
        }
    }

    RingTerm term_product() {
        RingTerm acc = term_unary();
        while (try_consume('*')) acc = RingTerm::mul(std::move(acc), term_unary());
        return acc;
    }

    RingTerm term_unary() {
        if (try_consume('-')) return RingTerm::negate(term_unary());
        return term_atom();
    }

    RingTerm term_atom() {
        skip_ws();
        if (try_consume('(')) {
            RingTerm inner = term_sum();
            expect(')');
            return inner;
        }
        if (try_consume('u')) {
            long long k = std::stoll(digits());
            if (k < 1) fail("variable index >= 1");
            return RingTerm::variable(static_cast<std::size_t>(k - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return RingTerm::constant(std::stoll(digits()));
        }
        fail("ring term atom (u<k>, integer or parenthesized term)");
    }

private:
    std::string_view input_;
    std::size_t pos_ = 0;
};

}  // namespace

OrderExpr parse_order(std::string_view input) {
    Cursor cursor(input);
    OrderExpr result = cursor.order();
    cursor.expect_end();
    return result;
}

Element parse_element(std::string_view input) {
    Cursor cursor(input);
    Element result = cursor.element();
    cursor.expect_end();
    return result;
}

Rational parse_rational(std::string_view input) {
    Cursor cursor(input);
    Rational result = cursor.rational();
    cursor.expect_end();
    return result;
}

ExtNat parse_extnat(std::string_view input) {
    Cursor cursor(input);
    ExtNat result = cursor.extnat();
    cursor.expect_end();
    return result;
}

std::vector<ExtNat> parse_extnat_list(std::string_view input) {
    Cursor cursor(input);
    std::vector<ExtNat> result;
    if (cursor.at_end()) return result;
    result.push_back(cursor.extnat());
    while (cursor.try_consume(',')) result.push_back(cursor.extnat());
    cursor.expect_end();
    return result;
}

GroupElement parse_group_element(const OrderExpr& index_order, std::string_view input) {
    Cursor cursor(input);
    GroupElement result = cursor.group_element(index_order);
    cursor.expect_end();
    return result;
}

Series parse_series(const OrderExpr& index_order, const GroupElement& precision,
                    std::string_view input) {
    Cursor cursor(input);
    Series result = cursor.series(index_order, precision);
    cursor.expect_end();
    return result;
}

SupportMap parse_support_map(const OrderExpr& from_order, const OrderExpr& to_order,
                             std::string_view input) {
    Cursor cursor(input);
    SupportMap result = cursor.support_map(from_order, to_order);
    cursor.expect_end();
    return result;
}

RingTerm parse_ring_term(std::string_view input) {
    Cursor cursor(input);
    RingTerm result = cursor.term_sum();
    cursor.expect_end();
    return result;
}

}  // namespace isotype
