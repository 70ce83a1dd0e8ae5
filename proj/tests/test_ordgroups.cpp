#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isotype/ordgroups.hpp"
#include "isotype/parse.hpp"
#include "support/arch_oracle.hpp"

using namespace isotype;

namespace {

const OrderExpr Z = OrderExpr::integers();

GroupElement ge(const char* literal) { return parse_group_element(Z, literal); }

GroupElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> support(0, 3);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<std::pair<Element, Rational>> entries;
    int size = support(rng);
    for (int i = 0; i < size; ++i) {
        entries.emplace_back(Element::integer(support(rng) * 2 - 3),
                             make_rational(num(rng), den(rng)));
    }
    return GroupElement(Z, std::move(entries));
}

}  // namespace

TEST_CASE("group arithmetic") {
    GroupElement g = ge("{0:1, 2:-3/2}");
    CHECK(add(g, neg(g)).is_zero());
    CHECK(add(ge("{0:1}"), ge("{0:-1, 1:2}")) == ge("{1:2}"));
    CHECK(to_string(add(ge("{0:1}"), ge("{0:-1, 1:2}"))) == "{1:2}");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        GroupElement a = random_element(rng), b = random_element(rng);
        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), neg(b)) == a);
    }
}

TEST_CASE("sign looks at the highest supported index") {
    CHECK(sign(ge("{0:-5, 2:1/3}")) == Sign::POS);
    CHECK(sign(GroupElement(Z)) == Sign::ZERO);
    CHECK(sign(ge("{0:-5}")) == Sign::NEG);
    CHECK(compare(ge("{0:100}"), ge("{1:1/10}")) == Ordering::LT);
}

TEST_CASE("abs") {
    CHECK(abs(GroupElement(Z)).is_zero());
    GroupElement g = ge("{0:-5, 2:1/3}");
    CHECK(abs(g) == g);  // sign is POS
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        GroupElement a = random_element(rng);
        CHECK(abs(neg(a)) == abs(a));
        CHECK(sign(abs(a)) != Sign::NEG);
    }
}

TEST_CASE("ordered-group axioms on samples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        GroupElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        Ordering ab = compare(a, b);
        CHECK(((ab == Ordering::EQ) == (a == b)));
        // translation invariance
        CHECK(compare(add(a, c), add(b, c)) == ab);
        // antisymmetry
        Ordering ba = compare(b, a);
        CHECK(((ab == Ordering::LT) == (ba == Ordering::GT)));
    }
}

TEST_CASE("divisibility witnesses") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        GroupElement g = random_element(rng);
        for (long n : {2L, 3L, 5L}) {
            GroupElement part = scalar_mul(Rational(1, n), g);
            CHECK(scalar_mul(Rational(n), part) == g);
        }
    }
}

TEST_CASE("arch_equiv examples against the definitional search") {
    GroupElement a = ge("{2:1}");
    GroupElement b = ge("{2:100, 0:-7}");
    CHECK(arch_equiv(a, b));
    CHECK(testing::arch_equiv_oracle(abs(a), abs(b)));
    // n = 100 itself witnesses |b| <= n |a|
    CHECK(compare(abs(b), scalar_mul(Rational(100), abs(a))) != Ordering::GT);

    GroupElement c = ge("{3:1}");
    CHECK(!arch_equiv(a, c));
    CHECK(!testing::arch_equiv_oracle(abs(a), abs(c)));

    CHECK(arch_equiv(a, a));  // n = 1
    CHECK(arch_equiv(GroupElement(Z), GroupElement(Z)));
    CHECK(!arch_equiv(GroupElement(Z), a));
}

TEST_CASE("arch_equiv symbolic rule matches brute force over a 3-index window") {
    std::vector<Element> indices = {Element::integer(0), Element::integer(1),
                                    Element::integer(2)};
    std::vector<Rational> coeffs = {make_rational(1),     make_rational(-1),
                                    make_rational(1, 2),  make_rational(-1, 2),
                                    make_rational(3),     make_rational(-3)};
    auto window = testing::window_elements(Z, indices, coeffs);
    std::vector<GroupElement> abses;
    abses.reserve(window.size());
    for (const auto& g : window) abses.push_back(abs(g));

    for (std::size_t i = 0; i < window.size(); ++i) {
        for (std::size_t j = i; j < window.size(); ++j) {
            bool symbolic = arch_equiv(window[i], window[j]);
            bool brute = testing::arch_equiv_oracle(abses[i], abses[j]);
            REQUIRE(symbolic == brute);
        }
    }
}

TEST_CASE("arch_class and the recovered class order") {
    CHECK(arch_class(ge("{0:3, 2:-1}")) == Element::integer(2));
    CHECK_THROWS_AS(arch_class(GroupElement(Z)), std::domain_error);
    CHECK(arch_classes_order(OrderExpr::rationals()) == OrderExpr::rationals());

    // representatives {a0:q} for varying nonzero q are all equivalent
    for (const char* q : {"1", "-1", "1/2", "-1/2", "10", "-10"}) {
        CHECK(arch_equiv(parse_group_element(Z, (std::string("{0:") + q + "}").c_str()),
                         ge("{0:1}")));
    }

    // class comparison on |representatives| follows the index order: the
    // recovery of A from the Archimedean classes of ⊕_A Q
    std::vector<GroupElement> reps;
    for (long idx = -3; idx <= 3; ++idx) {
        reps.push_back(GroupElement(
            Z, {{Element::integer(idx), make_rational(idx % 2 == 0 ? 2 : -1, 3)}}));
    }
    for (const auto& g : reps) {
        for (const auto& h : reps) {
            Ordering classes = compare(Z, arch_class(g), arch_class(h));
            if (classes == Ordering::EQ) {
                CHECK(arch_equiv(g, h));
            } else {
                CHECK(!arch_equiv(g, h));
                // higher class dominates: |g| < |h| iff class(g) < class(h)
                CHECK(compare(abs(g), abs(h)) == classes);
            }
        }
    }
}

TEST_CASE("group literals round-trip") {
    for (const char* lit : {"{}", "{0:1}", "{-2:1/2, 0:-3, 5:7/3}"}) {
        GroupElement g = ge(lit);
        CHECK(parse_group_element(Z, to_string(g)) == g);
    }
    CHECK(ge("{0:1, 0:-1}").is_zero());  // repeated indices accumulate
    CHECK_THROWS_AS(ge("{0:}"), ParseError);
    CHECK_THROWS_AS(parse_group_element(OrderExpr::nat(), "{-1:2}"), ShapeError);
}
