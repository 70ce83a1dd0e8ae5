#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "isotype/errors.hpp"
#include "isotype/orders.hpp"
#include "isotype/parse.hpp"
#include "support/oracles.hpp"

using namespace isotype;

namespace {

Element pr(long long a, long long b) {
    return Element::pair(Element::integer(a), Element::integer(b));
}

Element qpr(const char* q, long long b) {
    return Element::pair(Element::rational(parse_rational(q)), Element::integer(b));
}

const OrderExpr Z = OrderExpr::integers();
const OrderExpr Q = OrderExpr::rationals();
const OrderExpr ZZ = OrderExpr::lex(OrderExpr::integers(), OrderExpr::integers());
const OrderExpr QZ = OrderExpr::lex(OrderExpr::rationals(), OrderExpr::integers());
const OrderExpr ZF3 = OrderExpr::lex(OrderExpr::integers(), OrderExpr::fin(3));

}  // namespace

TEST_CASE("compare on the catalog") {
    CHECK(compare(ZZ, pr(0, 5), pr(1, -5)) == Ordering::LT);  // left coordinate first
    CHECK(compare(ZZ, pr(0, 5), pr(0, 5)) == Ordering::EQ);
    CHECK(compare(QZ, qpr("1/2", 3), qpr("1/2", 7)) == Ordering::LT);
    CHECK(compare(Q, Element::rational(parse_rational("2/3")),
                  Element::rational(parse_rational("3/4"))) == Ordering::LT);
    CHECK_THROWS_AS(compare(Z, pr(0, 0), Element::integer(1)), ShapeError);
}

TEST_CASE("interval_size matches bounded enumeration") {
    // Z: between 2 and 5 lie {3,4}
    auto counted = testing::counted_between(Z, Element::integer(2), Element::integer(5), 200, 64);
    REQUIRE(counted.has_value());
    CHECK(*counted == 2);
    CHECK(interval_size(Z, Element::integer(2), Element::integer(5)) == ExtNat::of(*counted));

    // Q: (0, 1) exceeds any cutoff
    auto dense = testing::counted_between(Q, Element::integer(0), Element::integer(1), 5000, 64);
    CHECK(!dense.has_value());
    CHECK(interval_size(Q, Element::integer(0), Element::integer(1)).is_infinite());

    // lex(Z, Fin(3)): between (0,2) and (2,0) lie (1,0),(1,1),(1,2)
    auto lexcount = testing::counted_between(ZF3, pr(0, 2), pr(2, 0), 2000, 64);
    REQUIRE(lexcount.has_value());
    CHECK(*lexcount == 3);
    CHECK(interval_size(ZF3, pr(0, 2), pr(2, 0)) == ExtNat::of(3));

    CHECK_THROWS_AS(interval_size(Z, Element::integer(5), Element::integer(2)),
                    std::invalid_argument);
}

TEST_CASE("dist: definition and the lex(A,Z) closed form") {
    CHECK(dist(ZZ, pr(3, 4), pr(3, 4)) == ExtNat());                 // dist(x,x) = 0
    CHECK(dist(QZ, qpr("1/2", 3), qpr("1/2", 7)) == ExtNat::of(4));  // |k - k'| on one class
    CHECK(dist(ZZ, pr(0, 5), pr(1, -5)).is_infinite());              // distinct classes
}

TEST_CASE("dist in lex(A,Z) equals |k-k'| within a class and inf across") {
    for (const auto& order : {ZZ, QZ}) {
        auto prefix = enumerate_prefix(order, 60);
        for (const auto& x : prefix) {
            for (const auto& y : prefix) {
                ExtNat d = dist(order, x, y);
                if (compare(order.left(), x.first(), y.first()) == Ordering::EQ) {
                    long long k = x.second().integer_value(), kp = y.second().integer_value();
                    CHECK(d == ExtNat::of(static_cast<std::uint64_t>(k > kp ? k - kp : kp - k)));
                } else {
                    CHECK(d.is_infinite());
                }
            }
        }
    }
}

TEST_CASE("dist symmetry and oracle agreement within the cutoff") {
    const std::uint64_t cutoff = 64;
    struct Case {
        OrderExpr order;
        std::uint64_t pairs_from, prefix;
    };
    for (const auto& c : {Case{Z, 40, 400}, Case{ZZ, 40, 45000}, Case{QZ, 40, 20000},
                          Case{ZF3, 40, 3000}}) {
        testing::SortedPrefix oracle(c.order, c.prefix);
        auto window = enumerate_prefix(c.order, c.pairs_from);
        for (const auto& x : window) {
            for (const auto& y : window) {
                CHECK(dist(c.order, x, y) == dist(c.order, y, x));
                CHECK(oracle.dist_matches(x, y, cutoff));
            }
        }
    }
}

TEST_CASE("compare is a total order on enumeration prefixes") {
    for (const auto& order : {Z, Q, ZZ, QZ, ZF3, OrderExpr::nat(), OrderExpr::fin(4)}) {
        auto prefix = enumerate_prefix(order, 12);
        for (const auto& x : prefix) {
            for (const auto& y : prefix) {
                Ordering xy = compare(order, x, y);
                Ordering yx = compare(order, y, x);
                CHECK((xy == Ordering::EQ) == (x == y));
                CHECK((xy == Ordering::LT) == (yx == Ordering::GT));
                for (const auto& z : prefix) {
                    if (xy == Ordering::LT && compare(order, y, z) == Ordering::LT)
                        CHECK(compare(order, x, z) == Ordering::LT);
                }
            }
        }
    }
}

TEST_CASE("enumeration schemes are pinned") {
    // Z zig-zags 0, 1, -1, 2, -2
    std::vector<long long> zig;
    for (auto& e : enumerate_prefix(Z, 5)) zig.push_back(e.integer_value());
    CHECK(zig == std::vector<long long>{0, 1, -1, 2, -2});

    // Q: 0, then Calkin-Wilf values with alternating signs
    std::vector<std::string> rats;
    for (auto& e : enumerate_prefix(Q, 9)) rats.push_back(to_string(e));
    CHECK(rats == std::vector<std::string>{"0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3",
                                           "-1/3"});

    // Fin(2) yields exactly {0, 1}
    CHECK(enumerate_prefix(OrderExpr::fin(2), 10).size() == 2);
    CHECK(!element_at(OrderExpr::fin(2), 2).has_value());

    // lex(Z,Z): every element with |coords| <= 3 appears among the first 200
    std::map<std::pair<long long, long long>, bool> seen;
    for (auto& e : enumerate_prefix(ZZ, 200)) {
        seen[{e.first().integer_value(), e.second().integer_value()}] = true;
    }
    for (long long a = -3; a <= 3; ++a) {
        for (long long b = -3; b <= 3; ++b) {
            CHECK(seen.count({a, b}) == 1);
        }
    }
}

TEST_CASE("enum_index inverts element_at") {
    for (const auto& order :
         {Z, Q, ZZ, QZ, ZF3, OrderExpr::nat(), OrderExpr::fin(7),
          OrderExpr::lex(OrderExpr::fin(3), OrderExpr::integers()),
          OrderExpr::lex(OrderExpr::fin(3), OrderExpr::fin(4)),
          OrderExpr::lex(OrderExpr::lex(OrderExpr::integers(), OrderExpr::integers()),
                         OrderExpr::integers())}) {
        for (std::uint64_t i = 0; i < 300; ++i) {
            auto e = element_at(order, i);
            if (!e) break;
            CHECK(enum_index(order, *e) == BigInt(static_cast<unsigned long>(i)));
        }
    }
}

TEST_CASE("enum_index handles deep rationals") {
    // index computation folds continued-fraction runs, so large values are
    // cheap even when the position is astronomically far out
    Element deep = Element::rational(parse_rational("355/113"));
    BigInt idx = enum_index(Q, deep);
    CHECK(idx > 0);
    Element tiny = Element::rational(parse_rational("1/1000000"));
    CHECK(enum_index(Q, tiny) > idx);
}

TEST_CASE("density and discreteness classifiers") {
    CHECK(is_dense(Q));
    CHECK(!is_discrete(Q));
    CHECK(is_discrete(Z));
    CHECK(is_discrete(OrderExpr::nat()));
    CHECK(is_discrete(OrderExpr::fin(5)));
    CHECK(!is_dense(OrderExpr::fin(5)));
    CHECK(is_dense(OrderExpr::fin(1)));  // vacuously

    CHECK(is_discrete(ZZ));
    CHECK(!is_dense(ZZ));
    CHECK(is_discrete(QZ));
    CHECK(!is_dense(QZ));
    CHECK(is_dense(OrderExpr::lex(Z, Q)));
    CHECK(!is_discrete(OrderExpr::lex(Z, Q)));
    CHECK(is_discrete(ZF3));
    // lex(A, Fin(1)) inherits A
    CHECK(is_dense(OrderExpr::lex(Q, OrderExpr::fin(1))));
    CHECK(!is_dense(OrderExpr::lex(Q, OrderExpr::fin(2))));
    CHECK(!is_discrete(OrderExpr::lex(Q, OrderExpr::fin(2))));
}

TEST_CASE("discrete orders have unit-distance successors on samples") {
    for (const auto& order : {ZZ, QZ, ZF3}) {
        REQUIRE(is_discrete(order));
        for (const auto& x : enumerate_prefix(order, 40)) {
            auto next = successor(order, x);
            REQUIRE(next.has_value());
            CHECK(dist(order, x, *next) == ExtNat::of(1));
        }
    }
    // while dense orders admit no successor at all
    CHECK(!successor(Q, Element::integer(0)).has_value());
}

TEST_CASE("ExtNat saturating arithmetic") {
    ExtNat inf = ExtNat::infinity();
    CHECK((ExtNat::of(3) + inf).is_infinite());
    CHECK((inf + inf).is_infinite());
    CHECK((ExtNat::of(2) * inf).is_infinite());
    CHECK(ExtNat() * inf == ExtNat());  // 0 * inf = 0
    CHECK(inf * ExtNat() == ExtNat());
    CHECK(ExtNat::of(6) * ExtNat::of(7) == ExtNat::of(42));
    CHECK(ExtNat::of(41) < inf);
    CHECK(ExtNat::of(3).to_string() == "3");
    CHECK(inf.to_string() == "inf");
    CHECK(parse_extnat("inf").is_infinite());
    CHECK(parse_extnat("17") == ExtNat::of(17));
}

TEST_CASE("navigation helpers") {
    CHECK(to_string(*successor(ZF3, pr(0, 2))) == "(1,0)");  // carry into the next class
    CHECK(to_string(*predecessor(ZF3, pr(1, 0))) == "(0,2)");
    CHECK(!successor(OrderExpr::lex(Z, Q), pr(0, 0)).has_value());
    CHECK(to_string(*advance(Z, Element::integer(0), 5)) == "5");
    CHECK(to_string(*advance(ZF3, pr(0, 0), 4)) == "(1,1)");
    CHECK(!advance(OrderExpr::fin(3), Element::integer(1), 2).has_value());

    CHECK(to_string(*pick_between(Q, Element::integer(0), Element::integer(1))) == "1/2");
    CHECK(!pick_between(Z, Element::integer(0), Element::integer(1)).has_value());
    CHECK(to_string(*pick_between(QZ, qpr("0", 0), qpr("1", 0))) == "(1/2,0)");

    // far points: discrete directions land exactly, dense ones jump by the
    // offset with infinite distance
    CHECK(dist(Z, Element::integer(0), *far_above(Z, Element::integer(0), 5)) == ExtNat::of(5));
    CHECK(dist(Q, Element::integer(0), *far_above(Q, Element::integer(0), 5)).is_infinite());
    CHECK(to_string(*far_above(QZ, qpr("1/2", 0), 5)) == "(1/2,5)");

    auto deep = deep_in_gap(Z, Element::integer(0), Element::integer(10), 5);
    REQUIRE(deep.has_value());
    CHECK(dist(Z, Element::integer(0), *deep) >= ExtNat::of(5));
    CHECK(dist(Z, *deep, Element::integer(10)) >= ExtNat::of(5));
    CHECK(!deep_in_gap(Z, Element::integer(0), Element::integer(9), 5).has_value());
}

TEST_CASE("belongs checks shapes and Fin ranges") {
    CHECK(belongs(OrderExpr::fin(3), Element::integer(2)));
    CHECK(!belongs(OrderExpr::fin(3), Element::integer(3)));
    CHECK(!belongs(OrderExpr::nat(), Element::integer(-1)));
    CHECK(belongs(Q, Element::integer(3)));  // integers embed in Q
    CHECK(!belongs(Z, Element::rational(parse_rational("1/2"))));
    CHECK(belongs(ZZ, pr(-5, 7)));
    CHECK(!belongs(ZZ, Element::integer(0)));
}
