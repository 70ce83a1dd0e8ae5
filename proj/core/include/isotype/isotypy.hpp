#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isotype/efgame.hpp"
#include "isotype/extnat.hpp"
#include "isotype/orders.hpp"

namespace isotype {

// Consecutive distances of the ascending reordering of a tuple. Zero entries
// encode repeated elements; `sorted` records whether the input tuple was
// already non-decreasing.
struct DistanceProfile {
    std::size_t length = 0;
    bool sorted = true;
    std::vector<ExtNat> entries;  // length max(length - 1, 0)

    bool operator==(const DistanceProfile& other) const {
        return length == other.length && entries == other.entries;
    }
};

DistanceProfile profile(const OrderExpr& order, const std::vector<Element>& tuple);

// Rank of each tuple position among the sorted distinct values; two tuples
// carry the same atomic order pattern iff their rank vectors coincide.
std::vector<std::size_t> rank_pattern(const OrderExpr& order, const std::vector<Element>& tuple);

// Type equality for tuples over the lex(·, Z) family with infinite left
// factor: the order patterns and the distance profiles coincide. Matching
// profiles are sufficient for full type equality; the converse holds because
// each finite distance value is first-order definable.
bool types_equal(const OrderExpr& order_a, const std::vector<Element>& tuple_a,
                 const OrderExpr& order_b, const std::vector<Element>& tuple_b);

// Ascending tuple whose profile equals `entries`: finite steps advance the Z
// coordinate, ∞ steps move to the next-enumerated fresh class.
std::vector<Element> realize_profile(const OrderExpr& order, const std::vector<ExtNat>& entries);

// The left factor of lex(A, Z): the quotient by the finite-distance
// equivalence a ~ a' iff dist(a, a') < ∞, which identifies exactly the
// fibers over A and inherits A's order.
OrderExpr quotient(const OrderExpr& order);
// Fiber projection (a, k) -> a.
Element class_of(const OrderExpr& order, const Element& element);

struct NonIsomorphismWitness {
    bool conclusive = false;
    OrderExpr quotient_left, quotient_right;
    bool left_dense = false, left_discrete = false;
    bool right_dense = false, right_discrete = false;
    // The first-order property of the quotients that separates them.
    std::string property;
};

// Certify non-isomorphism of lex(A, Z) and lex(B, Z) by comparing the
// density/discreteness of the recovered quotients; inconclusive when both
// classify alike.
NonIsomorphismWitness non_isomorphism_witness(const OrderExpr& order_a, const OrderExpr& order_b);

struct IsotypyReportParams {
    OrderExpr order_a, order_b;
    int max_len = 3;
    int window = 5;   // tuples draw elements from this many enumeration positions
    int depth = 3;    // EF game rounds
    std::uint64_t seed = 0;  // selects which passing pairs carry demo transcripts
    std::size_t sample_count = 3;
};

struct IsotypyPairRecord {
    std::string direction;  // "A->B" or "B->A"
    std::vector<Element> source_tuple, target_tuple;
    DistanceProfile source_profile;
    bool types_match = false;
    bool game_won = false;
};

struct IsotypyFailure {
    IsotypyPairRecord pair;
    std::string reason;
    std::optional<Transcript> transcript;  // spoiler witness when a game failed
};

struct IsotypySample {
    IsotypyPairRecord pair;
    Transcript demo;  // a played game ending duplicator-wins
};

struct IsotypyReport {
    IsotypyReportParams params;
    std::size_t tuples_checked = 0;
    std::size_t games_played = 0;
    std::size_t type_checks = 0;
    std::vector<IsotypyFailure> failures;
    std::vector<IsotypySample> samples;
    bool pass = false;
};

// For every tuple with entries among the first `window` enumerated elements
// of one order and length <= max_len, realize its profile in the other order
// (in both directions), then assert type equality and a duplicator win at
// the given depth. Failures are report content, never exceptions.
IsotypyReport isotypy_report(const IsotypyReportParams& params);

}  // namespace isotype
