#pragma once

// Test-side oracles, independent of the implementation paths they check:
// distances by filtering canonical enumerations, EF verdicts by unrestricted
// prefix search, Hensel roots by the binomial series.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "isotype/efgame.hpp"
#include "isotype/orders.hpp"
#include "isotype/rational.hpp"

namespace isotype::testing {

// Enumeration prefix sorted by the order, for between-counting by binary
// search. Counting stays independent of interval_size/dist: only compare and
// the canonical enumeration are involved.
class SortedPrefix {
public:
    SortedPrefix(OrderExpr order, std::uint64_t prefix_size)
        : order_(std::move(order)), elements_(enumerate_prefix(order_, prefix_size)) {
        std::sort(elements_.begin(), elements_.end(), [this](const Element& a, const Element& b) {
            return compare(order_, a, b) == Ordering::LT;
        });
    }

    const OrderExpr& order() const { return order_; }
    const std::vector<Element>& elements() const { return elements_; }

    // Number of prefix elements strictly between x and y (x < y assumed).
    std::uint64_t count_between(const Element& x, const Element& y) const {
        auto less = [this](const Element& a, const Element& b) {
            return compare(order_, a, b) == Ordering::LT;
        };
        auto from = std::upper_bound(elements_.begin(), elements_.end(), x, less);
        auto to = std::lower_bound(elements_.begin(), elements_.end(), y, less);
        return from < to ? static_cast<std::uint64_t>(to - from) : 0;
    }

    // dist by counting: 0 on equal elements, 1 + between-count otherwise;
    // nullopt when the count exceeds the cutoff.
    std::optional<std::uint64_t> counted_dist(const Element& x, const Element& y,
                                              std::uint64_t cutoff) const {
        Ordering c = compare(order_, x, y);
        if (c == Ordering::EQ) return 0;
        std::uint64_t between = c == Ordering::LT ? count_between(x, y) : count_between(y, x);
        if (between > cutoff) return std::nullopt;
        return between + 1;
    }

    // Agreement between symbolic dist and the counting oracle: equal when
    // finite within the cutoff, jointly beyond it otherwise. The prefix must
    // be exhaustive within the pair's window for finite verdicts (the
    // caller picks prefix sizes accordingly).
    bool dist_matches(const Element& x, const Element& y, std::uint64_t cutoff) const {
        ExtNat symbolic = dist(order_, x, y);
        auto counted = counted_dist(x, y, cutoff);
        if (counted) return symbolic == ExtNat::of(*counted);
        return symbolic.is_infinite() || symbolic > ExtNat::of(cutoff);
    }

private:
    OrderExpr order_;
    std::vector<Element> elements_;
};

// One-off between-count over a freshly enumerated prefix (small cases).
inline std::optional<std::uint64_t> counted_between(const OrderExpr& order, const Element& x,
                                                    const Element& y, std::uint64_t prefix,
                                                    std::uint64_t cutoff) {
    std::uint64_t count = SortedPrefix(order, prefix).count_between(x, y);
    if (count > cutoff) return std::nullopt;
    return count;
}

// ---- unrestricted EF search --------------------------------------------------
//
// Decides the game with BOTH players ranging over enumeration prefixes
// (pattern-inconsistent replies are skipped; everything else is exhaustive).
// Exponential; usable at rounds <= 2 as the cross-validation oracle for the
// candidate-set finitization.

class UnrestrictedEf {
public:
    UnrestrictedEf(const GamePosition& start, std::uint64_t prefix)
        : left_order_(start.order(Side::Left)),
          right_order_(start.order(Side::Right)),
          left_(start.tuple(Side::Left)),
          right_(start.tuple(Side::Right)),
          left_pool_(enumerate_prefix(left_order_, prefix)),
          right_pool_(enumerate_prefix(right_order_, prefix)),
          rounds_(start.rounds_left()) {}

    bool duplicator_wins() {
        if (!consistent_all()) return false;
        return wins(rounds_);
    }

private:
    bool consistent_all() {
        for (std::size_t i = 0; i < left_.size(); ++i) {
            for (std::size_t j = i + 1; j < left_.size(); ++j) {
                if (compare(left_order_, left_[i], left_[j]) !=
                    compare(right_order_, right_[i], right_[j]))
                    return false;
            }
        }
        return true;
    }

    bool consistent_with_existing(const OrderExpr& mo, const std::vector<Element>& mt,
                                  const Element& m, const OrderExpr& ro,
                                  const std::vector<Element>& rt, const Element& r) {
        for (std::size_t i = 0; i < mt.size(); ++i) {
            if (compare(mo, m, mt[i]) != compare(ro, r, rt[i])) return false;
        }
        return true;
    }

    // Mismatched truncated distances, used only to ORDER the duplicator's
    // exhaustive scan (a bad order costs time, never correctness).
    std::uint64_t mismatch_score(const OrderExpr& mo, const std::vector<Element>& mt,
                                 const Element& m, const OrderExpr& ro,
                                 const std::vector<Element>& rt, const Element& r,
                                 ExtNat threshold) {
        std::uint64_t score = 0;
        for (std::size_t i = 0; i < mt.size(); ++i) {
            ExtNat dm = dist(mo, m, mt[i]);
            ExtNat dr = dist(ro, r, rt[i]);
            if ((dm < threshold || dr < threshold) && dm != dr) ++score;
        }
        return score;
    }

    bool wins(int rounds_left) {
        if (rounds_left == 0) return true;
        for (Side side : {Side::Left, Side::Right}) {
            auto& move_pool = side == Side::Left ? left_pool_ : right_pool_;
            auto& reply_pool = side == Side::Left ? right_pool_ : left_pool_;
            auto& move_tuple = side == Side::Left ? left_ : right_;
            auto& reply_tuple = side == Side::Left ? right_ : left_;
            const OrderExpr& mo = side == Side::Left ? left_order_ : right_order_;
            const OrderExpr& ro = side == Side::Left ? right_order_ : left_order_;

            for (const Element& move : move_pool) {
                std::vector<const Element*> replies;
                replies.reserve(reply_pool.size());
                for (const Element& reply : reply_pool) {
                    if (consistent_with_existing(mo, move_tuple, move, ro, reply_tuple, reply))
                        replies.push_back(&reply);
                }
                if (rounds_left >= 2) {
                    ExtNat threshold = ExtNat::of(1ULL << rounds_left);
                    std::vector<std::pair<std::uint64_t, const Element*>> scored;
                    scored.reserve(replies.size());
                    for (const Element* r : replies) {
                        scored.emplace_back(mismatch_score(mo, move_tuple, move, ro, reply_tuple,
                                                           *r, threshold),
                                            r);
                    }
                    std::stable_sort(scored.begin(), scored.end(),
                                     [](const auto& a, const auto& b) {
                                         return a.first < b.first;
                                     });
                    for (std::size_t i = 0; i < scored.size(); ++i) replies[i] = scored[i].second;
                }

                bool answered = false;
                for (const Element* reply : replies) {
                    move_tuple.push_back(move);
                    reply_tuple.push_back(*reply);
                    bool w = wins(rounds_left - 1);
                    move_tuple.pop_back();
                    reply_tuple.pop_back();
                    if (w) {
                        answered = true;
                        break;
                    }
                }
                if (!answered) return false;
            }
        }
        return true;
    }

    OrderExpr left_order_, right_order_;
    std::vector<Element> left_, right_;
    std::vector<Element> left_pool_, right_pool_;
    int rounds_;
};

inline bool unrestricted_ef_decide(const GamePosition& start, std::uint64_t prefix) {
    return UnrestrictedEf(start, prefix).duplicator_wins();
}

// Binomial coefficient C(1/2, k): the Taylor coefficients of sqrt(1 + t).
inline Rational sqrt_binomial_coefficient(unsigned k) {
    Rational acc(1);
    Rational half(1, 2);
    for (unsigned i = 0; i < k; ++i) {
        acc *= (half - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    }
    return acc;
}

}  // namespace isotype::testing
