#include "isotype/isotypy.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "isotype/errors.hpp"

namespace isotype {

namespace {

std::vector<Element> sorted_ascending(const OrderExpr& order, std::vector<Element> tuple) {
    std::stable_sort(tuple.begin(), tuple.end(), [&order](const Element& a, const Element& b) {
        return compare(order, a, b) == Ordering::LT;
    });
    return tuple;
}

void require_lex_int_family(const OrderExpr& order, bool infinite_left) {
    if (order.kind() != OrderExpr::Kind::Lex || order.right().kind() != OrderExpr::Kind::Int)
        throw std::invalid_argument("unsupported order family: " + to_string(order) +
                                    " is not lex(A,Z)");
    if (infinite_left && !cardinality(order.left()).is_infinite())
        throw std::invalid_argument("unsupported order family: left factor of " +
                                    to_string(order) + " must be infinite");
}

}  // namespace

DistanceProfile profile(const OrderExpr& order, const std::vector<Element>& tuple) {
    for (const auto& e : tuple) require_belongs(order, e);
    DistanceProfile result;
    result.length = tuple.size();
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
        if (compare(order, tuple[i], tuple[i + 1]) == Ordering::GT) {
            result.sorted = false;
            break;
        }
    }
    std::vector<Element> ascending = sorted_ascending(order, tuple);
    for (std::size_t i = 0; i + 1 < ascending.size(); ++i) {
        result.entries.push_back(dist(order, ascending[i], ascending[i + 1]));
    }
    return result;
}

std::vector<std::size_t> rank_pattern(const OrderExpr& order, const std::vector<Element>& tuple) {
    std::vector<std::size_t> ranks(tuple.size(), 0);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            if (compare(order, tuple[j], tuple[i]) == Ordering::LT) {
                // count distinct smaller values
                bool counted = false;
                for (std::size_t k = 0; k < j; ++k) {
                    if (compare(order, tuple[k], tuple[j]) == Ordering::EQ) {
                        counted = true;
                        break;
                    }
                }
                if (!counted) ++ranks[i];
            }
        }
    }
    return ranks;
}

bool types_equal(const OrderExpr& order_a, const std::vector<Element>& tuple_a,
                 const OrderExpr& order_b, const std::vector<Element>& tuple_b) {
    require_lex_int_family(order_a, /*infinite_left=*/true);
    require_lex_int_family(order_b, /*infinite_left=*/true);
    if (tuple_a.size() != tuple_b.size())
        throw std::invalid_argument("types_equal requires tuples of equal length");
    if (rank_pattern(order_a, tuple_a) != rank_pattern(order_b, tuple_b)) return false;
    return profile(order_a, tuple_a) == profile(order_b, tuple_b);
}

std::vector<Element> realize_profile(const OrderExpr& order, const std::vector<ExtNat>& entries) {
    require_lex_int_family(order, /*infinite_left=*/true);
    const OrderExpr& classes = order.left();

    // Walk the canonical class enumeration, keeping the picked classes
    // ascending; the Z coordinate absorbs the finite steps.
    Element current_class = *element_at(classes, 0);
    long long offset = 0;
    std::vector<Element> out;
    out.push_back(Element::pair(current_class, Element::integer(offset)));
    for (const ExtNat& step : entries) {
        if (step.is_infinite()) {
            for (std::uint64_t i = 0;; ++i) {
                auto candidate = element_at(classes, i);
                if (!candidate)
                    throw std::logic_error("infinite left factor exhausted its enumeration");
                if (compare(classes, *candidate, current_class) == Ordering::GT) {
                    current_class = *candidate;
                    offset = 0;
                    break;
                }
            }
        } else {
            offset += static_cast<long long>(step.value());
        }
        out.push_back(Element::pair(current_class, Element::integer(offset)));
    }
    return out;
}

OrderExpr quotient(const OrderExpr& order) {
    require_lex_int_family(order, /*infinite_left=*/false);
    return order.left();
}

Element class_of(const OrderExpr& order, const Element& element) {
    require_lex_int_family(order, /*infinite_left=*/false);
    require_belongs(order, element);
    return element.first();
}

NonIsomorphismWitness non_isomorphism_witness(const OrderExpr& order_a,
                                              const OrderExpr& order_b) {
    NonIsomorphismWitness w{false,
                            quotient(order_a),
                            quotient(order_b),
                            is_dense(quotient(order_a)),
                            is_discrete(quotient(order_a)),
                            is_dense(quotient(order_b)),
                            is_discrete(quotient(order_b)),
                            ""};
    if (w.left_discrete && w.right_dense) {
        w.conclusive = true;
        w.property =
            "the quotient by finite-distance equivalence is discrete on the left and dense on "
            "the right; an isomorphism of the products would carry one quotient onto the other";
    } else if (w.left_dense && w.right_discrete) {
        w.conclusive = true;
        w.property =
            "the quotient by finite-distance equivalence is dense on the left and discrete on "
            "the right; an isomorphism of the products would carry one quotient onto the other";
    }
    return w;
}

namespace {

// All tuples of the given length over the element window, in lexicographic
// index order.
void for_each_tuple(const std::vector<Element>& window, int length,
                    const std::function<void(const std::vector<Element>&)>& visit) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
    std::vector<Element> tuple(static_cast<std::size_t>(length), window.front());
    for (;;) {
        for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = window[idx[i]];
        visit(tuple);
        std::size_t pos = idx.size();
        while (pos > 0) {
            if (++idx[pos - 1] < window.size()) break;
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
}

// Reorder the realized ascending tuple to follow the source tuple's pattern.
std::vector<Element> apply_pattern(const std::vector<std::size_t>& ranks,
                                   const std::vector<Element>& ascending_distinct) {
    std::vector<Element> out;
    out.reserve(ranks.size());
    for (std::size_t r : ranks) out.push_back(ascending_distinct[r]);
    return out;
}

// Distinct values of an ascending tuple.
std::vector<Element> distinct_ascending(const OrderExpr& order, const std::vector<Element>& t) {
    std::vector<Element> out;
    for (const auto& e : t) {
        if (out.empty() || compare(order, out.back(), e) != Ordering::EQ) out.push_back(e);
    }
    return out;
}

// A demonstration game on a passing pair: the spoiler plays its first
// candidate move each round, the duplicator answers with the strategy.
Transcript demo_game(const GamePosition& start) {
    auto source = [](const GamePosition& position,
                     const std::string&) -> std::optional<SpoilerMove> {
        std::vector<Element> moves = candidate_moves(position.order(Side::Left),
                                                     position.tuple(Side::Left),
                                                     position.rounds_left());
        if (moves.empty()) {
            moves = candidate_moves(position.order(Side::Right), position.tuple(Side::Right),
                                    position.rounds_left());
            if (moves.empty()) return std::nullopt;
            return SpoilerMove{Side::Right, moves.front()};
        }
        return SpoilerMove{Side::Left, moves.front()};
    };
    return play_interactive(start, source);
}

}  // namespace

IsotypyReport isotypy_report(const IsotypyReportParams& params) {
    require_lex_int_family(params.order_a, /*infinite_left=*/true);
    require_lex_int_family(params.order_b, /*infinite_left=*/true);
    if (params.max_len < 1 || params.window < 1 || params.depth < 0)
        throw std::invalid_argument("isotypy_report: max_len and window must be >= 1, depth >= 0");

    IsotypyReport report{params};

    std::vector<IsotypyPairRecord> passing;

    auto run_direction = [&](const OrderExpr& src, const OrderExpr& dst,
                             const std::string& direction) {
        std::vector<Element> window =
            enumerate_prefix(src, static_cast<std::uint64_t>(params.window));
        for (int length = 1; length <= params.max_len; ++length) {
            for_each_tuple(window, length, [&](const std::vector<Element>& tuple) {
                ++report.tuples_checked;
                IsotypyPairRecord record;
                record.direction = direction;
                record.source_tuple = tuple;
                record.source_profile = profile(src, tuple);

                std::vector<Element> realized =
                    realize_profile(dst, record.source_profile.entries);
                std::vector<Element> distinct = distinct_ascending(dst, realized);
                record.target_tuple = apply_pattern(rank_pattern(src, tuple), distinct);

                ++report.type_checks;
                record.types_match = types_equal(src, tuple, dst, record.target_tuple);

                GamePosition position(src, tuple, dst, record.target_tuple, params.depth);
                ++report.games_played;
                EfResult game = ef_decide(position);
                record.game_won = game.duplicator_wins;

                if (!record.types_match || !record.game_won) {
                    IsotypyFailure failure;
                    failure.pair = record;
                    failure.reason = !record.types_match
                                         ? "distance profiles or patterns diverge"
                                         : "spoiler wins the depth-" +
                                               std::to_string(params.depth) + " game";
                    failure.transcript = game.transcript;
                    report.failures.push_back(std::move(failure));
                } else {
                    passing.push_back(std::move(record));
                }
            });
        }
    };

    run_direction(params.order_a, params.order_b, "A->B");
    run_direction(params.order_b, params.order_a, "B->A");

    // Deterministic sample selection; the seed only picks which passing
    // pairs carry demonstration transcripts.
    if (!passing.empty() && params.sample_count > 0) {
        std::mt19937_64 rng(params.seed);
        std::vector<std::size_t> indices(passing.size());
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
        std::shuffle(indices.begin(), indices.end(), rng);
        std::size_t take = std::min(params.sample_count, indices.size());
        indices.resize(take);
        std::sort(indices.begin(), indices.end());
        for (std::size_t i : indices) {
            const IsotypyPairRecord& record = passing[i];
            const OrderExpr& src =
                record.direction == "A->B" ? params.order_a : params.order_b;
            const OrderExpr& dst =
                record.direction == "A->B" ? params.order_b : params.order_a;
            GamePosition position(src, record.source_tuple, dst, record.target_tuple,
                                  params.depth);
            report.samples.push_back(IsotypySample{record, demo_game(position)});
        }
    }

    report.pass = report.failures.empty();
    return report;
}

}  // namespace isotype
