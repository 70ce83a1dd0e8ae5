#include "isotype/efgame.hpp"

#include <algorithm>
#include <stdexcept>

#include "isotype/errors.hpp"

namespace isotype {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// ---- GamePosition ------------------------------------------------------------

GamePosition::GamePosition(OrderExpr left_order, std::vector<Element> left_tuple,
                           OrderExpr right_order, std::vector<Element> right_tuple,
                           int rounds_left)
    : left_order_(std::move(left_order)),
      right_order_(std::move(right_order)),
      left_tuple_(std::move(left_tuple)),
      right_tuple_(std::move(right_tuple)),
      rounds_left_(rounds_left) {
    if (left_tuple_.size() != right_tuple_.size())
        throw std::invalid_argument("game position tuples must have equal length");
    if (rounds_left_ < 0) throw std::invalid_argument("rounds_left must be non-negative");
    for (const auto& e : left_tuple_) require_belongs(left_order_, e);
    for (const auto& e : right_tuple_) require_belongs(right_order_, e);
}

GamePosition GamePosition::after_round(Side side, const Element& spoiler_move,
                                       const Element& duplicator_reply) const {
    if (rounds_left_ < 1) throw std::invalid_argument("no rounds left to play");
    std::vector<Element> lt = left_tuple_, rt = right_tuple_;
    (side == Side::Left ? lt : rt).push_back(spoiler_move);
    (side == Side::Left ? rt : lt).push_back(duplicator_reply);
    return GamePosition(left_order_, std::move(lt), right_order_, std::move(rt),
                        rounds_left_ - 1);
}

// ---- win condition -----------------------------------------------------------

std::optional<ViolatedRelation> find_violation(const GamePosition& position) {
    const auto& lt = position.tuple(Side::Left);
    const auto& rt = position.tuple(Side::Right);
    for (std::size_t i = 0; i < lt.size(); ++i) {
        for (std::size_t j = i + 1; j < lt.size(); ++j) {
            Ordering l = compare(position.order(Side::Left), lt[i], lt[j]);
            Ordering r = compare(position.order(Side::Right), rt[i], rt[j]);
            if (l != r) return ViolatedRelation{i, j, l, r};
        }
    }
    return std::nullopt;
}

bool position_won(const GamePosition& position) { return !find_violation(position).has_value(); }

// ---- candidate moves ----------------------------------------------------------

namespace {

Element base_element(const OrderExpr& order) { return *element_at(order, 0); }

void push_if(std::vector<Element>& out, std::optional<Element> e) {
    if (e) out.push_back(std::move(*e));
}

std::vector<Element> sorted_distinct(const OrderExpr& order, std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end(), [&order](const Element& a, const Element& b) {
        return compare(order, a, b) == Ordering::LT;
    });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

}  // namespace

std::vector<Element> candidate_moves(const OrderExpr& order, const std::vector<Element>& anchors,
                                     int rounds) {
    if (rounds < 1) throw std::invalid_argument("candidate_moves requires rounds >= 1");
    if (rounds > 20) throw std::invalid_argument("candidate_moves: rounds too large");
    const long long cap = 1LL << rounds;       // exact-distance horizon 2^n
    const std::uint64_t deep = 2 * cap + 1;    // canonical depth beyond the horizon

    for (const auto& a : anchors) require_belongs(order, a);
    std::vector<Element> sorted = sorted_distinct(order, anchors);

    std::vector<Element> out;
    for (const auto& anchor : sorted) {
        Element up = anchor;
        for (long long d = 1; d <= cap; ++d) {
            auto next = successor(order, up);
            if (!next) break;
            up = std::move(*next);
            out.push_back(up);
        }
        Element down = anchor;
        for (long long d = 1; d <= cap; ++d) {
            auto prev = predecessor(order, down);
            if (!prev) break;
            down = std::move(*prev);
            out.push_back(down);
        }
    }

    if (sorted.empty()) {
        out.push_back(base_element(order));
    } else {
        push_if(out, far_below(order, sorted.front(), deep));
        push_if(out, far_above(order, sorted.back(), deep));
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            push_if(out, deep_in_gap(order, sorted[i], sorted[i + 1],
                                     static_cast<std::uint64_t>(cap) + 1));
        }
    }

    if (order.kind() == OrderExpr::Kind::Lex) {
        const OrderExpr& classes = order.left();
        std::vector<Element> anchor_classes;
        anchor_classes.reserve(sorted.size());
        for (const auto& a : sorted) anchor_classes.push_back(a.first());
        anchor_classes = sorted_distinct(classes, std::move(anchor_classes));

        std::vector<Element> fresh;
        if (!anchor_classes.empty()) {
            push_if(fresh, pick_below(classes, anchor_classes.front()));
            push_if(fresh, far_below(classes, anchor_classes.front(), deep));
            push_if(fresh, pick_above(classes, anchor_classes.back()));
            push_if(fresh, far_above(classes, anchor_classes.back(), deep));
            for (std::size_t i = 0; i + 1 < anchor_classes.size(); ++i) {
                push_if(fresh, pick_between(classes, anchor_classes[i], anchor_classes[i + 1]));
                push_if(fresh, deep_in_gap(classes, anchor_classes[i], anchor_classes[i + 1],
                                           static_cast<std::uint64_t>(cap) + 1));
            }
        }
        Element base_right = base_element(order.right());
        for (auto& c : fresh) out.push_back(Element::pair(std::move(c), base_right));
    }

    // Drop anchors themselves, sort, dedupe.
    std::vector<Element> cleaned;
    cleaned.reserve(out.size());
    for (auto& e : out) {
        bool is_anchor = false;
        for (const auto& a : sorted) {
            if (e == a) {
                is_anchor = true;
                break;
            }
        }
        if (!is_anchor) cleaned.push_back(std::move(e));
    }
    return sorted_distinct(order, std::move(cleaned));
}

// ---- duplicator reply ----------------------------------------------------------

namespace {

ExtNat truncation_threshold(int rounds_left) {
    return ExtNat::of(1ULL << rounds_left);
}

// Pattern part only: the reply realizes the spoiler move's order relations
// against every anchor pair.
bool pattern_consistent(const OrderExpr& move_order, const std::vector<Element>& move_anchors,
                        const Element& move, const OrderExpr& reply_order,
                        const std::vector<Element>& reply_anchors, const Element& reply) {
    for (std::size_t i = 0; i < move_anchors.size(); ++i) {
        if (compare(move_order, move, move_anchors[i]) !=
            compare(reply_order, reply, reply_anchors[i]))
            return false;
    }
    return true;
}

// Full validity: pattern plus distances truncated at the threshold.
bool valid_reply(const OrderExpr& move_order, const std::vector<Element>& move_anchors,
                 const Element& move, const OrderExpr& reply_order,
                 const std::vector<Element>& reply_anchors, const Element& reply,
                 ExtNat threshold) {
    for (std::size_t i = 0; i < move_anchors.size(); ++i) {
        if (compare(move_order, move, move_anchors[i]) !=
            compare(reply_order, reply, reply_anchors[i]))
            return false;
        ExtNat dm = dist(move_order, move, move_anchors[i]);
        ExtNat dr = dist(reply_order, reply, reply_anchors[i]);
        if (dm < threshold || dr < threshold) {
            if (dm != dr) return false;
        }
    }
    return true;
}

// Anchor correspondence in sorted order with duplicates collapsed: position
// k of the result pairs the k-th smallest distinct value on each side.
// Consistent positions sort compatibly, so the pairing is well defined.
struct SortedAnchors {
    std::vector<Element> move_side, reply_side;
};

SortedAnchors sorted_anchor_pairs(const OrderExpr& move_order,
                                  const std::vector<Element>& move_anchors,
                                  const OrderExpr& reply_order,
                                  const std::vector<Element>& reply_anchors) {
    std::vector<std::size_t> idx(move_anchors.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return compare(move_order, move_anchors[a], move_anchors[b]) == Ordering::LT;
    });
    SortedAnchors out;
    for (std::size_t i : idx) {
        if (!out.move_side.empty() && out.move_side.back() == move_anchors[i]) continue;
        out.move_side.push_back(move_anchors[i]);
        out.reply_side.push_back(reply_anchors[i]);
    }
    return out;
}

// Fast strategy construction: mirror the move's gap location and truncated
// distances on the reply side. Returns nullopt when the construction fails
// validation (callers fall back to scanning the candidate set).
std::optional<Element> mirror_reply(const OrderExpr& move_order,
                                    const std::vector<Element>& move_anchors,
                                    const OrderExpr& reply_order,
                                    const std::vector<Element>& reply_anchors,
                                    const Element& move, int rounds_left) {
    const ExtNat threshold = truncation_threshold(rounds_left);
    const std::uint64_t t = 1ULL << rounds_left;
    SortedAnchors pairs =
        sorted_anchor_pairs(move_order, move_anchors, reply_order, reply_anchors);

    std::optional<Element> candidate;
    std::size_t below = 0;  // anchors strictly below the move
    bool replay = false;
    for (std::size_t k = 0; k < pairs.move_side.size(); ++k) {
        Ordering rel = compare(move_order, move, pairs.move_side[k]);
        if (rel == Ordering::EQ) {
            candidate = pairs.reply_side[k];
            replay = true;
            break;
        }
        if (rel == Ordering::GT) below = k + 1;
    }

    if (!replay) {
        const bool has_lower = below > 0;
        const bool has_upper = below < pairs.move_side.size();
        std::optional<ExtNat> down_dist, up_dist;
        if (has_lower) down_dist = dist(move_order, pairs.move_side[below - 1], move);
        if (has_upper) up_dist = dist(move_order, move, pairs.move_side[below]);

        if (has_lower && *down_dist < threshold) {
            candidate = advance(reply_order, pairs.reply_side[below - 1],
                                static_cast<long long>(down_dist->value()));
        } else if (has_upper && *up_dist < threshold) {
            candidate = advance(reply_order, pairs.reply_side[below],
                                -static_cast<long long>(up_dist->value()));
        } else if (has_lower && has_upper) {
            candidate = deep_in_gap(reply_order, pairs.reply_side[below - 1],
                                    pairs.reply_side[below], t);
        } else if (has_lower) {
            candidate = far_above(reply_order, pairs.reply_side[below - 1], t);
        } else if (has_upper) {
            candidate = far_below(reply_order, pairs.reply_side[below], t);
        } else {
            candidate = base_element(reply_order);
        }
    }

    if (candidate && valid_reply(move_order, move_anchors, move, reply_order, reply_anchors,
                                 *candidate, threshold)) {
        return candidate;
    }
    return std::nullopt;
}

Element min_by_enum_index(const OrderExpr& order, const std::vector<Element>& elements) {
    const Element* best = &elements.front();
    BigInt best_index = enum_index(order, *best);
    for (std::size_t i = 1; i < elements.size(); ++i) {
        BigInt idx = enum_index(order, elements[i]);
        if (idx < best_index) {
            best_index = idx;
            best = &elements[i];
        }
    }
    return *best;
}

std::vector<Element> reply_pool(const OrderExpr& reply_order,
                                const std::vector<Element>& reply_anchors, int rounds_left) {
    std::vector<Element> pool = candidate_moves(reply_order, reply_anchors, rounds_left);
    pool.insert(pool.end(), reply_anchors.begin(), reply_anchors.end());
    return sorted_distinct(reply_order, std::move(pool));
}

}  // namespace

Element duplicator_reply(const GamePosition& position, Side side, const Element& move) {
    if (position.rounds_left() < 1)
        throw std::invalid_argument("duplicator_reply requires rounds_left >= 1");
    const OrderExpr& move_order = position.order(side);
    const OrderExpr& reply_order = position.order(opposite(side));
    require_belongs(move_order, move);
    const auto& move_anchors = position.tuple(side);
    const auto& reply_anchors = position.tuple(opposite(side));
    const ExtNat threshold = truncation_threshold(position.rounds_left());

    std::vector<Element> valid;
    for (const auto& r : reply_pool(reply_order, reply_anchors, position.rounds_left())) {
        if (valid_reply(move_order, move_anchors, move, reply_order, reply_anchors, r, threshold))
            valid.push_back(r);
    }
    if (valid.empty()) {
        throw StrategyFailure("no reply matches the move's pattern and truncated distances for " +
                              to_string(move) + " on the " + to_string(side));
    }
    return min_by_enum_index(reply_order, valid);
}

// ---- game search ----------------------------------------------------------------

namespace {

// Exhaustive minimax over candidate moves. Tuples are mutated in place along
// the recursion; consistency (position_won of the running tuples) is an
// invariant maintained incrementally.
class Searcher {
public:
    explicit Searcher(const GamePosition& start)
        : left_order_(start.order(Side::Left)),
          right_order_(start.order(Side::Right)),
          left_(start.tuple(Side::Left)),
          right_(start.tuple(Side::Right)) {}

    bool duplicator_wins(int rounds_left, std::vector<TranscriptRound>* line) {
        if (rounds_left == 0) return true;
        if (rounds_left == 1 && !line) return last_round_safe();

        // One candidate generation per side per node; the reply pools are
        // the same sets plus the anchors.
        std::vector<Element> cand[2], pool[2];
        for (Side side : {Side::Left, Side::Right}) {
            std::size_t k = side == Side::Left ? 0 : 1;
            cand[k] = candidate_moves(order(side), tuple(side), rounds_left);
            pool[k] = cand[k];
            pool[k].insert(pool[k].end(), tuple(side).begin(), tuple(side).end());
            pool[k] = sorted_distinct(order(side), std::move(pool[k]));
        }

        for (Side side : {Side::Left, Side::Right}) {
            const OrderExpr& move_order = order(side);
            const OrderExpr& reply_order = order(opposite(side));
            std::vector<Element>& move_tuple = tuple(side);
            std::vector<Element>& reply_tuple = tuple(opposite(side));

            const std::vector<Element>& moves = cand[side == Side::Left ? 0 : 1];
            const std::vector<Element>& reply_candidates = pool[side == Side::Left ? 1 : 0];

            for (const Element& move : moves) {
                if (answerable(side, move, reply_candidates, rounds_left)) continue;

                // Spoiler wins with this move; extend the losing line with the
                // duplicator's policy reply if a transcript was requested.
                if (line) {
                    Element reply = policy_reply(side, move, reply_candidates, rounds_left);
                    line->push_back(TranscriptRound{side, move, reply});
                    move_tuple.push_back(move);
                    reply_tuple.push_back(reply);
                    if (consistent_with_last(side)) {
                        duplicator_wins(rounds_left - 1, line);  // known false; extends the line
                    }
                    move_tuple.pop_back();
                    reply_tuple.pop_back();
                }
                return false;
            }
        }
        return true;
    }

    GamePosition position(int rounds_left) const {
        return GamePosition(left_order_, left_, right_order_, right_, rounds_left);
    }

private:
    const OrderExpr& order(Side s) const { return s == Side::Left ? left_order_ : right_order_; }
    std::vector<Element>& tuple(Side s) { return s == Side::Left ? left_ : right_; }

    // The new pair is consistent with the existing anchors (the rest of the
    // position is consistent by invariant).
    bool consistent_with_last(Side move_side) {
        const auto& mt = tuple(move_side);
        const auto& rt = tuple(opposite(move_side));
        const Element& move = mt.back();
        const Element& reply = rt.back();
        for (std::size_t i = 0; i + 1 < mt.size(); ++i) {
            if (compare(order(move_side), move, mt[i]) !=
                compare(order(opposite(move_side)), reply, rt[i]))
                return false;
        }
        return true;
    }

    // Structural last round: the duplicator survives iff every nonempty gap
    // of the anchors (outer rays included) has a nonempty counterpart on the
    // other side. Every nonempty gap of a catalog order contains a candidate
    // move, so this matches the candidate-restricted game exactly — the
    // cross-validation against unrestricted search exercises that claim.
    bool last_round_safe() {
        for (Side side : {Side::Left, Side::Right}) {
            const OrderExpr& mo = order(side);
            const OrderExpr& ro = order(opposite(side));
            SortedAnchors pairs = sorted_anchor_pairs(mo, tuple(side), ro, tuple(opposite(side)));
            if (pairs.move_side.empty()) continue;

            if (pick_below(mo, pairs.move_side.front()).has_value() &&
                !pick_below(ro, pairs.reply_side.front()).has_value())
                return false;
            if (pick_above(mo, pairs.move_side.back()).has_value() &&
                !pick_above(ro, pairs.reply_side.back()).has_value())
                return false;
            for (std::size_t k = 0; k + 1 < pairs.move_side.size(); ++k) {
                if (pick_between(mo, pairs.move_side[k], pairs.move_side[k + 1]).has_value() &&
                    !pick_between(ro, pairs.reply_side[k], pairs.reply_side[k + 1]).has_value())
                    return false;
            }
        }
        return true;
    }

    // Does some duplicator reply keep the game winnable?
    bool answerable(Side side, const Element& move, const std::vector<Element>& pool,
                    int rounds_left) {
        const OrderExpr& move_order = order(side);
        const OrderExpr& reply_order = order(opposite(side));
        std::vector<Element>& move_tuple = tuple(side);
        std::vector<Element>& reply_tuple = tuple(opposite(side));

        if (rounds_left == 1) {
            // Last round: any pattern-preserving reply wins.
            for (const Element& reply : pool) {
                if (pattern_consistent(move_order, move_tuple, move, reply_order, reply_tuple,
                                       reply))
                    return true;
            }
            return false;
        }

        auto try_reply = [&](const Element& reply) {
            move_tuple.push_back(move);
            reply_tuple.push_back(reply);
            bool won = duplicator_wins(rounds_left - 1, nullptr);
            move_tuple.pop_back();
            reply_tuple.pop_back();
            return won;
        };

        // The strategy construction almost always wins immediately; scan the
        // full pool only when it does not apply.
        std::optional<Element> mirrored = mirror_reply(move_order, move_tuple, reply_order,
                                                       reply_tuple, move, rounds_left);
        if (mirrored && try_reply(*mirrored)) return true;
        for (const Element& reply : pool) {
            if (mirrored && reply == *mirrored) continue;
            if (!pattern_consistent(move_order, move_tuple, move, reply_order, reply_tuple,
                                    reply))
                continue;
            if (try_reply(reply)) return true;
        }
        return false;
    }

    // Deterministic reply recorded on losing lines: the duplicator_reply
    // pick when some reply is valid, otherwise the earliest
    // pattern-consistent pool element, otherwise the earliest pool element.
    Element policy_reply(Side side, const Element& move, const std::vector<Element>& pool,
                         int rounds_left) {
        const OrderExpr& move_order = order(side);
        const OrderExpr& reply_order = order(opposite(side));
        const ExtNat threshold = truncation_threshold(rounds_left);
        std::vector<Element> valid, consistent;
        for (const Element& reply : pool) {
            if (valid_reply(move_order, tuple(side), move, reply_order, tuple(opposite(side)),
                            reply, threshold))
                valid.push_back(reply);
            else if (pattern_consistent(move_order, tuple(side), move, reply_order,
                                        tuple(opposite(side)), reply))
                consistent.push_back(reply);
        }
        if (!valid.empty()) return min_by_enum_index(reply_order, valid);
        if (!consistent.empty()) return min_by_enum_index(reply_order, consistent);
        return min_by_enum_index(reply_order, pool);
    }

    OrderExpr left_order_, right_order_;
    std::vector<Element> left_, right_;
};

Transcript make_transcript(const GamePosition& start) {
    return Transcript{start.order(Side::Left),  start.order(Side::Right),
                      start.tuple(Side::Left),  start.tuple(Side::Right),
                      start.rounds_left(),      {},
                      false,                    std::nullopt};
}

}  // namespace

EfResult ef_decide(const GamePosition& position) {
    EfResult result;
    if (!position_won(position)) {
        Transcript t = make_transcript(position);
        t.duplicator_wins = false;
        t.violated_relation = find_violation(position);
        result.duplicator_wins = false;
        result.transcript = std::move(t);
        return result;
    }

    Searcher searcher(position);
    if (searcher.duplicator_wins(position.rounds_left(), nullptr)) {
        result.duplicator_wins = true;
        return result;
    }

    Transcript t = make_transcript(position);
    Searcher liner(position);
    liner.duplicator_wins(position.rounds_left(), &t.rounds);
    GamePosition final_position = replay_transcript(t);
    t.duplicator_wins = false;
    t.violated_relation = find_violation(final_position);
    result.duplicator_wins = false;
    result.transcript = std::move(t);
    return result;
}

GamePosition replay_transcript(const Transcript& transcript) {
    GamePosition position(transcript.left_order, transcript.left_start, transcript.right_order,
                          transcript.right_start, transcript.rounds_budget);
    for (const auto& round : transcript.rounds) {
        position = position.after_round(round.side, round.spoiler, round.duplicator);
    }
    return position;
}

Transcript play_interactive(const GamePosition& start, const SpoilerMoveSource& source) {
    Transcript t = make_transcript(start);
    GamePosition position = start;
    std::string error;

    if (!position_won(position)) {
        t.duplicator_wins = false;
        t.violated_relation = find_violation(position);
        return t;
    }

    bool strategy_failed = false;
    while (position.rounds_left() > 0 && !strategy_failed) {
        auto move = source(position, error);
        error.clear();
        if (!move) break;  // source closed: score what has been played
        if (!belongs(position.order(move->side), move->element)) {
            error = "illegal move: " + to_string(move->element) + " is not an element of " +
                    to_string(position.order(move->side));
            continue;
        }
        Element reply;
        try {
            reply = duplicator_reply(position, move->side, move->element);
        } catch (const StrategyFailure&) {
            // Cornered: play the best-effort reply and score the position.
            strategy_failed = true;
            std::vector<Element> pool = reply_pool(position.order(opposite(move->side)),
                                                   position.tuple(opposite(move->side)),
                                                   position.rounds_left());
            std::vector<Element> consistent;
            for (const Element& r : pool) {
                if (pattern_consistent(position.order(move->side), position.tuple(move->side),
                                       move->element, position.order(opposite(move->side)),
                                       position.tuple(opposite(move->side)), r))
                    consistent.push_back(r);
            }
            reply = min_by_enum_index(position.order(opposite(move->side)),
                                      consistent.empty() ? pool : consistent);
        }
        position = position.after_round(move->side, move->element, reply);
        t.rounds.push_back(TranscriptRound{move->side, move->element, reply});
        if (!position_won(position)) break;
    }

    t.duplicator_wins = position_won(position);
    t.violated_relation = find_violation(position);
    return t;
}

}  // namespace isotype
