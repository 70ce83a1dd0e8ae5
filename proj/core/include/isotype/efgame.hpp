#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isotype/orders.hpp"

namespace isotype {

enum class Side { Left, Right };

std::string to_string(Side s);
Side opposite(Side s);

// A position of the Ehrenfeucht-Fraisse game on two linear orders with
// parameters: paired tuples of equal length plus the number of rounds still
// to play. Tuples are validated against their orders on construction.
class GamePosition {
public:
    GamePosition(OrderExpr left_order, std::vector<Element> left_tuple, OrderExpr right_order,
                 std::vector<Element> right_tuple, int rounds_left);

    const OrderExpr& order(Side s) const {
        return s == Side::Left ? left_order_ : right_order_;
    }
    const std::vector<Element>& tuple(Side s) const {
        return s == Side::Left ? left_tuple_ : right_tuple_;
    }
    int rounds_left() const { return rounds_left_; }

    // Position after one round: the spoiler move appended on `side`, the
    // reply on the other, one round fewer.
    GamePosition after_round(Side side, const Element& spoiler_move,
                             const Element& duplicator_reply) const;

private:
    OrderExpr left_order_, right_order_;
    std::vector<Element> left_tuple_, right_tuple_;
    int rounds_left_;
};

// The atomic relation a spoiler win exhibits: positions i, j whose order
// relation differs between the two sides.
struct ViolatedRelation {
    std::size_t i = 0, j = 0;
    Ordering left_relation = Ordering::EQ;
    Ordering right_relation = Ordering::EQ;
};

struct TranscriptRound {
    Side side;            // where the spoiler played
    Element spoiler;
    Element duplicator;   // reply in the opposite structure
};

// Record of a played or searched game. A spoiler-wins transcript is a
// replayable line: feeding the rounds back into the initial position ends in
// a position where position_won is false, witnessed by violated_relation.
struct Transcript {
    OrderExpr left_order, right_order;
    std::vector<Element> left_start, right_start;
    int rounds_budget = 0;
    std::vector<TranscriptRound> rounds;
    bool duplicator_wins = false;
    std::optional<ViolatedRelation> violated_relation;
};

// 0-equivalence of the current tuples: every pair of positions carries the
// same order relation on both sides.
bool position_won(const GamePosition& position);

// The first violated relation, if any.
std::optional<ViolatedRelation> find_violation(const GamePosition& position);

// Finite spoiler move space around the anchors for an n-round game:
// elements at each distance 1..2^n on both sides of every anchor, one deep
// element per gap and outer ray (distance > 2^n from the endpoints), and for
// lex orders representatives of fresh left-coordinate classes below, between
// and above the anchor classes. Anchors themselves are excluded. Sorted
// ascending; deterministic.
std::vector<Element> candidate_moves(const OrderExpr& order, const std::vector<Element>& anchors,
                                     int rounds);

// The duplicator's reply to a spoiler move: an element of the opposite
// structure with the same order pattern against the anchors and the same
// distances truncated at 2^rounds_left (values at or above the threshold,
// including ∞, are interchangeable). Among valid replies returns the one
// earliest in the canonical enumeration; throws StrategyFailure when none
// exists.
Element duplicator_reply(const GamePosition& position, Side side, const Element& move);

struct EfResult {
    bool duplicator_wins = false;
    // Populated on spoiler wins with a line that replays to a lost position.
    std::optional<Transcript> transcript;
};

// Decide the N-round game by exhaustive minimax with spoiler moves drawn
// from candidate_moves on either side.
EfResult ef_decide(const GamePosition& position);

// Replay a transcript from its initial position; returns the final position.
GamePosition replay_transcript(const Transcript& transcript);

struct SpoilerMove {
    Side side;
    Element element;
};

// Supplies one spoiler move per round; `error` carries the rejection message
// when the previous attempt was illegal. Returning nullopt ends the game
// early (scored by position_won on the current tuples).
using SpoilerMoveSource =
    std::function<std::optional<SpoilerMove>(const GamePosition& position,
                                             const std::string& error)>;

// Play a full game: the source supplies spoiler moves (illegal moves are
// re-prompted), the machine duplicator replies with duplicator_reply. The
// verdict is position_won at exhaustion, or spoiler-wins at strategy
// failure.
Transcript play_interactive(const GamePosition& start, const SpoilerMoveSource& source);

}  // namespace isotype
