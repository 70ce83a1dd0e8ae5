#include "isotype/json_io.hpp"

#include <json.hpp>

namespace isotype {

namespace {

using Json = nlohmann::ordered_json;

Json tuple_json(const std::vector<Element>& tuple) {
    Json out = Json::array();
    for (const auto& e : tuple) out.push_back(to_string(e));
    return out;
}

Json transcript_json(const Transcript& t) {
    Json game;
    game["left"] = {{"order", to_string(t.left_order)}, {"tuple", tuple_json(t.left_start)}};
    game["right"] = {{"order", to_string(t.right_order)}, {"tuple", tuple_json(t.right_start)}};
    game["rounds"] = t.rounds_budget;

    Json rounds = Json::array();
    for (const auto& round : t.rounds) {
        rounds.push_back({{"side", to_string(round.side)},
                          {"spoiler", to_string(round.spoiler)},
                          {"duplicator", to_string(round.duplicator)}});
    }

    Json out;
    out["game"] = std::move(game);
    out["rounds"] = std::move(rounds);
    out["verdict"] = t.duplicator_wins ? "duplicator-wins" : "spoiler-wins";
    if (t.violated_relation) {
        out["violated_relation"] = {{"i", t.violated_relation->i},
                                    {"j", t.violated_relation->j},
                                    {"left", to_string(t.violated_relation->left_relation)},
                                    {"right", to_string(t.violated_relation->right_relation)}};
    }
    return out;
}

Json profile_json(const DistanceProfile& p) {
    Json entries = Json::array();
    for (const auto& e : p.entries) entries.push_back(e.to_string());
    return Json{{"length", p.length}, {"sorted", p.sorted}, {"entries", std::move(entries)}};
}

Json pair_record_json(const IsotypyPairRecord& record) {
    Json out;
    out["direction"] = record.direction;
    out["source"] = tuple_json(record.source_tuple);
    out["target"] = tuple_json(record.target_tuple);
    out["profile"] = profile_json(record.source_profile);
    out["types_equal"] = record.types_match;
    out["duplicator_wins"] = record.game_won;
    return out;
}

}  // namespace

std::string transcript_to_json(const Transcript& transcript) {
    return transcript_json(transcript).dump();
}

std::string isotypy_report_to_json(const IsotypyReport& report) {
    Json out;
    out["params"] = {{"A", to_string(report.params.order_a)},
                     {"B", to_string(report.params.order_b)},
                     {"len", report.params.max_len},
                     {"window", report.params.window},
                     {"depth", report.params.depth},
                     {"seed", report.params.seed}};
    out["totals"] = {{"tuples", report.tuples_checked},
                     {"type_checks", report.type_checks},
                     {"games", report.games_played},
                     {"failures", report.failures.size()}};

    Json failures = Json::array();
    for (const auto& failure : report.failures) {
        Json f;
        f["pair"] = pair_record_json(failure.pair);
        f["reason"] = failure.reason;
        if (failure.transcript) f["transcript"] = transcript_json(*failure.transcript);
        failures.push_back(std::move(f));
    }
    out["failures"] = std::move(failures);

    Json samples = Json::array();
    for (const auto& sample : report.samples) {
        samples.push_back(Json{{"pair", pair_record_json(sample.pair)},
                               {"transcript", transcript_json(sample.demo)}});
    }
    out["samples"] = std::move(samples);
    out["pass"] = report.pass;
    return out.dump();
}

std::string witness_to_json(const NonIsomorphismWitness& witness) {
    Json out;
    out["conclusive"] = witness.conclusive;
    out["left_quotient"] = {{"order", to_string(witness.quotient_left)},
                            {"dense", witness.left_dense},
                            {"discrete", witness.left_discrete}};
    out["right_quotient"] = {{"order", to_string(witness.quotient_right)},
                             {"dense", witness.right_dense},
                             {"discrete", witness.right_discrete}};
    if (witness.conclusive) out["property"] = witness.property;
    return out.dump();
}

std::string pas_report_to_json(const PasReport& report) {
    Json terms = Json::array();
    for (const auto& check : report.terms) {
        terms.push_back(Json{{"term", check.term},
                             {"both_zero", check.both_zero},
                             {"zero_agree", check.zero_agree},
                             {"valuation_agrees", check.valuation_agrees},
                             {"angular_agrees", check.angular_agrees},
                             {"pass", check.pass}});
    }
    Json out;
    out["terms"] = std::move(terms);
    out["valuation_relations_agree"] = report.valuation_relations_agree;
    out["pass"] = report.pass;
    return out.dump();
}

}  // namespace isotype
