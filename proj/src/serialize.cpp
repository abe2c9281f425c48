#include "banditdp/serialize.hpp"

namespace banditdp {

using nlohmann::json;

void to_json(json& j, const Module& m) { j = json{{"id", m.id}, {"size", m.size}, {"defective", m.defective}}; }

void from_json(const json& j, Module& m) {
    j.at("id").get_to(m.id);
    j.at("size").get_to(m.size);
    j.at("defective").get_to(m.defective);
}

void to_json(json& j, const Dataset& d) { j = json{{"modules", d.modules}}; }
void from_json(const json& j, Dataset& d) { j.at("modules").get_to(d.modules); }

void to_json(json& j, const Arm& a) { j = json{{"name", a.name}, {"predictions", a.predictions}}; }

void from_json(const json& j, Arm& a) {
    j.at("name").get_to(a.name);
    j.at("predictions").get_to(a.predictions);
}

void to_json(json& j, const PolicyChoice& p) {
    if (const auto* eg = std::get_if<EpsilonGreedy>(&p))
        j = json{{"type", "egreedy"}, {"epsilon", eg->epsilon}};
    else
        j = json{{"type", "ucb"}};
}

void from_json(const json& j, PolicyChoice& p) {
    const auto type = j.at("type").get<std::string>();
    if (type == "egreedy")
        p = EpsilonGreedy{j.at("epsilon").get<double>()};
    else if (type == "ucb")
        p = Ucb{};
    else
        throw ValidationError("unknown policy type '" + type + "'");
}

void to_json(json& j, const SimConfig& c) {
    j = json{{"policy", c.policy},
             {"strategy", to_string(c.strategy)},
             {"effort_ratio", c.effort_ratio},
             {"effort_constant", c.effort_constant},
             {"type2_prob", c.type2_prob},
             {"banp_fraction", c.banp_fraction},
             {"seed", c.seed},
             {"repetitions", c.repetitions}};
}

void from_json(const json& j, SimConfig& c) {
    j.at("policy").get_to(c.policy);
    c.strategy = parse_strategy(j.at("strategy").get<std::string>());
    j.at("effort_ratio").get_to(c.effort_ratio);
    j.at("effort_constant").get_to(c.effort_constant);
    j.at("type2_prob").get_to(c.type2_prob);
    j.at("banp_fraction").get_to(c.banp_fraction);
    j.at("seed").get_to(c.seed);
    j.at("repetitions").get_to(c.repetitions);
}

void to_json(json& j, const StreamingConfusion& c) {
    j = json{{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}};
}

void from_json(const json& j, StreamingConfusion& c) {
    j.at("tp").get_to(c.tp);
    j.at("fp").get_to(c.fp);
    j.at("tn").get_to(c.tn);
    j.at("fn").get_to(c.fn);
}

void to_json(json& j, const StepRecord& s) {
    j = json{{"step_index", s.step_index},
             {"module_id", s.module_id},
             {"selected_arm", s.selected_arm ? json(*s.selected_arm) : json(nullptr)},
             {"arm_prediction", s.arm_prediction ? json(*s.arm_prediction) : json(nullptr)},
             {"effective_prediction", s.effective_prediction},
             {"observed_outcome", s.observed_outcome},
             {"true_label", s.true_label},
             {"overlook", to_string(s.overlook)},
             {"effort_charged", s.effort_charged},
             {"per_arm_auc_after", s.per_arm_auc_after}};
}

void from_json(const json& j, StepRecord& s) {
    j.at("step_index").get_to(s.step_index);
    j.at("module_id").get_to(s.module_id);
    const auto& sel = j.at("selected_arm");
    s.selected_arm = sel.is_null() ? std::nullopt : std::optional<std::size_t>(sel.get<std::size_t>());
    const auto& ap = j.at("arm_prediction");
    s.arm_prediction = ap.is_null() ? std::nullopt : std::optional<bool>(ap.get<bool>());
    j.at("effective_prediction").get_to(s.effective_prediction);
    j.at("observed_outcome").get_to(s.observed_outcome);
    j.at("true_label").get_to(s.true_label);
    s.overlook = parse_overlook(j.at("overlook").get<std::string>());
    j.at("effort_charged").get_to(s.effort_charged);
    j.at("per_arm_auc_after").get_to(s.per_arm_auc_after);
}

void to_json(json& j, const RunResult& r) {
    j = json{{"steps", r.steps},
             {"final_auc_vs_truth", r.final_auc_vs_truth},
             {"raw_auc_vs_truth", r.raw_auc_vs_truth},
             {"total_effort", r.total_effort},
             {"found_defects", r.found_defects},
             {"true_positive_predictions", r.true_positive_predictions},
             {"positive_predictions", r.positive_predictions},
             {"defects_overlooked_type1", r.defects_overlooked_type1},
             {"defects_overlooked_type2", r.defects_overlooked_type2},
             {"warmup_steps", r.warmup_steps},
             {"per_arm_final_auc", r.per_arm_final_auc}};
}

void from_json(const json& j, RunResult& r) {
    j.at("steps").get_to(r.steps);
    j.at("final_auc_vs_truth").get_to(r.final_auc_vs_truth);
    j.at("raw_auc_vs_truth").get_to(r.raw_auc_vs_truth);
    j.at("total_effort").get_to(r.total_effort);
    j.at("found_defects").get_to(r.found_defects);
    j.at("true_positive_predictions").get_to(r.true_positive_predictions);
    j.at("positive_predictions").get_to(r.positive_predictions);
    j.at("defects_overlooked_type1").get_to(r.defects_overlooked_type1);
    j.at("defects_overlooked_type2").get_to(r.defects_overlooked_type2);
    j.at("warmup_steps").get_to(r.warmup_steps);
    j.at("per_arm_final_auc").get_to(r.per_arm_final_auc);
}

}  // namespace banditdp
