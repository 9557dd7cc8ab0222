#include "invwilf/json_io.hpp"

namespace invwilf {

using nlohmann::json;

json trace_json(const TraceNode& node) {
    json steps = json::array();
    for (const auto& step : node.steps) {
        if (step.kind == TraceStep::Kind::Apply) {
            steps.push_back({{"type", "apply"},
                             {"inverse", step.inverse},
                             {"level_set", step.level_set},
                             {"input", format_word(step.input)},
                             {"output", format_word(step.output)},
                             {"occurrences_after", step.occurrences_after}});
        } else {
            steps.push_back({{"type", "child"}, {"node", trace_json(*step.child)}});
        }
    }
    return {{"from", node.from},
            {"to", node.to},
            {"inverse", node.inverse},
            {"level_set", node.level_set},
            {"steps", steps},
            {"final", format_word(node.final_word)}};
}

json audit_json(const AuditReport& report) {
    json reps = json::array();
    for (const auto& r : report.replacements)
        reps.push_back({{"position", r.position},
                        {"kind", to_string(r.kind)},
                        {"displaced", r.displaced}});
    return {{"family", family_name(report.family)},
            {"input", format_word(report.input)},
            {"output", format_word(report.output)},
            {"replacements", reps},
            {"transient_p_positions", report.transient_p_positions},
            {"checks", report.checks}};
}

json equivalence_json(const EquivalenceReport& report) {
    json j = {{"relation", report.relation == Relation::SuperStrong ? "superstrong" : "reciprocal"},
              {"p", report.p.str()},
              {"q", report.q.str()},
              {"n", report.n},
              {"holds", report.holds},
              {"note", report.note},
              {"witness", nullptr}};
    if (report.witness) {
        const auto& w = *report.witness;
        json jw = {{"S", w.S},
                   {"T", w.T},
                   {"count_forward", w.count_forward},
                   {"count_backward", w.count_backward}};
        if (w.example_forward) jw["example_forward"] = format_word(*w.example_forward);
        if (w.example_backward) jw["example_backward"] = format_word(*w.example_backward);
        j["witness"] = jw;
    }
    return j;
}

json classification_json(const ClassificationResult& result) {
    json classes = json::array();
    json singletons = json::array();
    for (const auto& c : result.classes) {
        if (c.size() > 1)
            classes.push_back(c);
        else
            singletons.push_back(c.front());
    }
    return {{"n", result.n},
            {"resolution_note", "classes computed from distributions over I_n at this n only"},
            {"classes", classes},
            {"singletons", singletons},
            {"matches_expected", result.matches_expected()}};
}

json distribution_json(const JointDistribution& dist) {
    json counts = json::array();
    for (const auto& [key, count] : dist.counts)
        counts.push_back({{"S", mask_to_positions(key.first)},
                          {"T", mask_to_positions(key.second)},
                          {"count", count}});
    return {{"p", dist.p.str()}, {"q", dist.q.str()}, {"n", dist.n}, {"counts", counts}};
}

}  // namespace invwilf
