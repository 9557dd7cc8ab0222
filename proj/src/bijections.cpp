#include "invwilf/bijections.hpp"

#include <sstream>

namespace invwilf {

namespace {

long long bump(long long& calls, const PhiOptions& opts) {
    if (++calls > opts.guard) throw TerminationGuardExceeded(opts.guard);
    return calls;
}

void check_level_contained(const OccurrenceSet& T, const OccurrenceSet& S, const Word& cur) {
    if (!subset_of(T, S))
        throw LevelSetNotContained("level " + format_positions(T) + ", observed " +
                                   format_positions(S) + " on " + format_word(cur));
}

TraceNode run_traced(const Word& s, const ChangeRule& rule, long long& calls,
                     const PhiOptions& opts) {
    TraceNode node;
    node.from = rule.source.str();
    node.to = rule.target.str();
    node.inverse = rule.reversed_of_canonical;
    const OccurrenceSet T = occurrences(rule.source, s);
    node.level_set = T;

    auto apply = [&](const Word& in) {
        Word out = phi_geq(in, T, rule);
        bump(calls, opts);
        TraceStep step;
        step.kind = TraceStep::Kind::Apply;
        step.inverse = rule.reversed_of_canonical;
        step.level_set = T;
        step.input = in;
        step.output = out;
        step.occurrences_after = occurrences(rule.target, out);
        node.steps.push_back(std::move(step));
        return out;
    };

    Word cur = apply(s);
    const ChangeRule rev = reversed_rule(rule);
    while (true) {
        OccurrenceSet S = occurrences(rule.target, cur);
        check_level_contained(T, S, cur);
        if (S == T) {
            node.final_word = cur;
            return node;
        }
        TraceNode child = run_traced(cur, rev, calls, opts);
        cur = child.final_word;
        TraceStep step;
        step.kind = TraceStep::Kind::Child;
        step.child = std::make_unique<TraceNode>(std::move(child));
        node.steps.push_back(std::move(step));
        cur = apply(cur);
    }
}

Word run_lean(const Word& s, const ChangeRule& rule, const ChangeRule& rev, long long& calls,
              const PhiOptions& opts, int depth, int* max_depth) {
    const OccurrenceSet T = occurrences(rule.source, s);
    Word cur = phi_geq(s, T, rule);
    bump(calls, opts);
    while (true) {
        OccurrenceSet S = occurrences(rule.target, cur);
        check_level_contained(T, S, cur);
        if (S == T) return cur;
        if (max_depth && depth + 1 > *max_depth) *max_depth = depth + 1;
        cur = run_lean(cur, rev, rule, calls, opts, depth + 1, max_depth);
        cur = phi_geq(cur, T, rule);
        bump(calls, opts);
    }
}

}  // namespace

int TraceNode::depth() const {
    int d = 0;
    for (const auto& step : steps)
        if (step.kind == TraceStep::Kind::Child) d = std::max(d, 1 + step.child->depth());
    return d;
}

PhiResult phi_eq(const Word& s, const ChangeRule& rule, const PhiOptions& opts) {
    PhiResult result;
    result.calls = 0;
    TraceNode node = run_traced(s, rule, result.calls, opts);
    result.output = node.final_word;
    result.trace = std::make_unique<TraceNode>(std::move(node));
    return result;
}

Word phi_eq_image(const Word& s, const ChangeRule& rule, long long* calls, int* max_depth,
                  const PhiOptions& opts) {
    long long c = 0;
    if (max_depth) *max_depth = 0;
    Word out = run_lean(s, rule, reversed_rule(rule), c, opts, 0, max_depth);
    if (calls) *calls = c;
    return out;
}

void validate_iterative_rule(const ChangeRule& rule) {
    if (rule.kind != ChangeKind::Generic)
        throw RuleNotNonOverlapping(rule.source.str() + " -> " + rule.target.str() +
                                    " is not a simultaneous-change pair");
    if (!is_nonoverlapping(rule.source) || !is_nonoverlapping(rule.target) ||
        !mutually_nonoverlapping(rule.source, rule.target))
        throw RuleNotNonOverlapping(rule.source.str() + " -> " + rule.target.str());
}

Word iterative_map(const Word& s, const ChangeRule& rule, const PhiOptions& opts) {
    validate_iterative_rule(rule);
    const ChangeRule rev = reversed_rule(rule);
    const OccurrenceSet T = occurrences(rule.source, s);
    Word cur = phi_geq(s, T, rule);
    long long applications = 1;
    while (true) {
        OccurrenceSet D = set_difference(occurrences(rule.target, cur), T);
        if (D.empty()) return cur;
        cur = phi_geq(cur, D, rev);
        if (++applications > opts.guard) throw TerminationGuardExceeded(opts.guard);
    }
}

std::tuple<Word, Word, Word> naive_iteration_collision_demo() {
    const ChangeRule rule = make_rule(Pattern::parse("0102"), Pattern::parse("0112"));
    const ChangeRule rev = reversed_rule(rule);
    auto naive = [&](Word s) {
        const OccurrenceSet T = occurrences(rule.source, s);
        Word cur = phi_geq(s, T, rule);
        while (true) {
            OccurrenceSet D = set_difference(occurrences(rule.target, cur), T);
            if (D.empty()) return cur;
            cur = phi_geq(cur, D, rev);
        }
    };
    Word a = parse_word("010223"), b = parse_word("010213");
    Word image = naive(a);
    if (image != naive(b)) throw Error("collision demo inputs no longer collide");
    return {a, b, image};
}

namespace {

std::string phi_name(bool inverse) { return inverse ? "φ^{-1}" : "φ"; }

std::string bars(int depth) {
    std::string out;
    for (int i = 0; i < depth; ++i) out += "  |";
    if (depth > 0) out += ' ';
    return out;
}

void render_node(const TraceNode& node, int depth, std::ostringstream& os) {
    const std::string check_letter = node.inverse ? "p" : "q";
    os << bars(depth) << phi_name(node.inverse) << "_{=" << format_positions(node.level_set)
       << "}(" << format_word(node.steps.front().input) << "):\n";
    for (size_t k = 0; k < node.steps.size(); ++k) {
        const TraceStep& step = node.steps[k];
        if (step.kind == TraceStep::Kind::Apply) {
            os << bars(depth + 1) << phi_name(step.inverse) << "_{≥"
               << format_positions(step.level_set) << "}(" << format_word(step.input)
               << ") = " << format_word(step.output) << '\n';
            os << bars(depth + 1) << check_letter << " occurs at "
               << format_positions(step.occurrences_after) << ", so ";
            if (step.occurrences_after == node.level_set)
                os << "we are done.\n";
            else
                os << "apply " << phi_name(!node.inverse) << "_{="
                   << format_positions(step.occurrences_after) << "}\n";
        } else {
            render_node(*step.child, depth + 1, os);
        }
    }
    os << bars(depth) << format_word(node.final_word) << '\n';
}

void collect_outputs(const TraceNode& node, std::vector<Word>& out) {
    for (const auto& step : node.steps) {
        if (step.kind == TraceStep::Kind::Apply)
            out.push_back(step.output);
        else
            collect_outputs(*step.child, out);
    }
}

}  // namespace

std::string render_trace(const TraceNode& node) {
    std::ostringstream os;
    render_node(node, 0, os);
    os << "We finally obtain " << format_word(node.steps.front().input) << " ↦ "
       << format_word(node.final_word) << ".\n";
    return os.str();
}

std::vector<Word> trace_applied_outputs(const TraceNode& node) {
    std::vector<Word> out;
    collect_outputs(node, out);
    return out;
}

}  // namespace invwilf
