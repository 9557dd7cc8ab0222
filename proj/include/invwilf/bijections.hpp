#pragma once

#include <memory>
#include <tuple>
#include <vector>

#include "invwilf/changeops.hpp"

namespace invwilf {

struct PhiOptions {
    /// Cap on total phi_{>=} applications per top-level call.
    long long guard = 1'000'000;
};

struct TraceNode;

/// One entry in a recursion level: either a phi_{>=} application or a nested
/// call realising the inverse map at a larger level set.
struct TraceStep {
    enum class Kind { Apply, Child };
    Kind kind = Kind::Apply;

    // Apply
    bool inverse = false;   // rendered as phi^{-1}
    OccurrenceSet level_set;
    Word input;
    Word output;
    OccurrenceSet occurrences_after;  // of the owning node's target pattern

    // Child
    std::unique_ptr<TraceNode> child;
};

/// One recursion level of the map. The first step is always the
/// phi_{>= level_set} application; the final word's target-pattern occurrence
/// set equals level_set; each child's level set strictly contains this one.
struct TraceNode {
    std::string from, to;
    bool inverse = false;
    OccurrenceSet level_set;
    std::vector<TraceStep> steps;
    Word final_word;

    int depth() const;  // max child nesting below this node
};

struct PhiResult {
    Word output;
    long long calls = 0;  // phi_{>=} applications, identity applications included
    std::unique_ptr<TraceNode> trace;
};

/// The recursive bijection at level T := occurrences(rule.source, s):
/// apply phi_{>=T}; while the target occurrence set S exceeds T, undo the
/// stray occurrences by recursing with the reversed rule at level S and
/// re-apply phi_{>=T}. The result has target occurrences exactly T.
PhiResult phi_eq(const Word& s, const ChangeRule& rule, const PhiOptions& opts = {});

/// Trace-free fast path for exhaustive sweeps.
Word phi_eq_image(const Word& s, const ChangeRule& rule, long long* calls = nullptr,
                  int* max_depth = nullptr, const PhiOptions& opts = {});

/// Throws RuleNotNonOverlapping unless rule is Generic with non-overlapping,
/// mutually non-overlapping source and target.
void validate_iterative_rule(const ChangeRule& rule);

/// Change all source occurrences T to the target, then repeatedly change
/// target occurrences at S \ T back until none remain. Only valid for
/// non-overlapping pairs (checked).
Word iterative_map(const Word& s, const ChangeRule& rule, const PhiOptions& opts = {});

/// (010223, 010213, 011213): the naive per-window iteration sends both of the
/// first two words to the third, certifying non-injectivity for the
/// overlapping pair 0102/0112.
std::tuple<Word, Word, Word> naive_iteration_collision_demo();

/// Indented vertical-bar layout, one "phi_{>={...}}(seq) = seq'" line per
/// application, closed by "We finally obtain X |-> Y."
std::string render_trace(const TraceNode& node);

/// The phi application outputs in chronological order (depth-first through
/// children); the sequences a rendered trace prints.
std::vector<Word> trace_applied_outputs(const TraceNode& node);

}  // namespace invwilf
