#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invwilf/core.hpp"

namespace invwilf {

/// The two pattern families served by the single-pass exchange. The second
/// family runs the same pass with every comparison reversed.
enum class ExchangeFamily { F0102_0112, F2120_2110 };

Pattern family_p(ExchangeFamily family);  // 0102 resp. 2120
Pattern family_q(ExchangeFamily family);  // 0112 resp. 2110
std::string family_name(ExchangeFamily family);

enum class OccurrenceKind { OriginalP, OriginalQ, TransientP, TransientQ };
std::string to_string(OccurrenceKind kind);

/// One third-entry replacement made by the pass.
struct Replacement {
    int position;         // 1-based index of the replaced entry
    OccurrenceKind kind;  // classification of the occurrence at position-2
    int displaced;        // the value that was overwritten
};

struct AuditReport {
    ExchangeFamily family;
    Word input;
    Word output;
    std::vector<Replacement> replacements;
    /// Start positions classified TransientP during the pass.
    std::vector<int> transient_p_positions;
    /// Human-readable record of the per-position assertions that ran.
    std::vector<std::string> checks;
};

/// Single left-to-right pass swapping all p and q occurrences:
/// a third entry of an original p gets the entry to its left, of an original
/// q the entry two to the left, and a transient p is corrected by swapping in
/// the previously displaced entry. The transient-q branch is retained as an
/// assertion and throws TransientQObserved if it ever fires.
/// Occurrence sets of p and q in the output are the input's swapped.
Word exchange(const Word& s, ExchangeFamily family);

/// reverse . exchange(F0102_0112) . reverse: swaps Em(2010) and Em(2110).
Word exchange_2010_2110(const Word& s);

/// The four original/transient bullets, evaluated from the frozen input
/// (positions i+1..i+3) and the current word (position i). Inequalities are
/// reversed for F2120_2110. Returns nothing when no bullet matches.
std::optional<OccurrenceKind> classify_occurrence(const Word& original, const Word& current, int i,
                                                  ExchangeFamily family);

/// Instrumented pass asserting, per replacement: (a) it happens at the third
/// position of a classified occurrence, (b) the replaced entry was and stays
/// below its right neighbour (above, for the reversed family), (c) a
/// transient correction never reinstates the triggering equality, and
/// (d) an entry changed iff position-2 was an original p, transient p or
/// original q. Throws AuditFailure on any violation.
AuditReport audit_pass(const Word& s, ExchangeFamily family);

}  // namespace invwilf
