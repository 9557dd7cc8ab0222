#pragma once

#include <memory>

#include "invwilf/core.hpp"

namespace invwilf {

enum class ChangeKind {
    /// Rewrite one occurrence window through the order-preserving value
    /// bijection. Exposed only for non-overlapping, mutually non-overlapping
    /// interchangeable pairs.
    Generic,
    /// Left-to-right third-entry copy for the overlapping families
    /// 0102/0112 and 2120/2110.
    CopyLeft,
    /// Run a CopyLeft rule on the reversed word; serves 2010/2110.
    ReversalAdapter,
};

/// A directed change between two patterns. Direction is part of the rule and
/// never inferred from content; reversed_of_canonical only affects how traces
/// name the maps (phi vs phi^{-1}).
struct ChangeRule {
    Pattern source;
    Pattern target;
    ChangeKind kind;
    bool reversed_of_canonical = false;
    /// CopyLeft: window offset of the entry copied into the third position
    /// (1 = second entry, 0 = first entry).
    int copy_offset = 0;
    std::shared_ptr<const ChangeRule> inner;  // ReversalAdapter only
};

/// Builds the rule for (from -> to). Known family pairs -- (0102,0112),
/// (2120,2110), (2010,2110), (1000,1110), (2100,2210) -- get their dedicated
/// kind in either direction. Any other pair must qualify for Generic:
/// equal length, equal first and last entries, equal max value, both patterns
/// non-overlapping, mutually non-overlapping, and interchangeable.
ChangeRule make_rule(const Pattern& from, const Pattern& to);
ChangeRule reversed_rule(const ChangeRule& rule);

/// The displayed changeability inequality, implemented verbatim:
/// q_i <= max({p_j : j <= i} u {p_j - j + 1 : i < j <= r}) for all i.
bool is_changeable(const Pattern& p, const Pattern& q);

/// Rewrite the occurrence of rule.source at i into rule.target through the
/// order-preserving bijection from {0..d} onto the window's distinct values.
/// Generic rules only.
Word change_occurrence(const Word& s, int i, const ChangeRule& rule);

/// True iff changing the occurrence at i leaves an inversion sequence.
bool is_valid_change(const Word& s, int i, const ChangeRule& rule);

/// Change the occurrences of rule.source at the positions of T. T must be a
/// subset of occurrences(rule.source, s); positions are processed in
/// increasing order. The result has occurrences(rule.target, .) containing T.
Word phi_geq(const Word& s, const OccurrenceSet& T, const ChangeRule& rule);

}  // namespace invwilf
