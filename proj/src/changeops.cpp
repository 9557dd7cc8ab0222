#include "invwilf/changeops.hpp"

#include <algorithm>

namespace invwilf {

namespace {

struct FamilyEntry {
    const char* p;
    const char* q;
    ChangeKind kind;
};

// Canonical orientation of each served pair. CopyLeft p->q copies the second
// window entry into the third; q->p copies the first.
const FamilyEntry kFamilies[] = {
    {"0102", "0112", ChangeKind::CopyLeft},
    {"2120", "2110", ChangeKind::CopyLeft},
    {"2010", "2110", ChangeKind::ReversalAdapter},
    {"1000", "1110", ChangeKind::Generic},
    {"2100", "2210", ChangeKind::Generic},
};

void check_generic_shape(const Pattern& p, const Pattern& q) {
    if (p.length() != q.length()) throw LengthMismatch(p.length(), q.length());
    if (p.entries().front() != q.entries().front() || p.entries().back() != q.entries().back() ||
        p.max_value() != q.max_value())
        throw IncompatiblePair(p.str() + " and " + q.str() +
                               " must agree on first entries, last entries and max value");
}

ChangeRule copyleft_rule(const Pattern& from, const Pattern& to, bool reversed) {
    // forward: third := second; backward: third := first
    return ChangeRule{from, to, ChangeKind::CopyLeft, reversed, reversed ? 0 : 1, nullptr};
}

}  // namespace

ChangeRule make_rule(const Pattern& from, const Pattern& to) {
    for (const auto& fam : kFamilies) {
        Pattern p = Pattern::parse(fam.p), q = Pattern::parse(fam.q);
        bool forward = (from == p && to == q);
        bool backward = (from == q && to == p);
        if (!forward && !backward) continue;
        switch (fam.kind) {
            case ChangeKind::CopyLeft:
                return copyleft_rule(from, to, backward);
            case ChangeKind::ReversalAdapter: {
                // 2010 = reverse(0102), 2110 = reverse(0112); run the inner
                // copy rule on the reversed word.
                Pattern ip = Pattern::parse("0102"), iq = Pattern::parse("0112");
                auto inner = std::make_shared<ChangeRule>(
                    forward ? copyleft_rule(ip, iq, false) : copyleft_rule(iq, ip, true));
                return ChangeRule{from, to, ChangeKind::ReversalAdapter, backward, 0, inner};
            }
            case ChangeKind::Generic:
                check_generic_shape(from, to);
                return ChangeRule{from, to, ChangeKind::Generic, backward, 0, nullptr};
        }
    }
    // Unlisted pair: the simultaneous change is only sound when occurrences
    // cannot overlap, so insist on it here.
    check_generic_shape(from, to);
    if (!is_nonoverlapping(from) || !is_nonoverlapping(to) || !mutually_nonoverlapping(from, to))
        throw RuleNotNonOverlapping(from.str() + " -> " + to.str());
    if (!is_changeable(from, to) || !is_changeable(to, from))
        throw IncompatiblePair(from.str() + " and " + to.str() + " are not interchangeable");
    return ChangeRule{from, to, ChangeKind::Generic, false, 0, nullptr};
}

ChangeRule reversed_rule(const ChangeRule& rule) {
    switch (rule.kind) {
        case ChangeKind::Generic:
            return ChangeRule{rule.target, rule.source, ChangeKind::Generic,
                              !rule.reversed_of_canonical, 0, nullptr};
        case ChangeKind::CopyLeft:
            return copyleft_rule(rule.target, rule.source, !rule.reversed_of_canonical);
        case ChangeKind::ReversalAdapter: {
            auto inner = std::make_shared<ChangeRule>(reversed_rule(*rule.inner));
            return ChangeRule{rule.target, rule.source, ChangeKind::ReversalAdapter,
                              !rule.reversed_of_canonical, 0, inner};
        }
    }
    throw Error("unreachable");
}

bool is_changeable(const Pattern& p, const Pattern& q) {
    if (p.length() != q.length()) throw LengthMismatch(p.length(), q.length());
    const Word& pe = p.entries();
    const Word& qe = q.entries();
    const int r = p.length();
    for (int i = 1; i <= r; ++i) {
        int m = pe[0];
        for (int j = 1; j <= i; ++j) m = std::max(m, pe[j - 1]);
        for (int j = i + 1; j <= r; ++j) m = std::max(m, pe[j - 1] - j + 1);
        if (qe[i - 1] > m) return false;
    }
    return true;
}

Word change_occurrence(const Word& s, int i, const ChangeRule& rule) {
    if (rule.kind == ChangeKind::ReversalAdapter) {
        if (!window_matches(rule.source, s, i)) throw NotAnOccurrence(i, rule.source.str());
        return phi_geq(s, {i}, rule);
    }
    // On a single window the copy-left move coincides with the value
    // bijection, so both kinds rewrite the same way.
    if (!window_matches(rule.source, s, i)) throw NotAnOccurrence(i, rule.source.str());
    const int r = rule.source.length();
    Word vals(s.begin() + (i - 1), s.begin() + (i - 1) + r);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (static_cast<int>(vals.size()) != rule.source.max_value() + 1)
        throw DistinctValueMismatch(i);
    // vals is the order-preserving bijection f: {0..d} -> window values.
    Word out = s;
    for (int k = 0; k < r; ++k) out[i - 1 + k] = vals[rule.target.entries()[k]];
    return out;
}

bool is_valid_change(const Word& s, int i, const ChangeRule& rule) {
    if (!window_matches(rule.source, s, i)) throw NotAnOccurrence(i, rule.source.str());
    return is_inversion_sequence(phi_geq(s, {i}, rule));
}

Word phi_geq(const Word& s, const OccurrenceSet& T, const ChangeRule& rule) {
    for (int i : T)
        if (!window_matches(rule.source, s, i)) throw MissingOccurrence(i, rule.source.str());
    switch (rule.kind) {
        case ChangeKind::Generic: {
            Word cur = s;
            for (int i : T) cur = change_occurrence(cur, i, rule);
            return cur;
        }
        case ChangeKind::CopyLeft: {
            Word cur = s;
            for (int i : T) cur[i - 1 + 2] = cur[i - 1 + rule.copy_offset];
            return cur;
        }
        case ChangeKind::ReversalAdapter: {
            const int n = static_cast<int>(s.size());
            const int r = rule.source.length();
            OccurrenceSet mapped;
            mapped.reserve(T.size());
            for (int i : T) mapped.push_back(n - i - r + 2);
            std::sort(mapped.begin(), mapped.end());
            return reverse_word(phi_geq(reverse_word(s), mapped, *rule.inner));
        }
    }
    throw Error("unreachable");
}

}  // namespace invwilf
