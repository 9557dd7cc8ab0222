#include "invwilf/exchange.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace invwilf {

namespace {

// Window shapes, with all inequalities reversed for the 2120/2110 family.
// p-shape: a b a c with a < b < d-entry; q-shape: a b b c with a < b < c.
bool p_shape(int a, int b, int c, int d, bool rev) {
    if (rev) return a == c && a > b && b > d;
    return a == c && a < b && b < d;
}

bool q_shape(int a, int b, int c, int d, bool rev) {
    if (rev) return a > b && b == c && c > d;
    return a < b && b == c && c < d;
}

bool window_p(const Word& w, int i, bool rev) {
    return p_shape(w[i - 1], w[i], w[i + 1], w[i + 2], rev);
}

bool window_q(const Word& w, int i, bool rev) {
    return q_shape(w[i - 1], w[i], w[i + 1], w[i + 2], rev);
}

struct PassSink {
    std::vector<Replacement>* replacements = nullptr;
    // audit instrumentation; null entries disable the checks
    const Word* original = nullptr;
    std::vector<std::string>* checks = nullptr;
};

std::string fmt_check(const char* what, int position) {
    std::ostringstream os;
    os << what << " at " << position;
    return os.str();
}

Word exchange_pass(const Word& s, ExchangeFamily family, PassSink sink) {
    const bool rev = family == ExchangeFamily::F2120_2110;
    const int n = static_cast<int>(s.size());
    Word seq = s;

    std::vector<char> origP(n + 1, 0), origQ(n + 1, 0);
    for (int j = 1; j + 3 <= n; ++j) {
        origP[j] = window_p(s, j, rev);
        origQ[j] = window_q(s, j, rev);
    }

    std::optional<int> last;
    auto audit_replacement = [&](int i, int before, int after) {
        if (!sink.checks) return;
        // the replaced entry sat below its right neighbour and still does
        // (above, for the reversed family)
        bool ok_before = rev ? (before > s[i]) : (before < s[i]);
        bool ok_after = rev ? (after > s[i]) : (after < s[i]);
        if (!ok_before) throw AuditFailure(i, "replaced entry not below its right neighbour");
        if (!ok_after) throw AuditFailure(i, "replacement entry not below the right neighbour");
        sink.checks->push_back(fmt_check("replacement bounded by right neighbour", i));
    };

    for (int i = 3; i <= n; ++i) {
        const int j = i - 2;
        if (j + 3 > n) break;  // no window starts at j
        if (origP[j]) {
            int displaced = seq[i - 1];
            seq[i - 1] = seq[i - 2];
            audit_replacement(i, displaced, seq[i - 1]);
            last = displaced;
            if (sink.replacements)
                sink.replacements->push_back({i, OccurrenceKind::OriginalP, displaced});
        } else if (origQ[j]) {
            int displaced = seq[i - 1];
            seq[i - 1] = seq[i - 3];
            audit_replacement(i, displaced, seq[i - 1]);
            last = displaced;
            if (sink.replacements)
                sink.replacements->push_back({i, OccurrenceKind::OriginalQ, displaced});
        } else if (window_p(seq, j, rev)) {
            // transient p: swap in the displaced entry
            if (!last) throw AuditFailure(i, "transient correction with no displaced entry");
            int displaced = seq[i - 1];
            seq[i - 1] = *last;
            audit_replacement(i, displaced, seq[i - 1]);
            last = displaced;
            if (sink.replacements)
                sink.replacements->push_back({i, OccurrenceKind::TransientP, displaced});
            if (sink.checks) {
                if (seq[i - 1] == seq[j - 1])
                    throw AuditFailure(j, "transient correction reinstated the equality");
                sink.checks->push_back(fmt_check("transient correction broke the equality", j));
            }
        } else if (window_q(seq, j, rev)) {
            // dead branch: firing it would falsify the no-transient-q result
            throw TransientQObserved(j);
        }
    }
    return seq;
}

}  // namespace

Pattern family_p(ExchangeFamily family) {
    return Pattern::parse(family == ExchangeFamily::F0102_0112 ? "0102" : "2120");
}

Pattern family_q(ExchangeFamily family) {
    return Pattern::parse(family == ExchangeFamily::F0102_0112 ? "0112" : "2110");
}

std::string family_name(ExchangeFamily family) {
    return family == ExchangeFamily::F0102_0112 ? "0102/0112" : "2120/2110";
}

std::string to_string(OccurrenceKind kind) {
    switch (kind) {
        case OccurrenceKind::OriginalP: return "OriginalP";
        case OccurrenceKind::OriginalQ: return "OriginalQ";
        case OccurrenceKind::TransientP: return "TransientP";
        case OccurrenceKind::TransientQ: return "TransientQ";
    }
    return "?";
}

Word exchange(const Word& s, ExchangeFamily family) {
    return exchange_pass(s, family, PassSink{});
}

Word exchange_2010_2110(const Word& s) {
    return reverse_word(exchange(reverse_word(s), ExchangeFamily::F0102_0112));
}

std::optional<OccurrenceKind> classify_occurrence(const Word& original, const Word& current,
                                                  int i, ExchangeFamily family) {
    const bool rev = family == ExchangeFamily::F2120_2110;
    const int n = static_cast<int>(original.size());
    if (i < 1 || i + 3 > n) return std::nullopt;
    const int e1 = original[i - 1], e2 = original[i], e3 = original[i + 1], e4 = original[i + 2];
    const int c1 = current[i - 1];
    if (p_shape(e1, e2, e3, e4, rev)) return OccurrenceKind::OriginalP;
    if (q_shape(e1, e2, e3, e4, rev)) return OccurrenceKind::OriginalQ;
    if (p_shape(c1, e2, e3, e4, rev)) return OccurrenceKind::TransientP;
    if (q_shape(c1, e2, e3, e4, rev)) return OccurrenceKind::TransientQ;
    return std::nullopt;
}

AuditReport audit_pass(const Word& s, ExchangeFamily family) {
    AuditReport report;
    report.family = family;
    report.input = s;
    PassSink sink;
    sink.replacements = &report.replacements;
    sink.original = &s;
    sink.checks = &report.checks;
    report.output = exchange_pass(s, family, sink);

    // replacements happen exactly where an entry changed, and only at third
    // positions of classified occurrences
    std::vector<char> replaced(s.size() + 1, 0);
    for (const auto& rep : report.replacements) {
        replaced[rep.position] = 1;
        if (rep.kind == OccurrenceKind::TransientQ)
            throw AuditFailure(rep.position, "transient q replacement recorded");
        if (rep.kind == OccurrenceKind::TransientP)
            report.transient_p_positions.push_back(rep.position - 2);
    }
    for (size_t i = 1; i <= s.size(); ++i) {
        const bool changed = report.output[i - 1] != s[i - 1];
        if (changed != static_cast<bool>(replaced[i]))
            throw AuditFailure(static_cast<int>(i),
                               changed ? "entry changed without a recorded replacement"
                                       : "replacement recorded but entry unchanged");
    }
    report.checks.push_back("entries changed exactly at recorded replacements");
    return report;
}

}  // namespace invwilf
