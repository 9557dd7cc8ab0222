#include <doctest.h>

#include "invwilf/changeops.hpp"

using namespace invwilf;

namespace {
Pattern P(const char* s) { return Pattern::parse(s); }
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("changeability formula") {
    CHECK(is_changeable(P("0102"), P("0112")));
    CHECK(is_changeable(P("1000"), P("1000")));
    CHECK(is_changeable(P("1000"), P("1110")));
    CHECK(is_changeable(P("1110"), P("1000")));
    CHECK(is_changeable(P("2100"), P("2210")));
    CHECK_THROWS_AS(is_changeable(P("010"), P("0102")), LengthMismatch);
}

TEST_CASE("changeable pairs always admit valid changes") {
    // For every shape-compatible ordered pair flagged changeable, changing any
    // occurrence in any inversion sequence of length <= 6 stays an inversion
    // sequence.
    std::vector<Pattern> pats;
    {
        Word w(4, 0);
        while (true) {
            if (reduction(w) == w) pats.push_back(Pattern(w));
            int i = 3;
            while (i >= 0 && w[i] == 3) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
    }
    for (const Pattern& p : pats) {
        for (const Pattern& q : pats) {
            if (p == q) continue;
            if (p.entries().front() != q.entries().front()) continue;
            if (p.entries().back() != q.entries().back()) continue;
            if (p.max_value() != q.max_value()) continue;
            if (!is_changeable(p, q)) continue;
            for (int n = 4; n <= 6; ++n) {
                for_each_invseq(n, [&](const Word& e) {
                    for (int i : occurrences(p, e)) {
                        Word vals(e.begin() + i - 1, e.begin() + i + 3);
                        std::sort(vals.begin(), vals.end());
                        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
                        Word changed = e;
                        for (int k = 0; k < 4; ++k)
                            changed[i - 1 + k] = vals[q.entries()[k]];
                        CHECK(is_inversion_sequence(changed));
                    }
                });
            }
        }
    }
}

TEST_CASE("change_occurrence examples") {
    const ChangeRule r1 = make_rule(P("1000"), P("1110"));
    CHECK(change_occurrence(W("001000"), 3, r1) == W("001110"));
    CHECK_THROWS_AS(change_occurrence(W("001000"), 2, r1), NotAnOccurrence);

    CHECK(change_occurrence(W("0101213"), 4, make_rule(P("0102"), P("0112"))) == W("0101223"));

    const ChangeRule self = make_rule(P("1000"), P("1000"));
    CHECK(change_occurrence(W("001000"), 3, self) == W("001000"));
}

TEST_CASE("is_valid_change") {
    CHECK(is_valid_change(W("0101213"), 4, make_rule(P("0102"), P("0112"))));
    CHECK(is_valid_change(W("001000"), 3, make_rule(P("1000"), P("1110"))));
    CHECK_THROWS_AS(is_valid_change(W("001000"), 1, make_rule(P("1000"), P("1110"))),
                    NotAnOccurrence);
}

TEST_CASE("phi_geq on the overlapping family") {
    const ChangeRule fwd = make_rule(P("0102"), P("0112"));
    const ChangeRule bwd = make_rule(P("0112"), P("0102"));
    CHECK(phi_geq(W("01022304"), {1}, fwd) == W("01122304"));
    CHECK(phi_geq(W("011223"), {1, 3}, bwd) == W("010203"));
    CHECK(phi_geq(W("01020304"), {1, 3, 5}, fwd) == W("01122334"));  // chain of overlaps
    CHECK(phi_geq(W("010203"), {}, fwd) == W("010203"));
    CHECK_THROWS_AS(phi_geq(W("010203"), {2}, fwd), MissingOccurrence);
}

TEST_CASE("phi_geq on generic pairs acts window by window") {
    const ChangeRule fwd = make_rule(P("1000"), P("1110"));
    CHECK(phi_geq(W("002111110"), {3}, fwd) == W("002221110"));
    CHECK(phi_geq(W("002111000"), {3, 6}, fwd) == W("002221110"));
}

TEST_CASE("phi_geq reversal adapter serves 2010/2110") {
    const ChangeRule fwd = make_rule(P("2010"), P("2110"));
    CHECK(fwd.kind == ChangeKind::ReversalAdapter);
    // 00201000 has 2010 at {3}
    const Word s = W("00201000");
    CHECK(occurrences(P("2010"), s) == OccurrenceSet{3});
    const Word out = phi_geq(s, {3}, fwd);
    CHECK(contains_position(occurrences(P("2110"), out), 3));
    CHECK(is_inversion_sequence(out));
    CHECK(phi_geq(out, {3}, reversed_rule(fwd)) == s);
}

TEST_CASE("phi_geq round trip on the full occurrence set") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"1000", "1110"}, {"2100", "2210"}, {"0102", "0112"}, {"2120", "2110"}};
    for (const auto& [ps, qs] : pairs) {
        const ChangeRule fwd = make_rule(Pattern::parse(ps), Pattern::parse(qs));
        const ChangeRule bwd = reversed_rule(fwd);
        for (int n = 0; n <= 6; ++n) {
            for_each_invseq(n, [&](const Word& e) {
                const OccurrenceSet T = occurrences(fwd.source, e);
                const Word out = phi_geq(e, T, fwd);
                CHECK(is_inversion_sequence(out));
                CHECK(subset_of(T, occurrences(fwd.target, out)));
                CHECK(phi_geq(out, T, bwd) == e);
            });
        }
    }
}

TEST_CASE("copy-left changes touch only third entries of requested windows") {
    const ChangeRule fwd = make_rule(P("0102"), P("0112"));
    for (int n = 4; n <= 7; ++n) {
        for_each_invseq(n, [&](const Word& e) {
            const OccurrenceSet T = occurrences(fwd.source, e);
            const Word out = phi_geq(e, T, fwd);
            for (int i = 1; i <= n; ++i) {
                bool allowed = false;
                for (int t : T) allowed = allowed || (i == t + 2);
                if (!allowed) CHECK(out[i - 1] == e[i - 1]);
            }
        });
    }
}

TEST_CASE("rule construction rejects bad pairs") {
    CHECK_THROWS_AS(make_rule(P("0102"), P("0121")), IncompatiblePair);  // last entries differ
    // 0011 overlaps itself (001122), so the simultaneous change is unsound
    CHECK_THROWS_AS(make_rule(P("0011"), P("0111")), RuleNotNonOverlapping);
    CHECK_THROWS_AS(make_rule(P("010"), P("0102")), LengthMismatch);
    // directions carry the canonical orientation of their family
    CHECK_FALSE(make_rule(P("0102"), P("0112")).reversed_of_canonical);
    CHECK(make_rule(P("0112"), P("0102")).reversed_of_canonical);
    CHECK(make_rule(P("1110"), P("1000")).reversed_of_canonical);
    CHECK(make_rule(P("2110"), P("2120")).reversed_of_canonical);
}
