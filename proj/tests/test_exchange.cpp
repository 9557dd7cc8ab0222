#include <doctest.h>

#include <set>

#include "invwilf/exchange.hpp"

using namespace invwilf;

namespace {
Pattern P(const char* s) { return Pattern::parse(s); }
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("exchange golden values") {
    CHECK(invwilf::exchange(W("010223"), ExchangeFamily::F0102_0112) == W("011213"));
    CHECK(invwilf::exchange(W("011223042526"), ExchangeFamily::F0102_0112) == W("010203240556"));
    // a sequence with no occurrences of either pattern is fixed
    CHECK(invwilf::exchange(W("000000"), ExchangeFamily::F0102_0112) == W("000000"));
    CHECK(invwilf::exchange(W("001122"), ExchangeFamily::F2120_2110) == W("001122"));
}

TEST_CASE("exchange swaps the two occurrence sets") {
    const Word e = W("011223042526");
    const Word out = invwilf::exchange(e, ExchangeFamily::F0102_0112);
    CHECK(occurrences(P("0102"), out) == occurrences(P("0112"), e));
    CHECK(occurrences(P("0112"), out) == occurrences(P("0102"), e));
    CHECK(invwilf::exchange(out, ExchangeFamily::F0102_0112) == e);
}

TEST_CASE("classify_occurrence bullets") {
    const Word e = W("011223042526");
    CHECK(classify_occurrence(e, e, 1, ExchangeFamily::F0102_0112) == OccurrenceKind::OriginalQ);
    CHECK(classify_occurrence(e, e, 9, ExchangeFamily::F0102_0112) == OccurrenceKind::OriginalP);

    const Word f = W("0101213");
    CHECK(classify_occurrence(f, f, 4, ExchangeFamily::F0102_0112) == OccurrenceKind::OriginalP);

    const Word flat = W("0000");
    CHECK_FALSE(classify_occurrence(flat, flat, 1, ExchangeFamily::F0102_0112).has_value());

    // mid-pass snapshot of 011223042526 after the replacements at 3 and 5:
    // position 5 now opens a p shape that was not there originally
    const Word orig = W("011223042526");
    const Word cur = W("010203042526");
    CHECK(classify_occurrence(orig, cur, 5, ExchangeFamily::F0102_0112) ==
          OccurrenceKind::TransientP);
    CHECK(classify_occurrence(orig, orig, 3, ExchangeFamily::F0102_0112) ==
          OccurrenceKind::OriginalQ);
}

TEST_CASE("audit of 010223") {
    const AuditReport report = audit_pass(W("010223"), ExchangeFamily::F0102_0112);
    CHECK(report.output == W("011213"));
    REQUIRE(report.replacements.size() == 2);
    CHECK(report.replacements[0].position == 3);
    CHECK(report.replacements[0].kind == OccurrenceKind::OriginalP);
    CHECK(report.replacements[0].displaced == 0);
    CHECK(report.replacements[1].position == 5);
    CHECK(report.replacements[1].kind == OccurrenceKind::OriginalQ);
    CHECK(report.replacements[1].displaced == 2);
    CHECK(report.transient_p_positions.empty());
}

TEST_CASE("audit of the double-application example") {
    const AuditReport report = audit_pass(W("011223042526"), ExchangeFamily::F0102_0112);
    REQUIRE(report.replacements.size() == 5);
    const std::vector<std::pair<int, OccurrenceKind>> expected = {
        {3, OccurrenceKind::OriginalQ},
        {5, OccurrenceKind::OriginalQ},
        {7, OccurrenceKind::TransientP},
        {9, OccurrenceKind::TransientP},
        {11, OccurrenceKind::OriginalP},
    };
    for (size_t k = 0; k < expected.size(); ++k) {
        CHECK(report.replacements[k].position == expected[k].first);
        CHECK(report.replacements[k].kind == expected[k].second);
    }
    CHECK(report.transient_p_positions == std::vector<int>{5, 7});

    // no-occurrence input yields an empty replacement log
    CHECK(audit_pass(W("0000"), ExchangeFamily::F0102_0112).replacements.empty());
}

TEST_CASE("exchange on the reversed-inequality family") {
    // 0021102 carries 2110 at 3; the pass turns it into 2120 there
    const Word e = W("0021102");
    CHECK(occurrences(P("2110"), e) == OccurrenceSet{3});
    const Word out = invwilf::exchange(e, ExchangeFamily::F2120_2110);
    CHECK(occurrences(P("2120"), out) == OccurrenceSet{3});
    CHECK(occurrences(P("2110"), out).empty());
    CHECK(invwilf::exchange(out, ExchangeFamily::F2120_2110) == e);
}

TEST_CASE("reversal adapter swaps 2010 and 2110") {
    const Word witness = W("00201000");
    CHECK(occurrences(P("2010"), witness) == OccurrenceSet{3});
    CHECK(occurrences(P("2110"), witness).empty());
    const Word out = exchange_2010_2110(witness);
    CHECK(out == W("00211000"));
    CHECK(occurrences(P("2110"), out) == OccurrenceSet{3});
    CHECK(occurrences(P("2010"), out).empty());
    CHECK(exchange_2010_2110(out) == witness);

    CHECK(exchange_2010_2110(W("000000")) == W("000000"));
}

TEST_CASE("exhaustive small-n properties of the pass") {
    for (int n = 0; n <= 7; ++n) {
        for_each_invseq(n, [&](const Word& e) {
            for (ExchangeFamily fam : {ExchangeFamily::F0102_0112, ExchangeFamily::F2120_2110}) {
                const Word out = invwilf::exchange(e, fam);
                CHECK(is_inversion_sequence(out));
                CHECK(occurrences(family_p(fam), out) == occurrences(family_q(fam), e));
                CHECK(occurrences(family_q(fam), out) == occurrences(family_p(fam), e));
                CHECK(invwilf::exchange(out, fam) == e);
            }
            const Word out = exchange_2010_2110(e);
            CHECK(is_inversion_sequence(out));
            CHECK(occurrences(P("2010"), out) == occurrences(P("2110"), e));
            CHECK(occurrences(P("2110"), out) == occurrences(P("2010"), e));
            CHECK(exchange_2010_2110(out) == e);
        });
    }
}

TEST_CASE("transient-p positions persist into the image") {
    for (int n = 0; n <= 7; ++n) {
        for_each_invseq(n, [&](const Word& e) {
            for (ExchangeFamily fam : {ExchangeFamily::F0102_0112, ExchangeFamily::F2120_2110}) {
                const AuditReport first = audit_pass(e, fam);
                const AuditReport second = audit_pass(first.output, fam);
                const std::set<int> a(first.transient_p_positions.begin(),
                                      first.transient_p_positions.end());
                const std::set<int> b(second.transient_p_positions.begin(),
                                      second.transient_p_positions.end());
                CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
            }
        });
    }
}
