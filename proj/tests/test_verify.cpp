#include <doctest.h>

#include "invwilf/verify.hpp"

using namespace invwilf;

namespace {
Pattern P(const char* s) { return Pattern::parse(s); }
Word W(const char* s) { return parse_word(s); }

VerifyOptions serial() {
    VerifyOptions o;
    o.mode = ExecMode::Serial;
    return o;
}
}  // namespace

TEST_CASE("all_patterns counts") {
    CHECK(all_patterns(1).size() == 1);
    CHECK(all_patterns(2).size() == 3);
    CHECK(all_patterns(3).size() == 13);
    CHECK(all_patterns(4).size() == 75);
    for (const Pattern& p : all_patterns(4)) CHECK(reduction(p.entries()) == p.entries());
}

TEST_CASE("mask round trip") {
    const OccurrenceSet t = {1, 3, 6};
    CHECK(mask_to_positions(positions_to_mask(t)) == t);
    CHECK(positions_to_mask({}) == 0);
}

TEST_CASE("joint distribution basics") {
    const JointDistribution d1 = joint_distribution(P("1000"), P("1110"), 1, serial());
    REQUIRE(d1.counts.size() == 1);
    CHECK(d1.counts.begin()->first == std::pair<Mask, Mask>{0, 0});
    CHECK(d1.counts.begin()->second == 1);

    // neither pattern fits an inversion sequence of length 4 (e_1 = 0), so
    // every sequence lands on the empty pair of keys
    const JointDistribution d4 = joint_distribution(P("1000"), P("1110"), 4, serial());
    REQUIRE(d4.counts.size() == 1);
    CHECK(d4.counts.at({0, 0}) == 24);
    CHECK(d4.total() == 24);
}

TEST_CASE("joint totals are n!") {
    for (int n = 0; n <= 7; ++n)
        CHECK(joint_distribution(P("0102"), P("0112"), n, serial()).total() == factorial(n));
}

TEST_CASE("marginal of the joint equals the direct tally") {
    const JointDistribution d = joint_distribution(P("0102"), P("0112"), 7, serial());
    std::map<Mask, std::uint64_t> marginal;
    for (const auto& [key, count] : d.counts) marginal[key.first] += count;
    CHECK(marginal == em_distribution(P("0102"), 7, serial()));
}

TEST_CASE("examples are the lexicographically first witnesses") {
    const JointDistribution d = joint_distribution(P("1000"), P("1110"), 5, serial());
    for (const auto& [key, word] : d.examples) {
        CHECK(positions_to_mask(occurrences(P("1000"), word)) == key.first);
        CHECK(positions_to_mask(occurrences(P("1110"), word)) == key.second);
    }
    // 00100 is the first sequence containing 1000-at-2
    CHECK(d.examples.at({positions_to_mask({2}), 0}) == W("00100"));
}

TEST_CASE("super strong checks") {
    CHECK(check_super_strong(P("1000"), P("1110"), 6, serial()).holds);
    CHECK(check_super_strong(P("2001"), P("2011"), 6, serial()).holds);
    CHECK(check_super_strong(P("0102"), P("0102"), 6, serial()).holds);

    const EquivalenceReport bad = check_super_strong(P("0102"), P("0021"), 7, serial());
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->count_forward != bad.witness->count_backward);
    // the witness marginal key is reproducible from the stored examples
    if (bad.witness->example_forward)
        CHECK(occurrences(P("0102"), *bad.witness->example_forward) == bad.witness->S);
}

TEST_CASE("super strong check is symmetric") {
    const EquivalenceReport ab = check_super_strong(P("0102"), P("0021"), 6, serial());
    const EquivalenceReport ba = check_super_strong(P("0021"), P("0102"), 6, serial());
    CHECK(ab.holds == ba.holds);
}

TEST_CASE("reciprocal checks") {
    CHECK(check_reciprocal(P("0102"), P("0112"), 6, serial()).holds);
    CHECK(check_reciprocal(P("2110"), P("2120"), 6, serial()).holds);
    CHECK(check_reciprocal(P("2010"), P("2110"), 6, serial()).holds);

    const EquivalenceReport bad = check_reciprocal(P("1000"), P("1110"), 7, serial());
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->count_forward != bad.witness->count_backward);
}

TEST_CASE("reciprocity implies both marginal checks at small n") {
    // spot-check over all length-4 pattern pairs at n = 5
    const auto pats = all_patterns(4);
    for (size_t a = 0; a < pats.size(); a += 7) {
        for (size_t b = a + 1; b < pats.size(); b += 11) {
            const EquivalenceReport rec = check_reciprocal(pats[a], pats[b], 5, serial());
            if (rec.holds) CHECK(check_super_strong(pats[a], pats[b], 5, serial()).holds);
        }
    }
}

TEST_CASE("classification at coarse resolution") {
    const ClassificationResult r4 = classify_length4(4, serial());
    CHECK(r4.n == 4);
    size_t total = 0;
    for (const auto& c : r4.classes) total += c.size();
    CHECK(total == 75);
    // I_4 cannot separate anything: no length-4 pattern occurs at all
    CHECK(r4.classes.size() == 1);

    const ClassificationResult r6 = classify_length4(6, serial());
    size_t total6 = 0;
    for (const auto& c : r6.classes) total6 += c.size();
    CHECK(total6 == 75);
    CHECK(r6.classes.size() > 1);
}

TEST_CASE("classification at n=8 is still too coarse") {
    // Known limitation kept as a regression anchor: the distributions over
    // I_8 merge several inequivalent patterns, so resolution 8 does not
    // reproduce the known class list (n = 11 does; see the acceptance suite).
    const ClassificationResult r8 = classify_length4(8, serial());
    CHECK_FALSE(r8.matches_expected());
    CHECK(r8.multi_classes().size() == 13);
    // the known equivalences themselves do hold at n = 8: every expected
    // class sits inside one computed class
    for (const auto& expected : expected_multi_classes()) {
        bool found = false;
        for (const auto& got : r8.classes) {
            bool all_in = true;
            for (const auto& m : expected)
                all_in = all_in && std::find(got.begin(), got.end(), m) != got.end();
            found = found || all_in;
        }
        CHECK(found);
    }
}

TEST_CASE("crosschecks at small n") {
    CHECK(bijection_crosscheck(P("1000"), P("1110"), 6, MapMethod::Recursive, serial()).consistent);
    CHECK(bijection_crosscheck(P("0102"), P("0112"), 6, MapMethod::Recursive, serial()).consistent);
    CHECK(bijection_crosscheck(P("0102"), P("0112"), 6, MapMethod::Exchange, serial()).consistent);
    CHECK(bijection_crosscheck(P("2120"), P("2110"), 6, MapMethod::Exchange, serial()).consistent);
    CHECK(bijection_crosscheck(P("2010"), P("2110"), 6, MapMethod::Exchange, serial()).consistent);
}

TEST_CASE("enumeration cap is enforced") {
    VerifyOptions opts = serial();
    opts.cap = 5;
    CHECK_THROWS_AS(joint_distribution(P("0102"), P("0112"), 6, opts), EnumerationCapExceeded);
    CHECK_THROWS_AS(classify_length4(6, opts), EnumerationCapExceeded);
}
