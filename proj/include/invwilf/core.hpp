#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "invwilf/errors.hpp"

namespace invwilf {

/// An integer word. Inversion sequences, their reversals and free witness
/// words are all Words; use is_inversion_sequence() where the 0 <= e_i < i
/// bound matters. Positions are 1-based in every public interface.
using Word = std::vector<int>;

/// Strictly increasing list of 1-based window start positions.
using OccurrenceSet = std::vector<int>;

/// A consecutive pattern: a word over {0,...,r-1} equal to its own reduction.
/// Validity is enforced at construction; reduce raw words via
/// reduce_to_pattern().
class Pattern {
public:
    explicit Pattern(Word entries);
    static Pattern parse(const std::string& text);

    const Word& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int max_value() const { return max_value_; }
    const std::string& str() const { return str_; }

    friend bool operator==(const Pattern& a, const Pattern& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }
    friend bool operator<(const Pattern& a, const Pattern& b) { return a.entries_ < b.entries_; }

private:
    Word entries_;
    std::string str_;
    int max_value_ = 0;
};

/// Replace every occurrence of the i-th smallest entry of w by i-1.
Word reduction(const Word& w);
Pattern reduce_to_pattern(const Word& w);

/// True iff the length-r window of s starting at 1-based position i has the
/// same order/equality structure as p (i.e. its reduction equals p).
bool window_matches(const Pattern& p, const Word& s, int i);

/// All 1-based start positions of occurrences of p in s, sorted.
OccurrenceSet occurrences(const Pattern& p, const Word& s);

/// Classical (not necessarily consecutive) containment.
bool contains_classical(const Pattern& p, const Word& s);

bool is_inversion_sequence(const Word& w);
/// 0 <= e_i <= n - i: exactly the words whose reversal is an inversion sequence.
bool is_reversed_inversion_sequence(const Word& w);

Word reverse_word(Word w);

/// e_i = #{ j < i : pi(j) > pi(i) }. Validates that pi is a permutation of 1..n.
Word invseq_from_permutation(const std::vector<int>& pi);

/// Brute-force non-overlap decision: p is non-overlapping iff no word over
/// {0,...,2r-1} realises two occurrences of p at distance s for any
/// 1 <= s <= r-2. Memoized.
bool is_nonoverlapping(const Pattern& p);
bool mutually_nonoverlapping(const Pattern& p, const Pattern& q);

std::uint64_t factorial(int n);

/// Default ceiling on exhaustive enumeration; override explicitly (the CLI
/// honors INVWILF_MAX_N / --max-n).
inline constexpr int kDefaultEnumerationCap = 9;

/// Streams I_n in lexicographic order. Single consumer; independent
/// enumerators may run concurrently.
class InvSeqEnumerator {
public:
    explicit InvSeqEnumerator(int n, int cap = kDefaultEnumerationCap);
    /// Writes the next sequence into out; returns false once exhausted.
    bool next(Word& out);

private:
    int n_;
    Word cur_;
    bool started_ = false;
    bool done_ = false;
};

void for_each_invseq(int n, const std::function<void(const Word&)>& fn,
                     int cap = kDefaultEnumerationCap);

/// The rank-th element (0-based) of I_n in lexicographic order.
Word unrank_invseq(int n, std::uint64_t rank);
/// Advance w to its lexicographic successor in I_n; returns false at the end.
bool next_invseq(Word& w);

/// Compact all-digits form when every entry is <= 9, else comma-separated.
std::string format_word(const Word& w);
/// Accepts both forms (plus whitespace-separated).
Word parse_word(const std::string& text);
/// parse_word + inversion-sequence bound check.
Word parse_invseq(const std::string& text);

std::string format_positions(const OccurrenceSet& t);

bool contains_position(const OccurrenceSet& t, int i);
/// a subset-of b, both sorted.
bool subset_of(const OccurrenceSet& a, const OccurrenceSet& b);
OccurrenceSet set_difference(const OccurrenceSet& a, const OccurrenceSet& b);

}  // namespace invwilf
