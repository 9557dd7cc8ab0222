#include "invwilf/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace invwilf {

namespace {

int cmp3(int a, int b) { return (a > b) - (a < b); }

}  // namespace

Pattern::Pattern(Word entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidPattern("empty");
    for (int v : entries_)
        if (v < 0) throw InvalidPattern("negative entry");
    if (reduction(entries_) != entries_)
        throw InvalidPattern(format_word(entries_) + " is not equal to its own reduction");
    max_value_ = *std::max_element(entries_.begin(), entries_.end());
    str_ = format_word(entries_);
}

Pattern Pattern::parse(const std::string& text) { return Pattern(parse_word(text)); }

Word reduction(const Word& w) {
    if (w.empty()) throw EmptyWord();
    Word vals = w;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), w[i]) - vals.begin());
    return out;
}

Pattern reduce_to_pattern(const Word& w) { return Pattern(reduction(w)); }

bool window_matches(const Pattern& p, const Word& s, int i) {
    const int r = p.length();
    if (i < 1 || i + r - 1 > static_cast<int>(s.size())) return false;
    const Word& pe = p.entries();
    const int* win = s.data() + (i - 1);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (cmp3(pe[a], pe[b]) != cmp3(win[a], win[b])) return false;
    return true;
}

OccurrenceSet occurrences(const Pattern& p, const Word& s) {
    OccurrenceSet out;
    const int n = static_cast<int>(s.size());
    for (int i = 1; i + p.length() - 1 <= n; ++i)
        if (window_matches(p, s, i)) out.push_back(i);
    return out;
}

namespace {

bool classical_search(const Word& pe, const Word& s, size_t k, size_t pos, Word& chosen) {
    if (k == pe.size()) return true;
    for (size_t j = pos; j + (pe.size() - k) <= s.size() + 0u && j < s.size(); ++j) {
        bool ok = true;
        for (size_t a = 0; a < k && ok; ++a)
            ok = cmp3(static_cast<int>(pe[a]), static_cast<int>(pe[k])) == cmp3(chosen[a], s[j]);
        if (!ok) continue;
        chosen.push_back(s[j]);
        if (classical_search(pe, s, k + 1, j + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_classical(const Pattern& p, const Word& s) {
    if (p.length() > static_cast<int>(s.size())) return false;
    Word chosen;
    chosen.reserve(p.length());
    return classical_search(p.entries(), s, 0, 0, chosen);
}

bool is_inversion_sequence(const Word& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] < 0 || w[i] > static_cast<int>(i)) return false;
    return true;
}

bool is_reversed_inversion_sequence(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        if (w[i] < 0 || w[i] > n - 1 - i) return false;
    return true;
}

Word reverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

Word invseq_from_permutation(const std::vector<int>& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : pi) {
        if (v < 1 || v > n || seen[v]) throw InvalidSequence("not a permutation of 1..n");
        seen[v] = 1;
    }
    Word e(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (pi[j] > pi[i]) ++e[i];
    return e;
}

namespace {

// Search for a word of length r+s over {0..2r-1} carrying a at position 1 and
// b at position 1+s. Any overlap witness reduces to fewer than 2r values, so
// this alphabet suffices.
bool overlap_witness_exists(const Pattern& a, const Pattern& b, int shift) {
    const int r = a.length();
    const int len = r + shift;
    const int alpha = 2 * r;
    Word w(len, 0);
    while (true) {
        if (window_matches(a, w, 1) && window_matches(b, w, 1 + shift)) return true;
        int i = len - 1;
        while (i >= 0 && w[i] == alpha - 1) w[i--] = 0;
        if (i < 0) return false;
        ++w[i];
    }
}

std::mutex g_overlap_mutex;
std::map<Word, bool> g_nonoverlap_cache;
std::map<std::pair<Word, Word>, bool> g_mutual_cache;

}  // namespace

bool is_nonoverlapping(const Pattern& p) {
    {
        std::lock_guard<std::mutex> lock(g_overlap_mutex);
        auto it = g_nonoverlap_cache.find(p.entries());
        if (it != g_nonoverlap_cache.end()) return it->second;
    }
    bool result = true;
    for (int s = 1; s <= p.length() - 2 && result; ++s)
        if (overlap_witness_exists(p, p, s)) result = false;
    std::lock_guard<std::mutex> lock(g_overlap_mutex);
    g_nonoverlap_cache.emplace(p.entries(), result);
    return result;
}

bool mutually_nonoverlapping(const Pattern& p, const Pattern& q) {
    if (p.length() != q.length()) throw LengthMismatch(p.length(), q.length());
    auto key = std::minmax(p.entries(), q.entries());
    {
        std::lock_guard<std::mutex> lock(g_overlap_mutex);
        auto it = g_mutual_cache.find(key);
        if (it != g_mutual_cache.end()) return it->second;
    }
    bool result = true;
    for (int s = 1; s <= p.length() - 2 && result; ++s)
        if (overlap_witness_exists(p, q, s) || overlap_witness_exists(q, p, s)) result = false;
    std::lock_guard<std::mutex> lock(g_overlap_mutex);
    g_mutual_cache.emplace(key, result);
    return result;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

InvSeqEnumerator::InvSeqEnumerator(int n, int cap) : n_(n) {
    if (n < 0) throw InvalidSequence("negative length");
    if (n > cap) throw EnumerationCapExceeded(n, cap);
    cur_.assign(n_, 0);
}

bool InvSeqEnumerator::next(Word& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = cur_;
        return true;
    }
    if (!next_invseq(cur_)) {
        done_ = true;
        return false;
    }
    out = cur_;
    return true;
}

bool next_invseq(Word& w) {
    int i = static_cast<int>(w.size()) - 1;
    while (i >= 0 && w[i] == i) w[i--] = 0;
    if (i < 0) return false;
    ++w[i];
    return true;
}

void for_each_invseq(int n, const std::function<void(const Word&)>& fn, int cap) {
    InvSeqEnumerator en(n, cap);
    Word w;
    while (en.next(w)) fn(w);
}

Word unrank_invseq(int n, std::uint64_t rank) {
    Word w(n, 0);
    for (int i = n; i >= 1; --i) {
        w[i - 1] = static_cast<int>(rank % static_cast<std::uint64_t>(i));
        rank /= static_cast<std::uint64_t>(i);
    }
    return w;
}

std::string format_word(const Word& w) {
    bool compact = true;
    for (int v : w)
        if (v < 0 || v > 9) compact = false;
    std::ostringstream os;
    if (compact) {
        for (int v : w) os << v;
    } else {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ',';
            os << w[i];
        }
    }
    return os.str();
}

Word parse_word(const std::string& text) {
    Word out;
    const bool delimited = text.find(',') != std::string::npos ||
                           text.find(' ') != std::string::npos ||
                           text.find('\t') != std::string::npos;
    if (delimited) {
        std::string token;
        std::istringstream is(text);
        while (std::getline(is, token, ',')) {
            std::istringstream ts(token);
            std::string piece;
            while (ts >> piece) {
                try {
                    size_t used = 0;
                    int v = std::stoi(piece, &used);
                    if (used != piece.size() || v < 0) throw InvalidSequence(piece);
                    out.push_back(v);
                } catch (const InvalidSequence&) {
                    throw;
                } catch (const std::exception&) {
                    throw InvalidSequence("cannot parse entry '" + piece + "'");
                }
            }
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidSequence("unexpected character '" + std::string(1, c) + "'");
            out.push_back(c - '0');
        }
    }
    return out;
}

Word parse_invseq(const std::string& text) {
    Word w = parse_word(text);
    if (!is_inversion_sequence(w))
        throw InvalidSequence(format_word(w) + " violates 0 <= e_i < i");
    return w;
}

std::string format_positions(const OccurrenceSet& t) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ", ";
        os << t[i];
    }
    os << '}';
    return os.str();
}

bool contains_position(const OccurrenceSet& t, int i) {
    return std::binary_search(t.begin(), t.end(), i);
}

bool subset_of(const OccurrenceSet& a, const OccurrenceSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

OccurrenceSet set_difference(const OccurrenceSet& a, const OccurrenceSet& b) {
    OccurrenceSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace invwilf
