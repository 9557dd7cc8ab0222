#include "invwilf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "invwilf/bijections.hpp"
#include "invwilf/changeops.hpp"
#include "invwilf/exchange.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invwilf {

namespace {

const char* kFiniteNote =
    "exhaustive finite-n evidence; equality of distributions at finite n is necessary, "
    "not sufficient, for equivalence at all n";

Mask window_mask(const Pattern& p, const Word& s) {
    Mask m = 0;
    const int n = static_cast<int>(s.size());
    for (int i = 1; i + p.length() - 1 <= n; ++i)
        if (window_matches(p, s, i)) m |= Mask{1} << (i - 1);
    return m;
}

int auto_threads(const VerifyOptions& opts) {
#ifdef _OPENMP
    return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
    (void)opts;
    return 1;
#endif
}

}  // namespace

int scan_threads(const VerifyOptions& opts) { return auto_threads(opts); }

bool run_parallel(int n, const VerifyOptions& opts) {
    switch (opts.mode) {
        case ExecMode::Serial: return false;
        case ExecMode::Parallel: return true;
        case ExecMode::Auto: return auto_threads(opts) > 1 && n >= 7;
    }
    return false;
}

std::vector<Pattern> all_patterns(int r) {
    if (r < 1) throw InvalidPattern("length must be positive");
    std::vector<Pattern> out;
    Word w(r, 0);
    while (true) {
        if (reduction(w) == w) out.push_back(Pattern(w));
        int i = r - 1;
        while (i >= 0 && w[i] == r - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

Mask positions_to_mask(const OccurrenceSet& t) {
    Mask m = 0;
    for (int i : t) m |= Mask{1} << (i - 1);
    return m;
}

OccurrenceSet mask_to_positions(Mask m) {
    OccurrenceSet t;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1) t.push_back(i);
    return t;
}

std::uint64_t JointDistribution::total() const {
    std::uint64_t s = 0;
    for (const auto& kv : counts) s += kv.second;
    return s;
}

// ---------------------------------------------------------------------------
// Scan engine: a serial reference loop and an OpenMP kernel sharded by
// lexicographic rank ranges. Chunk accumulators merge in rank order, so
// "first example per key" is the lexicographically first in both modes.
// ---------------------------------------------------------------------------

namespace {

template <typename Acc, typename Body>
std::vector<Acc> run_chunked(int n, const VerifyOptions& opts, const Body& body) {
    if (n > opts.cap) throw EnumerationCapExceeded(n, opts.cap);
    const std::uint64_t total = factorial(n);
    if (!run_parallel(n, opts)) {
        std::vector<Acc> accs(1);
        Word w(n, 0);
        for (std::uint64_t r = 0; r < total; ++r) {
            body(accs[0], w);
            next_invseq(w);
        }
        return accs;
    }
    const int threads = auto_threads(opts);
    const int chunks = std::max(1, threads * 8);
    std::vector<Acc> accs(chunks);
    std::string first_error;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int c = 0; c < chunks; ++c) {
        if (failed.load(std::memory_order_relaxed)) continue;
        const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / chunks;
        const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / chunks;
        if (lo >= hi) continue;
        try {
            Word w = unrank_invseq(n, lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                body(accs[c], w);
                next_invseq(w);
            }
        } catch (const std::exception& e) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true)) {
#ifdef _OPENMP
#pragma omp critical(invwilf_scan_error)
#endif
                first_error = e.what();
            }
        }
    }
    if (failed.load()) throw Error(first_error.empty() ? "scan failed" : first_error);
    return accs;
}

struct JointAcc {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    std::unordered_map<std::uint64_t, Word> examples;
};

}  // namespace

JointDistribution joint_distribution(const Pattern& p, const Pattern& q, int n,
                                     const VerifyOptions& opts) {
    JointDistribution dist(p, q);
    dist.n = n;
    const bool keep = opts.keep_examples;
    auto accs = run_chunked<JointAcc>(n, opts, [&](JointAcc& acc, const Word& w) {
        const Mask mp = window_mask(p, w);
        const Mask mq = window_mask(q, w);
        const std::uint64_t key = (mp << 32) | mq;
        auto [it, inserted] = acc.counts.emplace(key, 0);
        ++it->second;
        if (keep && inserted) acc.examples.emplace(key, w);
    });
    for (const auto& acc : accs) {
        for (const auto& [key, count] : acc.counts) {
            const std::pair<Mask, Mask> sm{key >> 32, key & 0xffffffffu};
            dist.counts[sm] += count;
            if (keep) {
                auto ex = acc.examples.find(key);
                if (ex != acc.examples.end()) dist.examples.emplace(sm, ex->second);
            }
        }
    }
    return dist;
}

std::map<Mask, std::uint64_t> em_distribution(const Pattern& p, int n, const VerifyOptions& opts) {
    using Acc = std::unordered_map<std::uint64_t, std::uint64_t>;
    auto accs = run_chunked<Acc>(n, opts, [&](Acc& acc, const Word& w) {
        ++acc[window_mask(p, w)];
    });
    std::map<Mask, std::uint64_t> out;
    for (const auto& acc : accs)
        for (const auto& [mask, count] : acc) out[mask] += count;
    return out;
}

EquivalenceReport check_super_strong(const Pattern& p, const Pattern& q, int n,
                                     const VerifyOptions& opts) {
    JointDistribution dist = joint_distribution(p, q, n, opts);
    EquivalenceReport report(p, q);
    report.relation = Relation::SuperStrong;
    report.n = n;
    report.note = kFiniteNote;

    std::map<Mask, std::uint64_t> marg_p, marg_q;
    for (const auto& [key, count] : dist.counts) {
        marg_p[key.first] += count;
        marg_q[key.second] += count;
    }
    // first mask (ordered) whose two marginals differ
    std::vector<Mask> masks;
    for (const auto& kv : marg_p) masks.push_back(kv.first);
    for (const auto& kv : marg_q) masks.push_back(kv.first);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (Mask m : masks) {
        const std::uint64_t cp = marg_p.count(m) ? marg_p.at(m) : 0;
        const std::uint64_t cq = marg_q.count(m) ? marg_q.at(m) : 0;
        if (cp == cq) continue;
        EquivalenceWitness wit;
        wit.S = mask_to_positions(m);
        wit.T = wit.S;
        wit.count_forward = cp;
        wit.count_backward = cq;
        for (const auto& [key, word] : dist.examples) {
            if (key.first == m && !wit.example_forward) wit.example_forward = word;
            if (key.second == m && !wit.example_backward) wit.example_backward = word;
        }
        report.holds = false;
        report.witness = wit;
        return report;
    }
    report.holds = true;
    return report;
}

EquivalenceReport check_reciprocal(const Pattern& p, const Pattern& q, int n,
                                   const VerifyOptions& opts) {
    JointDistribution dist = joint_distribution(p, q, n, opts);
    EquivalenceReport report(p, q);
    report.relation = Relation::Reciprocal;
    report.n = n;
    report.note = kFiniteNote;
    for (const auto& [key, count] : dist.counts) {
        const std::pair<Mask, Mask> swapped{key.second, key.first};
        auto it = dist.counts.find(swapped);
        const std::uint64_t back = it == dist.counts.end() ? 0 : it->second;
        if (back == count) continue;
        EquivalenceWitness wit;
        wit.S = mask_to_positions(key.first);
        wit.T = mask_to_positions(key.second);
        wit.count_forward = count;
        wit.count_backward = back;
        auto ex = dist.examples.find(key);
        if (ex != dist.examples.end()) wit.example_forward = ex->second;
        auto exb = dist.examples.find(swapped);
        if (exb != dist.examples.end()) wit.example_backward = exb->second;
        report.holds = false;
        report.witness = wit;
        return report;
    }
    report.holds = true;
    return report;
}

// ---------------------------------------------------------------------------
// Length-4 classification
// ---------------------------------------------------------------------------

const std::vector<std::vector<std::string>>& expected_multi_classes() {
    static const std::vector<std::vector<std::string>> classes = {
        {"0021", "0121"},
        {"0100", "0110"},
        {"0102", "0112"},
        {"0211", "0221"},
        {"1000", "1110"},
        {"1001", "1011", "1101"},
        {"1002", "1012", "1102"},
        {"1200", "1210", "1220"},
        {"2001", "2011", "2101", "2201"},
        {"2010", "2110", "2120"},
        {"2012", "2102"},
        {"2013", "2103"},
        {"2100", "2210"},
        {"3012", "3102"},
    };
    return classes;
}

std::vector<std::vector<std::string>> ClassificationResult::multi_classes() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : classes)
        if (c.size() > 1) out.push_back(c);
    return out;
}

bool ClassificationResult::matches_expected() const {
    return multi_classes() == expected_multi_classes();
}

namespace {

struct SignatureAcc {
    // per pattern: nonzero-mask tallies; the zero mask is reconstructed later
    std::vector<std::unordered_map<Mask, std::uint64_t>> dists;
    std::uint64_t sequences = 0;
};

}  // namespace

ClassificationResult classify_length4(int n, const VerifyOptions& opts) {
    const std::vector<Pattern> pats = all_patterns(4);
    const int np = static_cast<int>(pats.size());

    // window lookup: 4 entries < max(n,4) each -> pattern index or -1
    const int base = std::max(n, 4);
    std::vector<std::int16_t> lut(static_cast<size_t>(base) * base * base * base, -1);
    {
        Word w(4, 0);
        while (true) {
            Word r = reduction(w);
            for (int k = 0; k < np; ++k)
                if (pats[k].entries() == r) {
                    lut[((static_cast<size_t>(w[0]) * base + w[1]) * base + w[2]) * base + w[3]] =
                        static_cast<std::int16_t>(k);
                    break;
                }
            int i = 3;
            while (i >= 0 && w[i] == base - 1) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
    }

    auto accs = run_chunked<SignatureAcc>(n, opts, [&](SignatureAcc& acc, const Word& w) {
        if (acc.dists.empty()) acc.dists.resize(np);
        ++acc.sequences;
        int hit[16];
        Mask hit_mask[16];
        int nh = 0;
        for (int i = 0; i + 3 < n; ++i) {
            const int k = lut[((static_cast<size_t>(w[i]) * base + w[i + 1]) * base + w[i + 2]) *
                                  base +
                              w[i + 3]];
            if (k < 0) continue;
            bool found = false;
            for (int t = 0; t < nh; ++t)
                if (hit[t] == k) {
                    hit_mask[t] |= Mask{1} << i;
                    found = true;
                }
            if (!found) {
                hit[nh] = k;
                hit_mask[nh] = Mask{1} << i;
                ++nh;
            }
        }
        for (int t = 0; t < nh; ++t) ++acc.dists[hit[t]][hit_mask[t]];
    });

    std::vector<std::map<Mask, std::uint64_t>> dists(np);
    std::uint64_t total = 0;
    for (const auto& acc : accs) {
        total += acc.sequences;
        if (acc.dists.empty()) continue;
        for (int k = 0; k < np; ++k)
            for (const auto& [mask, count] : acc.dists[k]) dists[k][mask] += count;
    }
    for (int k = 0; k < np; ++k) {
        std::uint64_t nonzero = 0;
        for (const auto& kv : dists[k]) nonzero += kv.second;
        dists[k][0] += total - nonzero;
    }

    std::map<std::vector<std::pair<Mask, std::uint64_t>>, std::vector<std::string>> groups;
    for (int k = 0; k < np; ++k) {
        std::vector<std::pair<Mask, std::uint64_t>> key(dists[k].begin(), dists[k].end());
        groups[key].push_back(pats[k].str());
    }
    ClassificationResult result;
    result.n = n;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end());
        result.classes.push_back(members);
    }
    std::sort(result.classes.begin(), result.classes.end());
    return result;
}

// ---------------------------------------------------------------------------
// Constructive-map crosscheck
// ---------------------------------------------------------------------------

namespace {

std::uint64_t encode_word(const Word& w) {
    // entries < 16 and length <= 16, ample for enumerable n
    std::uint64_t key = 0;
    for (int v : w) key = (key << 4) | static_cast<std::uint64_t>(v);
    return key;
}

}  // namespace

CrosscheckReport bijection_crosscheck(const Pattern& p, const Pattern& q, int n, MapMethod method,
                                      const VerifyOptions& opts) {
    CrosscheckReport report(p, q);
    report.n = n;
    report.method = method;
    if (n > 15) throw EnumerationCapExceeded(n, 15);

    const bool adapter = (p.str() == "2010" && q.str() == "2110") ||
                         (p.str() == "2110" && q.str() == "2010");
    std::optional<ExchangeFamily> family;
    if (method == MapMethod::Exchange && !adapter) {
        for (ExchangeFamily f : {ExchangeFamily::F0102_0112, ExchangeFamily::F2120_2110})
            if ((family_p(f) == p && family_q(f) == q) || (family_p(f) == q && family_q(f) == p))
                family = f;
        if (!family) throw Error("no exchange pass serves " + p.str() + "/" + q.str());
    }
    std::optional<ChangeRule> rule;
    if (method == MapMethod::Recursive) rule = make_rule(p, q);

    // per-T tallies of images and codomain, plus global injectivity
    std::unordered_map<Mask, std::uint64_t> image_by_t, codomain_by_t;
    std::unordered_set<std::uint64_t> images;

    VerifyOptions serial = opts;
    serial.mode = ExecMode::Serial;  // shared tallies below are not thread-safe
    try {
        sweep_invseqs(
            n,
            [&](const Word& w) {
                const Mask mp = window_mask(p, w);
                const Mask mq = window_mask(q, w);
                Word img;
                if (method == MapMethod::Recursive) {
                    img = phi_eq_image(w, *rule);
                    if (window_mask(q, img) != mp) throw MismatchWitness(format_word(w));
                } else {
                    img = adapter ? exchange_2010_2110(w) : invwilf::exchange(w, *family);
                    const Word back =
                        adapter ? exchange_2010_2110(img) : invwilf::exchange(img, *family);
                    if (window_mask(p, img) != mq || window_mask(q, img) != mp || back != w)
                        throw MismatchWitness(format_word(w));
                }
                ++codomain_by_t[mq];
                ++image_by_t[mp];
                if (!images.insert(encode_word(img)).second)
                    throw MismatchWitness(format_word(w));
            },
            serial);
    } catch (const MismatchWitness& e) {
        report.sequences_checked = factorial(n);
        report.consistent = false;
        report.mismatch_witness = parse_word(e.witness);
        return report;
    }

    report.sequences_checked = factorial(n);
    if (method == MapMethod::Recursive) {
        // injective + image contained in each {Em(q)=T} + equal counts => onto
        for (const auto& [mask, count] : image_by_t) {
            auto it = codomain_by_t.find(mask);
            if (it == codomain_by_t.end() || it->second != count) {
                report.consistent = false;
                return report;
            }
        }
    }
    report.consistent = true;
    return report;
}

void sweep_invseqs(int n, const std::function<void(const Word&)>& body,
                   const VerifyOptions& opts) {
    struct Nothing {};
    run_chunked<Nothing>(n, opts, [&](Nothing&, const Word& w) { body(w); });
}

}  // namespace invwilf
