#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invwilf/core.hpp"

namespace invwilf {

enum class ExecMode { Serial, Parallel, Auto };

struct VerifyOptions {
    int cap = kDefaultEnumerationCap;
    ExecMode mode = ExecMode::Auto;
    int threads = 0;  // 0 = all available
    /// Retain the lexicographically first witness sequence per key.
    bool keep_examples = true;
};

/// Every length-r word equal to its own reduction, in lexicographic order.
std::vector<Pattern> all_patterns(int r);

/// Occurrence sets as bitmasks: position i <-> bit i-1.
using Mask = std::uint64_t;
Mask positions_to_mask(const OccurrenceSet& t);
OccurrenceSet mask_to_positions(Mask m);

/// Exact joint tally of (Em(p,e), Em(q,e)) over all of I_n.
struct JointDistribution {
    int n = 0;
    Pattern p, q;
    std::map<std::pair<Mask, Mask>, std::uint64_t> counts;
    std::map<std::pair<Mask, Mask>, Word> examples;  // lexicographically first per key

    std::uint64_t total() const;
    JointDistribution(Pattern p_, Pattern q_) : p(std::move(p_)), q(std::move(q_)) {}
};

JointDistribution joint_distribution(const Pattern& p, const Pattern& q, int n,
                                     const VerifyOptions& opts = {});

/// Single-pattern tally of Em(p, e) over I_n (the independent marginal oracle).
std::map<Mask, std::uint64_t> em_distribution(const Pattern& p, int n,
                                              const VerifyOptions& opts = {});

enum class Relation { SuperStrong, Reciprocal };

struct EquivalenceWitness {
    OccurrenceSet S, T;
    std::uint64_t count_forward = 0;
    std::uint64_t count_backward = 0;
    std::optional<Word> example_forward;
    std::optional<Word> example_backward;
};

struct EquivalenceReport {
    Relation relation = Relation::SuperStrong;
    Pattern p, q;
    int n = 0;
    bool holds = false;
    std::optional<EquivalenceWitness> witness;  // always present when holds is false
    std::string note;                           // finite-n caveat

    EquivalenceReport(Pattern p_, Pattern q_) : p(std::move(p_)), q(std::move(q_)) {}
};

/// Marginal equality |{Em(p)=T}| = |{Em(q)=T}| for every T over I_n.
EquivalenceReport check_super_strong(const Pattern& p, const Pattern& q, int n,
                                     const VerifyOptions& opts = {});

/// Symmetry counts(S,T) = counts(T,S) of the joint distribution over I_n.
EquivalenceReport check_reciprocal(const Pattern& p, const Pattern& q, int n,
                                   const VerifyOptions& opts = {});

struct ClassificationResult {
    int n = 0;
    /// Partition of all 75 length-4 patterns, classes and members sorted.
    std::vector<std::vector<std::string>> classes;

    std::vector<std::vector<std::string>> multi_classes() const;
    bool matches_expected() const;
};

/// The known complete list of multi-pattern equivalence classes among the 75
/// length-4 patterns (nine pairs, four triples, one quadruple).
const std::vector<std::vector<std::string>>& expected_multi_classes();

/// Partition the 75 patterns by equality of their full Em distributions over
/// I_n. Equality at finite n is necessary, not sufficient, for equivalence;
/// the result records the resolution used.
ClassificationResult classify_length4(int n, const VerifyOptions& opts = {});

enum class MapMethod { Recursive, Exchange };

struct CrosscheckReport {
    Pattern p, q;
    int n = 0;
    MapMethod method = MapMethod::Recursive;
    bool consistent = false;
    std::uint64_t sequences_checked = 0;
    std::optional<Word> mismatch_witness;

    CrosscheckReport(Pattern p_, Pattern q_) : p(std::move(p_)), q(std::move(q_)) {}
};

/// Confirms the constructive map realises the counted bijection on I_n:
/// Recursive -- phi_eq is injective and carries {Em(p)=T} onto {Em(q)=T};
/// Exchange -- the pass swaps the pair (Em(p), Em(q)) and is an involution.
/// (2010,2110) dispatches to the reversal adapter.
CrosscheckReport bijection_crosscheck(const Pattern& p, const Pattern& q, int n, MapMethod method,
                                      const VerifyOptions& opts = {});

/// Runs body over every element of I_n, serially or sharded across OpenMP
/// threads (lexicographic rank ranges). body must be thread-safe under
/// Parallel; exceptions abort the sweep and are rethrown.
void sweep_invseqs(int n, const std::function<void(const Word&)>& body,
                   const VerifyOptions& opts = {});

int scan_threads(const VerifyOptions& opts);
bool run_parallel(int n, const VerifyOptions& opts);

}  // namespace invwilf
