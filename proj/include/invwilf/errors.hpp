#pragma once

#include <stdexcept>
#include <string>

namespace invwilf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyWord : Error {
    EmptyWord() : Error("reduction of an empty word") {}
};

struct InvalidPattern : Error {
    explicit InvalidPattern(const std::string& what) : Error("invalid pattern: " + what) {}
};

struct InvalidSequence : Error {
    explicit InvalidSequence(const std::string& what) : Error("invalid sequence: " + what) {}
};

struct LengthMismatch : Error {
    LengthMismatch(int a, int b)
        : Error("pattern lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct EnumerationCapExceeded : Error {
    EnumerationCapExceeded(int n, int cap)
        : Error("enumeration of I_" + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
          n(n), cap(cap) {}
    int n, cap;
};

struct NotAnOccurrence : Error {
    NotAnOccurrence(int position, const std::string& pattern)
        : Error("position " + std::to_string(position) + " is not an occurrence of " + pattern),
          position(position) {}
    int position;
};

struct DistinctValueMismatch : Error {
    explicit DistinctValueMismatch(int position)
        : Error("window at " + std::to_string(position) + " has the wrong number of distinct values"),
          position(position) {}
    int position;
};

struct MissingOccurrence : Error {
    MissingOccurrence(int position, const std::string& pattern)
        : Error("requested change at " + std::to_string(position) + " but " + pattern +
                " does not occur there"),
          position(position) {}
    int position;
};

struct TerminationGuardExceeded : Error {
    explicit TerminationGuardExceeded(long long guard)
        : Error("termination guard exceeded after " + std::to_string(guard) + " map applications"),
          guard(guard) {}
    long long guard;
};

struct LevelSetNotContained : Error {
    explicit LevelSetNotContained(const std::string& detail)
        : Error("occurrence set after a change does not contain the level set: " + detail) {}
};

struct RuleNotNonOverlapping : Error {
    explicit RuleNotNonOverlapping(const std::string& detail)
        : Error("iterative mapping requires non-overlapping, mutually non-overlapping patterns: " +
                detail) {}
};

struct IncompatiblePair : Error {
    explicit IncompatiblePair(const std::string& detail)
        : Error("no change rule serves this pattern pair: " + detail) {}
};

struct TransientQObserved : Error {
    explicit TransientQObserved(int position)
        : Error("transient target-pattern occurrence observed at position " +
                std::to_string(position)),
          position(position) {}
    int position;
};

struct AuditFailure : Error {
    AuditFailure(int position, const std::string& check)
        : Error("audit failure at position " + std::to_string(position) + ": " + check),
          position(position), check(check) {}
    int position;
    std::string check;
};

struct UnknownFormat : Error {
    explicit UnknownFormat(const std::string& name) : Error("unknown output format: " + name) {}
};

struct InconsistentTriple : Error {
    explicit InconsistentTriple(const std::string& detail)
        : Error("rows are not successive images under the exchange pass: " + detail) {}
};

struct InvalidHighlight : Error {
    InvalidHighlight(int position, const std::string& pattern)
        : Error("highlight at " + std::to_string(position) + " is not an occurrence of " + pattern) {}
};

struct MismatchWitness : Error {
    explicit MismatchWitness(const std::string& witness)
        : Error("constructive map disagrees with the counted bijection; witness " + witness),
          witness(witness) {}
    std::string witness;
};

}  // namespace invwilf
