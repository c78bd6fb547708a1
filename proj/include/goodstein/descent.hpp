#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "goodstein/numerals.hpp"
#include "goodstein/sequences.hpp"

namespace goodstein {

/// What one weak step did to the digit sequence.
struct DescentEvidence {
    std::uint64_t step_index = 0; ///< index of the successor record
    DigitSequence prev_digits;
    DigitSequence next_digits;
    bool length_ok = false;       ///< |next| <= |prev|
    bool lex_ok = false;          ///< next < prev, length first
    /// First position (in prev's coordinates, after left-padding next with
    /// zeros) where next holds the smaller digit.
    std::optional<std::size_t> pivot;

    bool holds() const noexcept { return length_ok && lex_ok; }
};

struct Verdict {
    std::optional<std::uint64_t> violation_at; ///< nullopt means every step descends

    bool all_steps_descend() const noexcept { return !violation_at.has_value(); }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Evidence that the padded digit tuple is a ranking function for a run.
struct DescentCertificate {
    StepRecord start;
    std::size_t k = 0; ///< arity: digit length of the seed record
    std::vector<DescentEvidence> evidence;
    std::uint64_t steps_checked = 0;
    Verdict verdict;
};

/// Digit-level half of check_step: length flag, lex flag and pivot, with no
/// claim about how the two sequences are related.
DescentEvidence compare_digits(std::uint64_t step_index, const DigitSequence& prev,
                               const DigitSequence& next);

/// First entry that fails either flag or exceeds arity k.
Verdict verdict_of(std::span<const DescentEvidence> evidence, std::size_t k);

/// Compares the digit sequences of two adjacent weak-run records. Throws
/// `step_mismatch` unless `next` really is the weak successor of `prev`.
DescentEvidence check_step(const StepRecord& prev, const StepRecord& next);

/// Incremental form of verify_run for streamed traces.
class DescentVerifier {
public:
    /// With `keep_evidence` false only the verdict and counters are kept.
    explicit DescentVerifier(bool keep_evidence = true) : keep_evidence_(keep_evidence) {}

    /// Throws `step_mismatch` on a corrupted pair.
    void feed(const StepRecord& record);

    bool empty() const noexcept { return !start_.has_value(); }

    /// Throws `empty_run` if nothing was fed.
    DescentCertificate certificate() const;

private:
    bool keep_evidence_;
    std::optional<StepRecord> start_;
    std::optional<StepRecord> prev_;
    std::size_t k_ = 0;
    std::vector<DescentEvidence> evidence_;
    std::uint64_t steps_checked_ = 0;
    Verdict verdict_;
};

DescentCertificate verify_run(const std::function<std::optional<StepRecord>()>& records);
DescentCertificate verify_run(const std::vector<StepRecord>& records);

/// Ranking tuple: the digits left-padded with zeros to arity k. Compare
/// ranks with the ordinary lexicographic `<` on vectors.
using Rank = std::vector<Natural>;

Rank rank(const DigitSequence& s, std::size_t k);

} // namespace goodstein
