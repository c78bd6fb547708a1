#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "goodstein/natural.hpp"
#include "goodstein/numerals.hpp"

namespace goodstein {

enum class SequenceKind { Decreasing, Weak, Strong };

std::string_view to_string(SequenceKind kind);

struct StepRecord {
    std::uint64_t index = 0;
    Natural base;
    Natural value;
    DigitSequence digits; ///< to_digits(value, base)
    std::string rendered; ///< render(digits, base).text

    static StepRecord make(std::uint64_t index, Natural base, Natural value);

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct RunConfig {
    Natural start_value;
    Natural start_base = 2;
    /// Upper bound on emitted records, the seed record included.
    std::uint64_t max_steps = 1'000'000;
    /// Upper bound on the bit length of any intermediate strong-step value.
    std::uint64_t max_bits = 1'000'000;
};

enum class RunStatus { TerminatedAtZero, StepCapReached, MagnitudeCapReached };

std::string_view to_string(RunStatus status);

struct RunOutcome {
    RunStatus status = RunStatus::TerminatedAtZero;
    std::uint64_t steps_emitted = 0;
    StepRecord final;
};

/// n - 1.
Natural decreasing_step(const Natural& n);

/// Reads n's base-b digits in base b+1, then subtracts one.
Natural weak_step(const Natural& n, const Natural& base);

/// Hereditary base bump from b to b+1, then subtracts one. Throws
/// `magnitude_cap_exceeded` if the bumped value needs more than `max_bits`.
Natural strong_step(const Natural& n, const Natural& base, std::uint64_t max_bits);

/// Pull-style generator over one run. The seed record comes first, then one
/// record per step until the value reaches zero or a cap fires. Only the
/// current state is held; a run is never materialised.
class SequenceRun {
public:
    /// Throws `invalid_base` or `invalid_config` for a bad configuration.
    SequenceRun(SequenceKind kind, RunConfig config);

    /// Next record, or nullopt once the run is over.
    std::optional<StepRecord> next();

    /// Set once `next()` has returned nullopt.
    const std::optional<RunOutcome>& outcome() const noexcept { return outcome_; }

    SequenceKind kind() const noexcept { return kind_; }

private:
    void finish(RunStatus status);

    SequenceKind kind_;
    RunConfig config_;
    std::optional<StepRecord> last_;
    std::uint64_t emitted_ = 0;
    std::optional<RunOutcome> outcome_;
};

/// Drains a run into `sink` and returns its outcome.
RunOutcome run(SequenceKind kind, RunConfig config,
               const std::function<void(const StepRecord&)>& sink);

} // namespace goodstein
