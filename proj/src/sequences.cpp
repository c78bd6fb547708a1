#include "goodstein/sequences.hpp"

#include <utility>

#include "goodstein/hereditary.hpp"

namespace goodstein {

std::string_view to_string(SequenceKind kind)
{
    switch (kind) {
    case SequenceKind::Decreasing: return "decreasing";
    case SequenceKind::Weak: return "weak";
    case SequenceKind::Strong: return "strong";
    }
    return "unknown";
}

std::string_view to_string(RunStatus status)
{
    switch (status) {
    case RunStatus::TerminatedAtZero: return "TerminatedAtZero";
    case RunStatus::StepCapReached: return "StepCapReached";
    case RunStatus::MagnitudeCapReached: return "MagnitudeCapReached";
    }
    return "unknown";
}

StepRecord StepRecord::make(std::uint64_t index, Natural base, Natural value)
{
    DigitSequence digits = to_digits(value, base);
    std::string rendered = render(digits, base).text;
    return {index, std::move(base), std::move(value), std::move(digits), std::move(rendered)};
}

namespace {

void require_step_domain(const Natural& n, const Natural& base)
{
    if (n.is_zero()) {
        throw domain_error("the sequence has already reached zero");
    }
    if (base < Natural(2)) {
        throw invalid_base(base.to_string());
    }
}

} // namespace

Natural decreasing_step(const Natural& n)
{
    if (n.is_zero()) {
        throw domain_error("cannot decrease zero");
    }
    return n - Natural(1);
}

Natural weak_step(const Natural& n, const Natural& base)
{
    require_step_domain(n, base);
    return from_digits(to_digits(n, base), base + Natural(1)) - Natural(1);
}

Natural strong_step(const Natural& n, const Natural& base, std::uint64_t max_bits)
{
    require_step_domain(n, base);
    const HereditaryTree tree = build_hereditary(n, base);
    return eval_tree_capped(tree, base + Natural(1), max_bits) - Natural(1);
}

SequenceRun::SequenceRun(SequenceKind kind, RunConfig config)
    : kind_(kind), config_(std::move(config))
{
    if (config_.start_base < Natural(2)) {
        throw invalid_base(config_.start_base.to_string());
    }
    if (config_.max_steps < 1) {
        throw invalid_config("max_steps must be at least 1");
    }
}

void SequenceRun::finish(RunStatus status)
{
    outcome_ = RunOutcome{status, emitted_, *last_};
}

std::optional<StepRecord> SequenceRun::next()
{
    if (outcome_) {
        return std::nullopt;
    }
    if (!last_) {
        last_ = StepRecord::make(0, config_.start_base, config_.start_value);
        ++emitted_;
        return last_;
    }
    if (last_->value.is_zero()) {
        finish(RunStatus::TerminatedAtZero);
        return std::nullopt;
    }
    if (emitted_ >= config_.max_steps) {
        finish(RunStatus::StepCapReached);
        return std::nullopt;
    }

    const StepRecord& prev = *last_;
    Natural base = prev.base;
    Natural value;
    switch (kind_) {
    case SequenceKind::Decreasing:
        value = decreasing_step(prev.value);
        break;
    case SequenceKind::Weak:
        value = weak_step(prev.value, prev.base);
        base += Natural(1);
        break;
    case SequenceKind::Strong:
        try {
            value = strong_step(prev.value, prev.base, config_.max_bits);
        } catch (const magnitude_cap_exceeded&) {
            finish(RunStatus::MagnitudeCapReached);
            return std::nullopt;
        }
        base += Natural(1);
        break;
    }
    last_ = StepRecord::make(prev.index + 1, std::move(base), std::move(value));
    ++emitted_;
    return last_;
}

RunOutcome run(SequenceKind kind, RunConfig config,
               const std::function<void(const StepRecord&)>& sink)
{
    SequenceRun seq(kind, std::move(config));
    while (auto rec = seq.next()) {
        sink(*rec);
    }
    return *seq.outcome();
}

} // namespace goodstein
