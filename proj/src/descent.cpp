#include "goodstein/descent.hpp"

#include <string>

namespace goodstein {

DescentEvidence compare_digits(std::uint64_t step_index, const DigitSequence& prev,
                               const DigitSequence& next)
{
    DescentEvidence ev;
    ev.step_index = step_index;
    ev.prev_digits = prev;
    ev.next_digits = next;
    ev.length_ok = next.size() <= prev.size();
    ev.lex_ok = lex_compare(next, prev) < 0;
    if (ev.length_ok) {
        const std::size_t pad = prev.size() - next.size();
        for (std::size_t i = 0; i < prev.size(); ++i) {
            const Natural d = i < pad ? Natural() : next[i - pad];
            if (d != prev[i]) {
                if (d < prev[i]) {
                    ev.pivot = i;
                }
                break;
            }
        }
    }
    return ev;
}

Verdict verdict_of(std::span<const DescentEvidence> evidence, std::size_t k)
{
    for (const DescentEvidence& ev : evidence) {
        if (!ev.holds() || ev.next_digits.size() > k) {
            return Verdict{ev.step_index};
        }
    }
    return {};
}

DescentEvidence check_step(const StepRecord& prev, const StepRecord& next)
{
    const std::uint64_t at = next.index;
    if (next.index != prev.index + 1) {
        throw step_mismatch(at, "index does not follow " + std::to_string(prev.index));
    }
    if (next.base != prev.base + Natural(1)) {
        throw step_mismatch(at, "base " + next.base.to_string() + " does not follow base " +
                                    prev.base.to_string());
    }
    for (const StepRecord* r : {&prev, &next}) {
        if (r->base < Natural(2) || r->digits != to_digits(r->value, r->base)) {
            throw step_mismatch(r->index, "digits do not represent value " +
                                              r->value.to_string() + " in base " +
                                              r->base.to_string());
        }
        if (r->rendered != render(r->digits, r->base).text) {
            throw step_mismatch(r->index, "rendering '" + r->rendered + "' does not match digits");
        }
    }
    if (prev.value.is_zero()) {
        throw step_mismatch(at, "no step follows a zero value");
    }
    const Natural expected = weak_step(prev.value, prev.base);
    if (next.value != expected) {
        throw step_mismatch(at, "value " + next.value.to_string() + " is not the weak successor " +
                                    expected.to_string());
    }

    return compare_digits(at, prev.digits, next.digits);
}

void DescentVerifier::feed(const StepRecord& record)
{
    if (!start_) {
        start_ = record;
        prev_ = record;
        k_ = record.digits.size();
        return;
    }
    DescentEvidence ev = check_step(*prev_, record);
    ++steps_checked_;
    // Arity is checked on its own so a broken length lemma cannot hide
    // behind the per-step comparison.
    const bool fits = record.digits.size() <= k_;
    if ((!ev.holds() || !fits) && verdict_.all_steps_descend()) {
        verdict_.violation_at = ev.step_index;
    }
    if (keep_evidence_) {
        evidence_.push_back(std::move(ev));
    }
    prev_ = record;
}

DescentCertificate DescentVerifier::certificate() const
{
    if (!start_) {
        throw empty_run();
    }
    return {*start_, k_, evidence_, steps_checked_, verdict_};
}

DescentCertificate verify_run(const std::function<std::optional<StepRecord>()>& records)
{
    DescentVerifier v;
    while (auto r = records()) {
        v.feed(*r);
    }
    return v.certificate();
}

DescentCertificate verify_run(const std::vector<StepRecord>& records)
{
    DescentVerifier v;
    for (const StepRecord& r : records) {
        v.feed(r);
    }
    return v.certificate();
}

Rank rank(const DigitSequence& s, std::size_t k)
{
    if (s.size() > k) {
        throw arity_exceeded(s.size(), k);
    }
    Rank r(k - s.size());
    r.insert(r.end(), s.digits().begin(), s.digits().end());
    return r;
}

} // namespace goodstein
