#include <doctest.h>

#include <vector>

#include "goodstein/sequences.hpp"
#include "oracles.hpp"

using namespace goodstein;

namespace {

std::vector<Natural> values_of(SequenceKind kind, RunConfig cfg, RunOutcome* outcome = nullptr)
{
    std::vector<Natural> out;
    const RunOutcome o = run(kind, std::move(cfg), [&](const StepRecord& r) { out.push_back(r.value); });
    if (outcome != nullptr) {
        *outcome = o;
    }
    return out;
}

std::vector<Natural> nats(std::initializer_list<std::uint64_t> xs)
{
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("weak_step")
{
    CHECK(weak_step(25, 2) == Natural(108));
    CHECK(weak_step(108, 3) == Natural(319));
    CHECK(weak_step(319, 4) == Natural(717));
    CHECK(weak_step(717, 5) == Natural(1423));
    for (int b = 2; b < 40; ++b) {
        CHECK(weak_step(1, b).is_zero());
    }
    CHECK_THROWS_AS(weak_step(0, 2), domain_error);
    CHECK_THROWS_AS(weak_step(3, 1), invalid_base);
}

TEST_CASE("strong_step")
{
    // Expected values come from the native hereditary-bump oracle.
    REQUIRE(oracle::hereditary_bump(3, 2) - 1 == 3);
    REQUIRE(oracle::hereditary_bump(4, 2) - 1 == 26);
    REQUIRE(oracle::hereditary_bump(26, 3) - 1 == 41);
    CHECK(strong_step(3, 2, 64) == Natural(3));
    CHECK(strong_step(4, 2, 64) == Natural(26));
    CHECK(strong_step(26, 3, 64) == Natural(41));
    CHECK_THROWS_AS(strong_step(0, 2, 64), domain_error);
    CHECK_THROWS_AS(strong_step(4, 2, 4), magnitude_cap_exceeded);
}

TEST_CASE("decreasing_step")
{
    CHECK(decreasing_step(24) == Natural(23));
    CHECK(decreasing_step(1).is_zero());
    CHECK(decreasing_step(108) == Natural(107));
    CHECK_THROWS_AS(decreasing_step(0), domain_error);
}

TEST_CASE("run: weak from 25 and from 8")
{
    RunOutcome o;
    CHECK(values_of(SequenceKind::Weak, {25, 2, 5}, &o) == nats({25, 108, 319, 717, 1423}));
    CHECK(o.status == RunStatus::StepCapReached);
    CHECK(o.steps_emitted == 5);
    CHECK(o.final.value == Natural(1423));
    CHECK(o.final.base == Natural(6));

    std::vector<std::string> rendered;
    run(SequenceKind::Weak, {8, 2, 5}, [&](const StepRecord& r) { rendered.push_back(r.rendered); });
    CHECK(rendered == std::vector<std::string>{"1000_2", "222_3", "221_4", "220_5", "215_6"});
}

TEST_CASE("run: weak from 1")
{
    std::vector<StepRecord> recs;
    const RunOutcome o = run(SequenceKind::Weak, {1}, [&](const StepRecord& r) { recs.push_back(r); });
    REQUIRE(recs.size() == 2);
    CHECK(recs[0] == StepRecord::make(0, 2, 1));
    CHECK(recs[1] == StepRecord::make(1, 3, 0));
    CHECK(recs[1].rendered == "0_3");
    CHECK(o.status == RunStatus::TerminatedAtZero);
    CHECK(o.final.value.is_zero());
}

TEST_CASE("run: strong prefixes")
{
    RunOutcome o;
    CHECK(values_of(SequenceKind::Strong, {3}, &o) == nats({3, 3, 3, 2, 1, 0}));
    CHECK(o.status == RunStatus::TerminatedAtZero);

    std::vector<std::uint64_t> expected{4};
    for (std::uint64_t b = 2; expected.size() < 6; ++b) {
        expected.push_back(oracle::hereditary_bump(expected.back(), b) - 1);
    }
    REQUIRE(expected == std::vector<std::uint64_t>{4, 26, 41, 60, 83, 109});
    const auto got = values_of(SequenceKind::Strong, {4, 2, 6});
    CHECK(got == nats({4, 26, 41, 60, 83, 109}));
}

TEST_CASE("run: strong runs stop at the magnitude cap")
{
    RunOutcome o;
    const auto vals = values_of(SequenceKind::Strong, {16, 2, 100, 64}, &o);
    CHECK(o.status == RunStatus::MagnitudeCapReached);
    CHECK(o.final.value == vals.back());
    CHECK(o.steps_emitted == vals.size());
}

TEST_CASE("run: decreasing with a fixed base")
{
    for (std::uint64_t n = 1; n <= 50; ++n) {
        std::vector<StepRecord> recs;
        const RunOutcome o =
            run(SequenceKind::Decreasing, {n, 3}, [&](const StepRecord& r) { recs.push_back(r); });
        REQUIRE(recs.size() == n + 1);
        CHECK(o.status == RunStatus::TerminatedAtZero);
        for (std::size_t i = 0; i < recs.size(); ++i) {
            CHECK(recs[i].base == Natural(3));
            CHECK(recs[i].value == Natural(n - i));
        }
    }
    CHECK(values_of(SequenceKind::Decreasing, {3, 10}) == nats({3, 2, 1, 0}));
}

TEST_CASE("run: configuration is validated")
{
    CHECK_THROWS_AS(SequenceRun(SequenceKind::Weak, {5, 1}), invalid_base);
    CHECK_THROWS_AS(SequenceRun(SequenceKind::Weak, {5, 2, 0}), invalid_config);
}

TEST_CASE("run: streaming generator")
{
    SequenceRun seq(SequenceKind::Weak, {3});
    CHECK(!seq.outcome());
    const auto first = seq.next();
    REQUIRE(first);
    CHECK(first->rendered == "11_2");
    CHECK(!seq.outcome());
    std::size_t n = 1;
    while (seq.next()) {
        ++n;
    }
    REQUIRE(seq.outcome());
    CHECK(seq.outcome()->steps_emitted == n);
    CHECK(!seq.next());
}

TEST_CASE("property: weak termination from 1..7 in base 2")
{
    // Step counts from an independent native-integer simulation.
    const std::uint64_t steps[] = {1, 3, 5, 21, 61, 381, 2045};
    for (std::uint64_t start = 1; start <= 7; ++start) {
        std::uint64_t n = start;
        std::uint64_t b = 2;
        std::uint64_t count = 0;
        for (; n != 0; ++b, ++count) {
            n = oracle::weak_bump(n, b) - 1;
        }
        REQUIRE(count == steps[start - 1]);

        RunConfig cfg{start, 2, 100'000};
        std::uint64_t index = 0;
        const RunOutcome o = run(SequenceKind::Weak, cfg, [&](const StepRecord& r) {
            REQUIRE(r.index == index);
            REQUIRE(r.base == Natural(2 + index));
            REQUIRE(r.digits == to_digits(r.value, r.base));
            REQUIRE(r.rendered == render(r.digits, r.base).text);
            ++index;
        });
        CHECK(o.status == RunStatus::TerminatedAtZero);
        CHECK(o.steps_emitted == steps[start - 1] + 1);
    }
}

TEST_CASE("property: weak steps grow while the base digit structure persists")
{
    for (std::uint64_t b = 2; b <= 12; ++b) {
        for (std::uint64_t n = b; n < 3000; ++n) {
            REQUIRE(to_digits(n, b).size() >= 2);
            REQUIRE(weak_step(n, b) >= Natural(n));
        }
    }
}

TEST_CASE("property: strong records stay consistent")
{
    run(SequenceKind::Strong, {4, 2, 2000}, [](const StepRecord& r) {
        REQUIRE(r.digits == to_digits(r.value, r.base));
        REQUIRE(r.rendered == render(r.digits, r.base).text);
    });
}
