#include <doctest.h>
#include <type_traits>

#include "goodstein/numerals.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace goodstein;

TEST_CASE("to_digits")
{
    CHECK(to_digits(25, 2) == DigitSequence{1, 1, 0, 0, 1});
    CHECK(to_digits(0, 7).empty());

    // 2*3^18 + 3^2 + 1; the units digit is 1.
    REQUIRE(2 * oracle::ipow(3, 18) + 9 + 1 == 774840988U);
    const DigitSequence s = to_digits(774840988, 3);
    CHECK(s == seq_of(oracle::digits(774840988, 3)));
    REQUIRE(s.size() == 19);
    CHECK(s[0] == Natural(2));
    CHECK(s[16] == Natural(1));
    CHECK(s[17] == Natural(0));
    CHECK(s[18] == Natural(1));

    CHECK_THROWS_AS(to_digits(5, 1), invalid_base);
    CHECK_THROWS_AS(to_digits(5, 0), invalid_base);
}

TEST_CASE("from_digits")
{
    const DigitSequence s{1, 1, 0, 0, 1};
    CHECK(from_digits(s, 2) == Natural(25));
    CHECK(from_digits(s, 3) == Natural(109));
    CHECK(from_digits({}, 5).is_zero());
    CHECK_THROWS_AS(from_digits(s, 1), invalid_base);

    try {
        from_digits(DigitSequence{2, 0, 3}, 3);
        FAIL("expected DigitOutOfRange");
    } catch (const digit_out_of_range& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("DigitSequence rejects a leading zero")
{
    CHECK_THROWS_AS(DigitSequence({0, 1}), malformed_sequence);
    CHECK_NOTHROW(DigitSequence({1, 0}));
}

TEST_CASE("decrement_in_base")
{
    CHECK(decrement_in_base({1, 1, 0, 0, 0}, 2) == DigitSequence{1, 0, 1, 1, 1});
    CHECK(decrement_in_base({1, 1, 0, 0, 0}, 3) == DigitSequence{1, 0, 2, 2, 2});
    for (int b = 2; b <= 12; ++b) {
        CHECK(decrement_in_base({1}, b).empty());
    }
    CHECK(decrement_in_base({1, 0, 0}, 10) == DigitSequence{9, 9});
    CHECK_THROWS_AS(decrement_in_base({}, 2), underflow);
    CHECK_THROWS_AS(decrement_in_base({1, 2}, 2), digit_out_of_range);
}

TEST_CASE("lex_compare")
{
    CHECK(lex_compare({2, 2, 2}, {1, 0, 0, 0}) < 0);
    CHECK(lex_compare({1, 0, 2, 2, 2}, {1, 1, 0, 0, 0}) < 0);
    CHECK(lex_compare({5}, {5}) == 0);
    CHECK(lex_compare({}, {1}) < 0);
    CHECK(DigitSequence{3, 1} > DigitSequence{2, 9});
}

TEST_CASE("render")
{
    CHECK(render({2, 0, 11}, 12).text == "20(11)_12");
    CHECK(render({}, 9).text == "0_9");
    CHECK(render({1, 23, 23}, 24).text == "1(23)(23)_24");
    CHECK(render({1, 0, 0, 0}, 2).text == "1000_2");
    CHECK(render({9}, 1536).base == Natural(1536));
}

TEST_CASE("lemma1_rhs")
{
    CHECK(lemma1_rhs(2, 3) == Natural(7));
    CHECK(lemma1_rhs(3, 3) == Natural(26));
    CHECK(lemma1_rhs(1, 5).is_zero());
    CHECK_THROWS_AS(lemma1_rhs(0, 3), domain_error);
    CHECK_THROWS_AS(lemma1_rhs(3, 0), domain_error);

    for (std::uint64_t x = 1; x <= 10; ++x) {
        for (std::uint64_t n = 1; n <= 12; ++n) {
            // 10^12 fits in 64 bits, so the native oracle is exact here.
            CHECK(lemma1_rhs(x, n) == Natural(oracle::ipow(x, n) - 1));
        }
    }
}

TEST_CASE("property: round trip and digit bound")
{
    for (std::uint64_t b = 2; b <= 16; ++b) {
        for (std::uint64_t n = 0; n < 10'000; ++n) {
            const DigitSequence s = to_digits(n, b);
            REQUIRE(from_digits(s, b) == Natural(n));
            REQUIRE(s == seq_of(oracle::digits(n, b)));
            for (const Natural& d : s.digits()) {
                REQUIRE(d < Natural(b));
            }
            if (n > 0) {
                REQUIRE(!s[0].is_zero());
            }
        }
    }
}

TEST_CASE("property: decrement agrees with value-domain subtraction")
{
    for (std::uint64_t b = 2; b <= 10; ++b) {
        for (std::uint64_t n = 1; n < 10'000; ++n) {
            const DigitSequence s = to_digits(n, b);
            const DigitSequence d = decrement_in_base(s, b);
            REQUIRE(d == to_digits(from_digits(s, b) - Natural(1), b));
            REQUIRE(d.size() <= s.size());
        }
    }
}

TEST_CASE("digit sequences carry no base")
{
    static_assert(sizeof(DigitSequence) == sizeof(std::vector<Natural>));
    // 11001 from base 2 and 11001 read off 9565 in base 10 are one object.
    CHECK(to_digits(25, 2) == to_digits(11001, 10));
    CHECK(lex_compare(to_digits(25, 2), to_digits(11001, 10)) == 0);
    CHECK(from_digits(to_digits(25, 2), 10) == Natural(11001));
}

TEST_CASE("property: lex_compare is a total order (exhaustive, digits <= 3, length <= 4)")
{
    const auto all = all_sequences(3, 4);
    const std::size_t n = all.size();
    std::vector<int> cmp(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto o = lex_compare(all[i], all[j]);
            cmp[i * n + j] = o < 0 ? -1 : (o > 0 ? 1 : 0);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(cmp[i * n + i] == 0);
        for (std::size_t j = 0; j < n; ++j) {
            REQUIRE(cmp[i * n + j] == -cmp[j * n + i]);
            if (i != j) {
                REQUIRE(cmp[i * n + j] != 0);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (cmp[i * n + j] >= 0) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (cmp[j * n + k] < 0) {
                    REQUIRE(cmp[i * n + k] < 0);
                }
            }
        }
    }
}
