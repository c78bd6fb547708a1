#pragma once

#include <cstdint>
#include <vector>

#include "goodstein/numerals.hpp"

inline goodstein::DigitSequence seq_of(const std::vector<std::uint64_t>& ds)
{
    std::vector<goodstein::Natural> v(ds.begin(), ds.end());
    return goodstein::DigitSequence(std::move(v));
}

/// Every digit sequence with digits in [0, max_digit] and length <= max_len
/// that satisfies the no-leading-zero invariant.
inline std::vector<goodstein::DigitSequence> all_sequences(std::uint64_t max_digit,
                                                           std::size_t max_len)
{
    std::vector<goodstein::DigitSequence> out{goodstein::DigitSequence{}};
    std::vector<std::vector<std::uint64_t>> frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<std::uint64_t>> grown;
        for (const auto& prefix : frontier) {
            for (std::uint64_t d = (len == 1 ? 1 : 0); d <= max_digit; ++d) {
                auto s = prefix;
                s.push_back(d);
                out.push_back(seq_of(s));
                grown.push_back(std::move(s));
            }
        }
        frontier = std::move(grown);
    }
    return out;
}
