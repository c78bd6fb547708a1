#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "goodstein/natural.hpp"

namespace goodstein {

/// Positional digits of a number, most-significant first, with no base
/// attached. The same object reads as different values under different
/// bases; 11001 is 25 in base 2 and 109 in base 3.
///
/// Invariant: empty (zero) or the leading digit is nonzero.
class DigitSequence {
public:
    DigitSequence() = default;
    DigitSequence(std::initializer_list<Natural> digits);
    /// Throws `malformed_sequence` on a leading zero.
    explicit DigitSequence(std::vector<Natural> digits);

    std::span<const Natural> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    const Natural& operator[](std::size_t i) const { return digits_[i]; }

    friend bool operator==(const DigitSequence&, const DigitSequence&) = default;
    /// Length first, then digit by digit from the most significant end.
    friend std::strong_ordering operator<=>(const DigitSequence& a, const DigitSequence& c);

private:
    std::vector<Natural> digits_;
};

struct RenderedNumeral {
    std::string text;
    Natural base;
};

/// Base-b representation of n; zero maps to the empty sequence.
DigitSequence to_digits(const Natural& n, const Natural& base);

/// Horner evaluation. Rejects digits that are not below the base.
Natural from_digits(const DigitSequence& s, const Natural& base);

/// Subtracts one in place-value form: trailing zeros borrow to base-1, the
/// lowest nonzero digit drops by one, and a vanished leading digit is
/// stripped.
DigitSequence decrement_in_base(const DigitSequence& s, const Natural& base);

std::strong_ordering lex_compare(const DigitSequence& a, const DigitSequence& c);

/// "20(11)_12": single-character digits below ten, parenthesised decimal
/// digits otherwise, base suffix in decimal. Zero renders as "0_<base>".
RenderedNumeral render(const DigitSequence& s, const Natural& base);

/// Sum of (x-1)*x^i for i in [0, n), accumulated term by term.
Natural lemma1_rhs(const Natural& x, const Natural& n);

} // namespace goodstein
