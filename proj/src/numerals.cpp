#include "goodstein/numerals.hpp"

#include <algorithm>
#include <utility>

namespace goodstein {

namespace {

void require_base(const Natural& base)
{
    if (base < Natural(2)) {
        throw invalid_base(base.to_string());
    }
}

void require_digits_below(const DigitSequence& s, const Natural& base)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= base) {
            throw digit_out_of_range(i, s[i].to_string(), base.to_string());
        }
    }
}

} // namespace

DigitSequence::DigitSequence(std::initializer_list<Natural> digits)
    : DigitSequence(std::vector<Natural>(digits))
{
}

DigitSequence::DigitSequence(std::vector<Natural> digits) : digits_(std::move(digits))
{
    if (!digits_.empty() && digits_.front().is_zero()) {
        throw malformed_sequence("leading zero digit");
    }
}

std::strong_ordering operator<=>(const DigitSequence& a, const DigitSequence& c)
{
    return lex_compare(a, c);
}

DigitSequence to_digits(const Natural& n, const Natural& base)
{
    require_base(base);
    std::vector<Natural> digits;
    Natural rest = n;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, base);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    std::reverse(digits.begin(), digits.end());
    return DigitSequence(std::move(digits));
}

Natural from_digits(const DigitSequence& s, const Natural& base)
{
    require_base(base);
    require_digits_below(s, base);
    Natural value;
    for (const Natural& d : s.digits()) {
        value *= base;
        value += d;
    }
    return value;
}

DigitSequence decrement_in_base(const DigitSequence& s, const Natural& base)
{
    require_base(base);
    if (s.empty()) {
        throw underflow("cannot decrement the empty sequence (zero)");
    }
    require_digits_below(s, base);

    std::vector<Natural> digits(s.digits().begin(), s.digits().end());
    const Natural top = base - Natural(1);
    std::size_t i = digits.size();
    while (digits[i - 1].is_zero()) {
        digits[i - 1] = top;
        --i;
    }
    // Leading digit is nonzero, so the scan stops at or before index 0.
    digits[i - 1] -= Natural(1);
    if (digits.front().is_zero()) {
        digits.erase(digits.begin());
    }
    return DigitSequence(std::move(digits));
}

std::strong_ordering lex_compare(const DigitSequence& a, const DigitSequence& c)
{
    if (a.size() != c.size()) {
        return a.size() <=> c.size();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (const auto o = a[i] <=> c[i]; o != 0) {
            return o;
        }
    }
    return std::strong_ordering::equal;
}

RenderedNumeral render(const DigitSequence& s, const Natural& base)
{
    std::string text;
    if (s.empty()) {
        text = "0";
    }
    const Natural ten(10);
    for (const Natural& d : s.digits()) {
        if (d < ten) {
            text += d.to_string();
        } else {
            text += '(';
            text += d.to_string();
            text += ')';
        }
    }
    text += '_';
    text += base.to_string();
    return {std::move(text), base};
}

Natural lemma1_rhs(const Natural& x, const Natural& n)
{
    if (x.is_zero() || n.is_zero()) {
        throw domain_error("lemma1_rhs needs x >= 1 and n >= 1");
    }
    const Natural factor = x - Natural(1);
    Natural sum;
    Natural power(1);
    for (Natural i; i < n; i += Natural(1)) {
        sum += factor * power;
        power *= x;
    }
    return sum;
}

} // namespace goodstein
