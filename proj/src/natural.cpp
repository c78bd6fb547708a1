#include "goodstein/natural.hpp"

#include <ostream>

namespace goodstein {

Natural Natural::parse(std::string_view decimal)
{
    if (decimal.empty()) {
        throw parse_error(std::string(decimal));
    }
    magnitude_type v = 0;
    for (const char ch : decimal) {
        if (ch < '0' || ch > '9') {
            throw parse_error(std::string(decimal));
        }
        v *= 10;
        v += ch - '0';
    }
    return Natural(std::move(v));
}

std::string Natural::to_string() const
{
    return value_.str();
}

std::uint64_t Natural::bit_length() const
{
    if (value_.is_zero()) {
        return 0;
    }
    return static_cast<std::uint64_t>(boost::multiprecision::msb(value_)) + 1;
}

std::optional<std::uint64_t> Natural::to_u64() const
{
    if (bit_length() > 64) {
        return std::nullopt;
    }
    return value_.convert_to<std::uint64_t>();
}

Natural& Natural::operator+=(const Natural& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs)
{
    if (value_ < rhs.value_) {
        throw underflow(value_.str() + " - " + rhs.value_.str() + " is negative");
    }
    value_ -= rhs.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n)
{
    return os << n.value_.str();
}

DivMod divmod(const Natural& n, const Natural& d)
{
    if (d.is_zero()) {
        throw domain_error("division by zero");
    }
    Natural::magnitude_type q;
    Natural::magnitude_type r;
    boost::multiprecision::divide_qr(n.value_, d.value_, q, r);
    return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural pow(const Natural& base, std::uint64_t exponent)
{
    // cpp_int's pow takes an unsigned exponent; square-and-multiply keeps
    // uint64 exponents usable on every platform.
    Natural::magnitude_type result = 1;
    Natural::magnitude_type b = base.value_;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return Natural(std::move(result));
}

} // namespace goodstein
