#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodstein/errors.hpp"

namespace goodstein {

struct DivMod;

/// Arbitrary-precision non-negative integer.
///
/// Arithmetic is exact. Subtraction that would go below zero throws
/// `underflow` instead of wrapping, so the type can never hold a negative
/// magnitude.
class Natural {
public:
    using magnitude_type = boost::multiprecision::cpp_int;

    Natural() = default;

    template <std::integral T>
    Natural(T v) // NOLINT(google-explicit-constructor): literals read naturally
    {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) {
                throw domain_error("negative value " + std::to_string(v));
            }
        }
        value_ = v;
    }

    /// Parses a non-empty string of ASCII decimal digits.
    static Natural parse(std::string_view decimal);

    std::string to_string() const;
    bool is_zero() const noexcept { return value_.is_zero(); }
    /// Number of significant bits; 0 for zero.
    std::uint64_t bit_length() const;
    std::optional<std::uint64_t> to_u64() const;

    const magnitude_type& magnitude() const noexcept { return value_; }

    Natural& operator+=(const Natural& rhs);
    Natural& operator-=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b)
    {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    explicit Natural(magnitude_type v) : value_(std::move(v)) {}

    friend DivMod divmod(const Natural&, const Natural&);
    friend Natural pow(const Natural&, std::uint64_t);

    magnitude_type value_;
};

struct DivMod {
    Natural quotient;
    Natural remainder;
};

/// Euclidean division; throws `domain_error` on a zero divisor.
DivMod divmod(const Natural& n, const Natural& d);

Natural pow(const Natural& base, std::uint64_t exponent);

} // namespace goodstein
