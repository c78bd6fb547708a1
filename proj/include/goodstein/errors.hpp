#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace goodstein {

/// Base of every error raised by the library. `name()` is the stable
/// identifier printed by the CLI (e.g. "InvalidBase", "EmptyRun").
class error : public std::runtime_error {
public:
    error(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}

    const char* name() const noexcept { return name_; }

private:
    const char* name_;
};

class invalid_base : public error {
public:
    explicit invalid_base(const std::string& base)
        : error("InvalidBase", "InvalidBase: base must be at least 2, got " + base) {}
};

class digit_out_of_range : public error {
public:
    digit_out_of_range(std::size_t index, const std::string& digit, const std::string& base)
        : error("DigitOutOfRange", "DigitOutOfRange: digit " + digit + " at index " +
                                       std::to_string(index) + " is not below base " + base),
          index_(index) {}

    /// Position of the offending digit, most-significant first.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class underflow : public error {
public:
    explicit underflow(const std::string& what) : error("Underflow", "Underflow: " + what) {}
};

class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error("DomainError", "DomainError: " + what) {}
};

class malformed_sequence : public error {
public:
    explicit malformed_sequence(const std::string& what)
        : error("MalformedSequence", "MalformedSequence: " + what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& token)
        : error("ParseError", "ParseError: not a decimal natural number: '" + token + "'") {}
};

class coefficient_out_of_range : public error {
public:
    coefficient_out_of_range(const std::string& coefficient, const std::string& base)
        : error("CoefficientOutOfRange", "CoefficientOutOfRange: coefficient " + coefficient +
                                             " exceeds base " + base) {}
};

class magnitude_cap_exceeded : public error {
public:
    /// `bit_length` is a lower bound when the evaluation was abandoned early.
    magnitude_cap_exceeded(std::uint64_t bit_length, std::uint64_t max_bits)
        : error("MagnitudeCapExceeded",
                "MagnitudeCapExceeded: value needs at least " + std::to_string(bit_length) +
                    " bits, cap is " + std::to_string(max_bits)),
          bit_length_(bit_length) {}

    std::uint64_t bit_length() const noexcept { return bit_length_; }

private:
    std::uint64_t bit_length_;
};

class invalid_config : public error {
public:
    explicit invalid_config(const std::string& what)
        : error("InvalidConfig", "InvalidConfig: " + what) {}
};

class step_mismatch : public error {
public:
    step_mismatch(std::uint64_t index, const std::string& why)
        : error("StepMismatch", "StepMismatch at index " + std::to_string(index) + ": " + why),
          index_(index) {}

    std::uint64_t index() const noexcept { return index_; }

private:
    std::uint64_t index_;
};

class empty_run : public error {
public:
    empty_run() : error("EmptyRun", "EmptyRun: no records to verify") {}
};

class arity_exceeded : public error {
public:
    arity_exceeded(std::size_t length, std::size_t arity)
        : error("ArityExceeded", "ArityExceeded: sequence of length " + std::to_string(length) +
                                     " does not fit arity " + std::to_string(arity)) {}
};

} // namespace goodstein
