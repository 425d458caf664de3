// Exact arithmetic on grossone numbers: finite, infinite and infinitesimal
// scalars written in the base-(1) positional form
//
//     c_m*(1)^p_m + ... + c_0*(1)^0 + ... + c_-k*(1)^p_-k
//
// where (1) denotes grossone, the digits c_i are machine doubles and the
// grosspowers p_i are signed integers sorted in decreasing order.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grosslip {

/// Malformed gross literal or expression text. `position()` is the byte
/// offset of the first offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Division by zero or by a divisor shape the operand does not support
/// (gross numbers divide by single-term values only).
class unsupported_division : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Grosspower left the representable integer exponent range.
class power_overflow : public std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// One term digit*(1)^power of a gross number.
struct GrossTerm {
    std::int32_t power;
    double digit;

    friend bool operator==(const GrossTerm&, const GrossTerm&) = default;
};

/// A number in the grossone positional system, kept canonical at all times:
/// powers strictly decreasing, no zero digits, zero is the empty term list.
/// Immutable value type; all operations are pure.
class GrossNumber {
public:
    /// Zero.
    GrossNumber() = default;

    /// Canonicalize an arbitrary term list: like powers merged, zero digits
    /// dropped, terms sorted by decreasing power. Throws power_overflow on
    /// out-of-range powers and std::invalid_argument on non-finite digits.
    static GrossNumber from_terms(std::vector<GrossTerm> raw);

    /// value*(1)^0, or zero. Rejects NaN/inf.
    static GrossNumber finite(double value);

    /// digit*(1)^power, or zero when digit == 0.
    static GrossNumber monomial(double digit, std::int32_t power);

    /// (1) itself.
    static GrossNumber grossone() { return monomial(1.0, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Zero or a single term with power 0.
    bool is_purely_finite() const noexcept;
    /// Leading power <= 0, i.e. no infinite part.
    bool has_no_infinite_part() const noexcept;

    /// The digit at power 0 of a purely finite value (0.0 for zero).
    /// Throws std::logic_error if any other term is present.
    double finite_value() const;

    /// Power of the highest-order term; requires a nonzero value.
    std::int32_t leading_power() const;

    const std::vector<GrossTerm>& terms() const noexcept { return terms_; }

    GrossNumber operator-() const;
    friend GrossNumber operator+(const GrossNumber& a, const GrossNumber& b);
    friend GrossNumber operator-(const GrossNumber& a, const GrossNumber& b);
    friend GrossNumber operator*(const GrossNumber& a, const GrossNumber& b);

    /// Multiply every digit by a pure-finite machine real.
    GrossNumber scaled_by(double factor) const;

    /// Divide every digit by a nonzero machine real.
    GrossNumber divided_by_finite(double divisor) const;

    /// Divide by a single-term value: powers shift, digits divide.
    /// Throws unsupported_division for zero or multi-term divisors.
    GrossNumber divided_by(const GrossNumber& divisor) const;

    /// Sign of a - b, decided by the highest power where the operands
    /// differ. Exact: no digit arithmetic is performed.
    friend std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b);
    friend bool operator==(const GrossNumber& a, const GrossNumber& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::vector<GrossTerm> terms_;
};

GrossNumber abs(const GrossNumber& x);

/// Parse the `digit@power` literal grammar:
///   number ::= '0' | term ('+' term)*
///   term   ::= digit '@' power
/// with digit a decimal float (sign and exponent allowed) and power a signed
/// decimal integer. Terms with an explicit zero digit are rejected.
GrossNumber parse_gross(std::string_view text);

/// Canonical literal: decreasing powers, signs folded into digits, '+'
/// separators, shortest round-tripping digit spelling. parse_gross is the
/// exact inverse.
std::string to_literal(const GrossNumber& x);

/// Human-readable rendering using the (1) glyph, e.g. "1.5(1)^2 - 3".
std::string pretty(const GrossNumber& x);

/// Shortest round-tripping decimal spelling of a double.
std::string format_double(double value);

}  // namespace grosslip
