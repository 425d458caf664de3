// The numeric contract the solver is generic over. Two realizations:
// machine doubles (the ordinary field) and GrossNumber (exact grossone
// arithmetic). The solver compiles against scalar_traits only.

#pragma once

#include <cmath>
#include <compare>
#include <concepts>
#include <stdexcept>

#include "grosslip/grossone.hpp"

namespace grosslip {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }

    /// Injection from machine reals; NaN/inf are rejected at the boundary
    /// so they can never corrupt downstream min/argmin logic.
    static double inject(double value) {
        if (!std::isfinite(value))
            throw std::invalid_argument("cannot inject non-finite value into scalar");
        return value;
    }

    static double add(double a, double b) { return a + b; }
    static double sub(double a, double b) { return a - b; }
    static double neg(double a) { return -a; }
    static double mul(double a, double b) { return a * b; }
    static double mul_finite(double a, double factor) { return a * factor; }
    static double div_finite(double a, double divisor) { return a / divisor; }

    static double div(double a, double b) {
        if (b == 0.0) throw unsupported_division("division by zero");
        return a / b;
    }

    // Numeric order; NaN is excluded by the injection contract, and +-0
    // compare equal (std::strong_order would not do that).
    static std::strong_ordering compare(double a, double b) {
        if (a < b) return std::strong_ordering::less;
        if (a > b) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    static double finite_value(double a) { return a; }
    static GrossNumber to_gross(double a) { return GrossNumber::finite(a); }
};

template <>
struct scalar_traits<GrossNumber> {
    static GrossNumber zero() { return {}; }
    static GrossNumber one() { return GrossNumber::finite(1.0); }
    static GrossNumber inject(double value) { return GrossNumber::finite(value); }

    static GrossNumber add(const GrossNumber& a, const GrossNumber& b) { return a + b; }
    static GrossNumber sub(const GrossNumber& a, const GrossNumber& b) { return a - b; }
    static GrossNumber neg(const GrossNumber& a) { return -a; }
    static GrossNumber mul(const GrossNumber& a, const GrossNumber& b) { return a * b; }
    static GrossNumber mul_finite(const GrossNumber& a, double factor) {
        return a.scaled_by(factor);
    }
    static GrossNumber div_finite(const GrossNumber& a, double divisor) {
        return a.divided_by_finite(divisor);
    }
    static GrossNumber div(const GrossNumber& a, const GrossNumber& b) {
        return a.divided_by(b);
    }
    static std::strong_ordering compare(const GrossNumber& a, const GrossNumber& b) {
        return a <=> b;
    }
    static double finite_value(const GrossNumber& a) { return a.finite_value(); }
    static GrossNumber to_gross(const GrossNumber& a) { return a; }
};

template <class S>
concept ScalarLike = requires(const S& a, const S& b, double d) {
    { scalar_traits<S>::zero() } -> std::same_as<S>;
    { scalar_traits<S>::one() } -> std::same_as<S>;
    { scalar_traits<S>::inject(d) } -> std::same_as<S>;
    { scalar_traits<S>::add(a, b) } -> std::same_as<S>;
    { scalar_traits<S>::sub(a, b) } -> std::same_as<S>;
    { scalar_traits<S>::neg(a) } -> std::same_as<S>;
    { scalar_traits<S>::mul(a, b) } -> std::same_as<S>;
    { scalar_traits<S>::mul_finite(a, d) } -> std::same_as<S>;
    { scalar_traits<S>::div_finite(a, d) } -> std::same_as<S>;
    { scalar_traits<S>::div(a, b) } -> std::same_as<S>;
    { scalar_traits<S>::compare(a, b) } -> std::same_as<std::strong_ordering>;
    { scalar_traits<S>::finite_value(a) } -> std::same_as<double>;
    { scalar_traits<S>::to_gross(a) } -> std::same_as<GrossNumber>;
};

template <ScalarLike S>
bool scalar_less(const S& a, const S& b) {
    return scalar_traits<S>::compare(a, b) == std::strong_ordering::less;
}

template <ScalarLike S>
bool scalar_positive(const S& a) {
    return scalar_traits<S>::compare(a, scalar_traits<S>::zero()) ==
           std::strong_ordering::greater;
}

template <ScalarLike S>
S scalar_abs(const S& a) {
    return scalar_less(a, scalar_traits<S>::zero()) ? scalar_traits<S>::neg(a) : a;
}

template <ScalarLike S>
S scalar_max(const S& a, const S& b) {
    return scalar_less(a, b) ? b : a;
}

}  // namespace grosslip
