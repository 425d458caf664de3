#include "grosslip/grossone.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace grosslip {

namespace {

void check_digit(double digit) {
    if (!std::isfinite(digit))
        throw std::invalid_argument("non-finite grossdigit");
}

std::int32_t add_powers(std::int32_t a, std::int32_t b) {
    std::int64_t sum = std::int64_t{a} + std::int64_t{b};
    if (sum < std::numeric_limits<std::int32_t>::min() ||
        sum > std::numeric_limits<std::int32_t>::max())
        throw power_overflow("grosspower out of range: " + std::to_string(sum));
    return static_cast<std::int32_t>(sum);
}

}  // namespace

GrossNumber GrossNumber::from_terms(std::vector<GrossTerm> raw) {
    for (const GrossTerm& t : raw) check_digit(t.digit);
    // Stable sort keeps the caller's order within equal powers, so the
    // merge below is deterministic.
    std::stable_sort(raw.begin(), raw.end(),
                     [](const GrossTerm& a, const GrossTerm& b) { return a.power > b.power; });
    GrossNumber out;
    out.terms_.reserve(raw.size());
    for (const GrossTerm& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().power == t.power) {
            out.terms_.back().digit += t.digit;
            check_digit(out.terms_.back().digit);
            if (out.terms_.back().digit == 0.0) out.terms_.pop_back();
        } else if (t.digit != 0.0) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

GrossNumber GrossNumber::finite(double value) {
    if (!std::isfinite(value))
        throw std::invalid_argument("cannot inject non-finite value into gross arithmetic");
    return monomial(value, 0);
}

GrossNumber GrossNumber::monomial(double digit, std::int32_t power) {
    check_digit(digit);
    GrossNumber out;
    if (digit != 0.0) out.terms_.push_back({power, digit});
    return out;
}

bool GrossNumber::is_purely_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().power == 0);
}

bool GrossNumber::has_no_infinite_part() const noexcept {
    return terms_.empty() || terms_.front().power <= 0;
}

double GrossNumber::finite_value() const {
    if (terms_.empty()) return 0.0;
    if (!is_purely_finite())
        throw std::logic_error("not a purely finite value: " + to_literal(*this));
    return terms_.front().digit;
}

std::int32_t GrossNumber::leading_power() const {
    if (terms_.empty()) throw std::logic_error("zero has no leading power");
    return terms_.front().power;
}

GrossNumber GrossNumber::operator-() const {
    GrossNumber out = *this;
    for (GrossTerm& t : out.terms_) t.digit = -t.digit;
    return out;
}

GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) {
    GrossNumber out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() ||
            (i < a.terms_.size() && a.terms_[i].power > b.terms_[j].power)) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].power > a.terms_[i].power) {
            out.terms_.push_back(b.terms_[j++]);
        } else {
            double digit = a.terms_[i].digit + b.terms_[j].digit;
            check_digit(digit);
            if (digit != 0.0) out.terms_.push_back({a.terms_[i].power, digit});
            ++i, ++j;
        }
    }
    return out;
}

GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return a + (-b); }

GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) {
    std::vector<GrossTerm> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const GrossTerm& ta : a.terms_)
        for (const GrossTerm& tb : b.terms_)
            products.push_back({add_powers(ta.power, tb.power), ta.digit * tb.digit});
    return GrossNumber::from_terms(std::move(products));
}

GrossNumber GrossNumber::scaled_by(double factor) const {
    check_digit(factor);
    GrossNumber out;
    out.terms_.reserve(terms_.size());
    for (const GrossTerm& t : terms_) {
        double digit = t.digit * factor;
        check_digit(digit);
        if (digit != 0.0) out.terms_.push_back({t.power, digit});
    }
    return out;
}

GrossNumber GrossNumber::divided_by_finite(double divisor) const {
    if (divisor == 0.0) throw unsupported_division("division by zero");
    check_digit(divisor);
    GrossNumber out;
    out.terms_.reserve(terms_.size());
    for (const GrossTerm& t : terms_) {
        double digit = t.digit / divisor;
        check_digit(digit);
        if (digit != 0.0) out.terms_.push_back({t.power, digit});
    }
    return out;
}

GrossNumber GrossNumber::divided_by(const GrossNumber& divisor) const {
    if (divisor.is_zero()) throw unsupported_division("division by zero");
    if (!divisor.is_monomial())
        throw unsupported_division("gross divisor must be a single term, got " +
                                   to_literal(divisor));
    const GrossTerm& m = divisor.terms_.front();
    GrossNumber out;
    out.terms_.reserve(terms_.size());
    for (const GrossTerm& t : terms_) {
        double digit = t.digit / m.digit;
        check_digit(digit);
        if (digit != 0.0) out.terms_.push_back({add_powers(t.power, -m.power), digit});
    }
    return out;
}

std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b) {
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        bool take_a = j == b.terms_.size() ||
                      (i < a.terms_.size() && a.terms_[i].power > b.terms_[j].power);
        bool take_b = i == a.terms_.size() ||
                      (j < b.terms_.size() && b.terms_[j].power > a.terms_[i].power);
        if (take_a) {
            // a has a term b lacks: its sign decides.
            return a.terms_[i].digit > 0.0 ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        }
        if (take_b) {
            return b.terms_[j].digit > 0.0 ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
        }
        if (a.terms_[i].digit != b.terms_[j].digit) {
            return a.terms_[i].digit > b.terms_[j].digit ? std::strong_ordering::greater
                                                         : std::strong_ordering::less;
        }
        ++i, ++j;
    }
    return std::strong_ordering::equal;
}

GrossNumber abs(const GrossNumber& x) {
    return x < GrossNumber{} ? -x : x;
}

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

namespace {

// Parses an optionally signed value with std::from_chars, which itself
// accepts '-' but not a leading '+'.
template <class T>
const char* parse_number(const char* p, const char* end, const char* begin, T& out,
                         const char* what) {
    bool negative = false;
    if (p < end && (*p == '+' || *p == '-')) {
        negative = (*p == '-');
        ++p;
    }
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || next == p)
        throw parse_error(std::string("expected ") + what,
                          static_cast<std::size_t>(p - begin));
    if (negative) out = -out;
    return next;
}

}  // namespace

GrossNumber parse_gross(std::string_view text) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (text == "0") return {};
    if (text.empty()) throw parse_error("empty gross literal", 0);

    std::vector<GrossTerm> terms;
    const char* p = begin;
    while (true) {
        double digit = 0.0;
        p = parse_number(p, end, begin, digit, "grossdigit");
        if (!std::isfinite(digit))
            throw parse_error("non-finite grossdigit", static_cast<std::size_t>(p - begin));
        if (digit == 0.0)
            throw parse_error("zero grossdigit", static_cast<std::size_t>(p - begin));
        if (p == end || *p != '@')
            throw parse_error("expected '@'", static_cast<std::size_t>(p - begin));
        ++p;
        std::int32_t power = 0;
        p = parse_number(p, end, begin, power, "grosspower");
        terms.push_back({power, digit});
        if (p == end) break;
        if (*p != '+')
            throw parse_error("expected '+' or end of literal",
                              static_cast<std::size_t>(p - begin));
        ++p;
    }
    return GrossNumber::from_terms(std::move(terms));
}

std::string to_literal(const GrossNumber& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const GrossTerm& t : x.terms()) {
        if (!first) out += '+';
        first = false;
        out += format_double(t.digit);
        out += '@';
        out += std::to_string(t.power);
    }
    return out;
}

std::string pretty(const GrossNumber& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const GrossTerm& t : x.terms()) {
        double digit = t.digit;
        if (first) {
            if (digit < 0.0) {
                out += '-';
                digit = -digit;
            }
        } else {
            out += digit < 0.0 ? " - " : " + ";
            digit = std::fabs(digit);
        }
        first = false;
        if (t.power == 0) {
            out += format_double(digit);
        } else {
            if (digit != 1.0) out += format_double(digit);
            out += "①";
            if (t.power != 1) {
                out += '^';
                out += std::to_string(t.power);
            }
        }
    }
    return out;
}

}  // namespace grosslip
