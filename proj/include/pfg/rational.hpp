#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "pfg/error.hpp"

namespace pfg {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with denominator > 0, so structural
/// equality is value equality. Arithmetic goes through 128-bit
/// intermediates; a reduced result that does not fit in 64 bits throws
/// OverflowError rather than wrapping. Membership degrees are exact
/// rationals by design: the theorems checked downstream are iff-statements
/// about exact comparisons, and floating point would manufacture spurious
/// counterexamples.
class Rational {
public:
    constexpr Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0)
            throw ValidationError("rational with zero denominator");
        assign(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    /// Parses "p/q" or "p". No decimal forms.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text, "rational"), 1);
        std::int64_t num = parse_int(text.substr(0, slash), "numerator");
        std::int64_t den = parse_int(text.substr(slash + 1), "denominator");
        if (den == 0)
            throw ValidationError("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool in_unit_interval() const { return num_ >= 0 && num_ <= den_; }

    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw ValidationError("rational division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static Rational make(__int128 num, __int128 den) {
        Rational r;
        r.assign(num, den);
        return r;
    }

    void assign(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw OverflowError("rational overflows 64-bit storage");
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static std::int64_t parse_int(std::string_view s, const char* what) {
        std::int64_t value = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || s.empty())
            throw ValidationError(std::string("cannot parse ") + what + ": '" + std::string(s) + "'");
        return value;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline const Rational& rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace pfg
