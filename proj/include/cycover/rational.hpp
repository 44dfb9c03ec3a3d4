#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
// Backed by boost::multiprecision; kept in lowest terms with positive
// denominator by the backend's canonical form.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cycover {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(std::int64_t n) : value_(n) {}
    Rational(BigInt n) : value_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        // the backend requires a positive denominator
        if (den < 0)
            value_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            value_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(std::int64_t num, std::int64_t den)
        : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_integer() const { return denominator() == 1; }

    // Exact integer value; throws if the value is not integral.
    BigInt to_integer() const {
        if (!is_integer())
            throw std::domain_error("rational: " + str() + " is not an integer");
        return numerator();
    }

    std::int64_t to_int64() const {
        BigInt n = to_integer();
        if (n > std::numeric_limits<std::int64_t>::max() ||
            n < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("rational: value exceeds 64 bits");
        return static_cast<std::int64_t>(n);
    }

    Rational operator-() const { return Rational(cpp_rational(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0)
            throw std::domain_error("rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.value_ >= b.value_;
    }

    // "15/2" for non-integers, "6" for integers.
    std::string str() const {
        if (is_integer())
            return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    using cpp_rational = boost::multiprecision::cpp_rational;
    explicit Rational(cpp_rational v) : value_(std::move(v)) {}
    cpp_rational value_;
};

inline Rational rational(std::int64_t num, std::int64_t den) {
    return Rational(num, den);
}

// Accepts "6", "-14", "15/2" and decimals like "7.5".
// Decimals are parsed exactly; more than 3 fractional digits are rejected.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty())
        throw std::invalid_argument("rational: empty string");

    auto check_int = [&](std::string_view t) {
        if (t.empty())
            throw std::invalid_argument("rational: bad integer in '" + std::string(text) + "'");
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size())
            throw std::invalid_argument("rational: bad integer in '" + std::string(text) + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("rational: bad integer in '" + std::string(text) + "'");
    };

    // cpp_int's string constructor reads a leading 0 as an octal prefix
    auto to_bigint = [](std::string_view t) {
        bool neg = t[0] == '-';
        if (t[0] == '+' || t[0] == '-')
            t.remove_prefix(1);
        while (t.size() > 1 && t[0] == '0')
            t.remove_prefix(1);
        BigInt v{std::string(t)};
        return neg ? BigInt(-v) : v;
    };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        check_int(num);
        check_int(den);
        return Rational(to_bigint(num), to_bigint(den));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 3)
            throw std::invalid_argument(
                "rational: too many fractional digits in '" + std::string(text) + "'");
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-'))
            whole.remove_prefix(1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("rational: bad decimal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        check_int(digits);
        BigInt num = to_bigint(digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        if (neg) num = -num;
        return Rational(num, den);
    }
    check_int(s);
    return Rational(to_bigint(s));
}

} // namespace cycover
