#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace malalgo {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction. Invariants: denominator > 0, gcd(|num|, den) = 1,
// zero is uniquely 0/1. The only numeric type appearing in equations,
// traces and answers.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT: implicit by design, coefficients are ints
    explicit Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational abs() const { return is_negative() ? -*this : *this; }

    // "p" for integers, "p/q" otherwise; the sign rides on the numerator.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Accepts "p", "-p" and "p/q" (no interior whitespace).
    static std::optional<Rational> from_string(std::string_view text);

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    struct already_reduced {};
    Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline std::optional<Rational> Rational::from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    BigInt num(std::string(text.substr(num_start, i - num_start)));
    BigInt den(1);
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        den = BigInt(std::string(text.substr(den_start, i - den_start)));
        if (den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace malalgo
