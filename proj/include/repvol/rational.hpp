#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every constructor reduces to canonical form: the denominator is
 * positive and coprime to the numerator, and zero is stored as 0/1.
 * Equality is therefore a plain comparison of the two parts.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace repvol {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d);
    Rational(std::int64_t n, std::int64_t d) : Rational(Integer(n), Integer(d)) {}

    // Accepts "p", "-p", "p/q" with q != 0. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    int sign() const noexcept { return num_.sign(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Integer floor() const;
    Integer ceil() const;

    double to_double() const;
    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    // Skips reduction; caller guarantees canonical form.
    struct Canonical {};
    Rational(Integer n, Integer d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace repvol
