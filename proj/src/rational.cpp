#include "repvol/rational.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace repvol {

namespace {

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("empty integer in rational literal");
    }
    for (char ch : digits) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("invalid character in rational literal: " +
                                        std::string(text));
        }
    }
    Integer value{std::string(digits)};
    return text.front() == '-' ? Integer(-value) : value;
}

}  // namespace

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    reduce();
}

void Rational::reduce() {
    if (den_.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer d = parse_integer(text.substr(slash + 1));
    if (d.is_zero()) {
        throw std::invalid_argument("rational literal with zero denominator");
    }
    return Rational(parse_integer(text.substr(0, slash)), std::move(d));
}

Integer Rational::floor() const {
    Integer q;
    Integer r;
    divide_qr(num_, den_, q, r);
    if (r.sign() < 0) {
        --q;
    }
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    Integer r;
    divide_qr(num_, den_, q, r);
    if (r.sign() > 0) {
        ++q;
    }
    return q;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    return Rational(-num_, den_, Canonical{});
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    // Denominators are positive, so cross-multiplication preserves order.
    Integer l = lhs.num_ * rhs.den_;
    Integer r = rhs.num_ * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace repvol
