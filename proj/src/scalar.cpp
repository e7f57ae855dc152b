#include "ksq/scalar.hpp"

#include <cctype>
#include <cstdio>

namespace ksq {

namespace {

[[noreturn]] void mode_mismatch() {
    throw std::logic_error("Scalar: mixed rational/float arithmetic");
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (mode() != o.mode()) mode_mismatch();
    if (is_rational()) return Scalar(rational() + o.rational());
    return Scalar(to_double() + o.to_double());
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (mode() != o.mode()) mode_mismatch();
    if (is_rational()) return Scalar(rational() - o.rational());
    return Scalar(to_double() - o.to_double());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (mode() != o.mode()) mode_mismatch();
    if (is_rational()) return Scalar(rational() * o.rational());
    return Scalar(to_double() * o.to_double());
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rational(-rational()));
    return Scalar(-to_double());
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode() != o.mode()) mode_mismatch();
    if (is_rational()) return rational() == o.rational();
    return to_double() == o.to_double();
}

bool Scalar::operator<(const Scalar& o) const {
    if (mode() != o.mode()) mode_mismatch();
    if (is_rational()) return rational() < o.rational();
    return to_double() < o.to_double();
}

std::string Scalar::str() const {
    return is_rational() ? rational_str(rational()) : format_double(to_double());
}

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::optional<Rational> parse_rational(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }

    boost::multiprecision::cpp_int num = 0;
    boost::multiprecision::cpp_int den = 1;
    bool any_digit = false;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num = num * 10 + (text[i] - '0');
        any_digit = true;
        ++i;
    }
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + (text[i] - '0');
            den *= 10;
            any_digit = true;
            ++i;
        }
    } else if (i < n && text[i] == '/') {
        ++i;
        boost::multiprecision::cpp_int d = 0;
        bool den_digit = false;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            d = d * 10 + (text[i] - '0');
            den_digit = true;
            ++i;
        }
        if (!den_digit || d == 0) return std::nullopt;
        den = d;
    }
    if (!any_digit || i != n) return std::nullopt;
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace ksq
