#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace ksq {

using Rational = boost::multiprecision::cpp_rational;

/// Numeric mode of a distribution, probability vector or LP solve.
/// Rational values are exact; Float values carry a 1e-9 working tolerance.
enum class NumericMode { Rational, Float };

/// A weight: an exact rational or a double, fixed at construction.
/// Arithmetic requires both operands to share a mode; mixing modes is a
/// programming error and throws std::logic_error.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    explicit Scalar(Rational r) : value_(std::move(r)) {}
    explicit Scalar(double d) : value_(d) {}

    static Scalar zero(NumericMode mode) {
        return mode == NumericMode::Rational ? Scalar(Rational(0)) : Scalar(0.0);
    }
    static Scalar one(NumericMode mode) {
        return mode == NumericMode::Rational ? Scalar(Rational(1)) : Scalar(1.0);
    }

    NumericMode mode() const {
        return std::holds_alternative<Rational>(value_) ? NumericMode::Rational
                                                        : NumericMode::Float;
    }
    bool is_rational() const { return std::holds_alternative<Rational>(value_); }

    const Rational& rational() const {
        if (!is_rational()) throw std::logic_error("Scalar: not in rational mode");
        return std::get<Rational>(value_);
    }
    double to_double() const {
        return is_rational() ? std::get<Rational>(value_).convert_to<double>()
                             : std::get<double>(value_);
    }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;
    bool operator<=(const Scalar& o) const { return *this < o || *this == o; }
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

    bool is_negative() const {
        return is_rational() ? std::get<Rational>(value_) < 0 : std::get<double>(value_) < 0;
    }
    /// Exact zero in rational mode; |x| <= tol in float mode.
    bool is_zero(double tol = 0.0) const {
        if (is_rational()) return std::get<Rational>(value_) == 0;
        double d = std::get<double>(value_);
        return d >= -tol && d <= tol;
    }

    Scalar abs() const { return is_negative() ? -*this : *this; }
    /// max(0, -x): the contribution of this weight to total negativity.
    Scalar negative_part() const {
        return is_negative() ? -*this : Scalar::zero(mode());
    }

    /// "p/q" in lowest terms for rationals, 10 significant digits for floats.
    std::string str() const;

private:
    std::variant<Rational, double> value_;
};

/// Sum of Scalars in a common mode. Empty ranges yield zero(mode).
template <typename It>
Scalar scalar_sum(It first, It last, NumericMode mode) {
    Scalar acc = Scalar::zero(mode);
    for (; first != last; ++first) acc += *first;
    return acc;
}

/// Parses "p/q", an integer, or a decimal literal into an exact rational.
/// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Renders a rational as "p/q" in lowest terms (q > 0), e.g. "-7/2", "0/1".
std::string rational_str(const Rational& r);

/// Formats with 10 significant digits ("%.10g").
std::string format_double(double v);

}  // namespace ksq
