#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace biharm {

// Wide enough for 24! and the products of formula coefficients up to the
// resolvent index cap.
__extension__ typedef __int128 WideInt;

std::string to_string(WideInt v);
WideInt checked_add(WideInt a, WideInt b);
WideInt checked_mul(WideInt a, WideInt b);
WideInt gcd(WideInt a, WideInt b);

// Reduced fraction with a positive denominator. Arithmetic throws OverflowError
// rather than wrapping.
class Rational {
public:
    Rational() = default;
    Rational(WideInt num, WideInt den = 1); // NOLINT(google-explicit-constructor)

    WideInt num() const noexcept { return num_; }
    WideInt den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    double to_double() const noexcept;
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    WideInt num_ = 0;
    WideInt den_ = 1;
};

WideInt factorial(unsigned n);
WideInt lcm(WideInt a, WideInt b);

} // namespace biharm
