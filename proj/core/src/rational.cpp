#include "biharm/rational.hpp"

#include <algorithm>

#include "biharm/errors.hpp"

namespace biharm {

std::string to_string(WideInt v) {
    if (v == 0) {
        return "0";
    }
    const bool neg = v < 0;
    std::string digits;
    // Work with negative values so the most negative number does not overflow.
    WideInt t = neg ? v : -v;
    while (t != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(t % 10)));
        t /= 10;
    }
    if (neg) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

WideInt checked_add(WideInt a, WideInt b) {
    WideInt r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("exact integer addition overflow");
    }
    return r;
}

WideInt checked_mul(WideInt a, WideInt b) {
    WideInt r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("exact integer multiplication overflow");
    }
    return r;
}

WideInt gcd(WideInt a, WideInt b) {
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        const WideInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

WideInt lcm(WideInt a, WideInt b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

WideInt factorial(unsigned n) {
    WideInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r = checked_mul(r, i);
    }
    return r;
}

Rational::Rational(WideInt num, WideInt den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const WideInt g = gcd(num, den);
    num_ = g > 1 ? num / g : num;
    den_ = g > 1 ? den / g : den;
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    const WideInt g = gcd(a.den_, b.den_);
    const WideInt da = a.den_ / g;
    const WideInt db = b.den_ / g;
    return Rational(checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da)), checked_mul(a.den_, db));
}

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const WideInt g1 = gcd(a.num_, b.den_);
    const WideInt g2 = gcd(b.num_, a.den_);
    const WideInt n1 = g1 > 1 ? a.num_ / g1 : a.num_;
    const WideInt d2 = g1 > 1 ? b.den_ / g1 : b.den_;
    const WideInt n2 = g2 > 1 ? b.num_ / g2 : b.num_;
    const WideInt d1 = g2 > 1 ? a.den_ / g2 : a.den_;
    return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw ValidationError("rational division by zero");
    }
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const WideInt lhs = checked_mul(a.num_, b.den_);
    const WideInt rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace biharm
