#pragma once

#include <array>
#include <map>

#include "biharm/cx.hpp"

namespace biharm {

using Exponent3 = std::array<unsigned, 3>;

// Sparse polynomial in x, y, z with complex coefficients.
// Exact zeros are dropped after every operation; nothing else is pruned, since
// a coefficient that is tiny relative to the others can grow back under
// differentiation. Tolerances belong to the caller.
class TriPoly {
public:
    TriPoly() = default;
    TriPoly(Cx constant); // NOLINT(google-explicit-constructor): ring embedding

    static TriPoly monomial(Cx coeff, unsigned a, unsigned b, unsigned c);
    // cx x + cy y + cz z
    static TriPoly linear(Cx cx, Cx cy, Cx cz);

    const std::map<Exponent3, Cx>& terms() const noexcept { return terms_; }
    Cx coeff(unsigned a, unsigned b, unsigned c) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    double max_abs_coeff() const noexcept;
    unsigned degree() const noexcept;

    Cx evaluate(double x, double y, double z) const;

    // d^times / d(axis)^times, axis 0 = x, 1 = y, 2 = z.
    TriPoly derivative(int axis, unsigned times = 1) const;

    friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, Cx s);
    friend TriPoly operator*(Cx s, const TriPoly& a) { return a * s; }

    friend bool operator==(const TriPoly&, const TriPoly&) = default;

private:
    void normalize();

    std::map<Exponent3, Cx> terms_;
};

} // namespace biharm
