#pragma once

// Resolvent coefficients: (t - zeta)^{-1} = sum_k A_k rho^k, with
//   A_0 = 1/(t - xi_0),   A_s = (xi_s A_0 + xi_{s-1} A_1 + ... + xi_1 A_{s-1}) / (t - xi_0).
// Each A_k is a polynomial in xi_1..xi_k attached to powers of 1/(t - xi_0),
// so the contour integral of F(t) A_k around xi_0 is a residue.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biharm/cx.hpp"
#include "biharm/holo.hpp"
#include "biharm/rational.hpp"

namespace biharm {

// Product xi_1^{a_1} xi_2^{a_2} ... (no xi_0 factor).
class XiMonomial {
public:
    XiMonomial() = default;
    // exponents[r-1] is the power of xi_r.
    explicit XiMonomial(std::vector<unsigned> exponents);

    static XiMonomial from_factors(std::initializer_list<std::pair<unsigned, unsigned>> index_power);

    unsigned exponent(unsigned index) const noexcept;
    unsigned max_index() const noexcept { return static_cast<unsigned>(exps_.size()); }
    unsigned degree() const noexcept;
    unsigned weight() const noexcept;
    bool is_one() const noexcept { return exps_.empty(); }

    XiMonomial times(unsigned index) const;
    Cx evaluate(std::span<const Cx> xi) const;

    friend bool operator==(const XiMonomial&, const XiMonomial&) = default;
    // Canonical (printing) order: higher powers of xi_1 first, then of xi_2, ...
    friend std::strong_ordering operator<=>(const XiMonomial& a, const XiMonomial& b);

private:
    std::vector<unsigned> exps_; // trailing zeros trimmed
};

using XiPolynomial = std::map<XiMonomial, std::int64_t>;

// A_k = sum_j terms[j](xi) * (t - xi_0)^{-j},  1 <= j <= k+1.
struct PoleExpansion {
    std::size_t k = 0;
    std::map<unsigned, XiPolynomial> terms;

    friend bool operator==(const PoleExpansion&, const PoleExpansion&) = default;
};

// Largest supported resolvent index.
inline constexpr std::size_t kMaxResolventIndex = 24;

// ValidationError above kMaxResolventIndex; OverflowError never expected below it.
PoleExpansion resolvent_coeffs(std::size_t k);

// Residue of F(t) A_k at t = xi_0:  sum_j terms[j](xi) F^{(j-1)}(xi_0) / (j-1)!.
// xi holds [xi_0, ..., xi_k] (extra entries ignored).
Cx residue_eval(const PoleExpansion& pe, const HolomorphicFn& f, std::span<const Cx> xi);

// U_k = sum_d terms[d](xi) F^{(d)}(xi_0) with exact rational coefficients.
struct UFormula {
    std::size_t k = 0;
    std::map<unsigned, std::map<XiMonomial, Rational>> terms;

    friend bool operator==(const UFormula&, const UFormula&) = default;
};

UFormula u_formula(std::size_t k);

// Deterministic rendering: ascending derivative order, canonical monomial order.
// Each derivative group is written as (1/L)(integer combination) with L the
// common denominator.
std::string to_text(const UFormula& u);
std::string to_latex(const UFormula& u);

} // namespace biharm
