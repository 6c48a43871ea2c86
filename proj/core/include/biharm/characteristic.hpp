#pragma once

// Basis triples e1, e2, e3 in E^n_rho satisfying (e1^2 + e2^2 + e3^2)^2 = 0.
//
// e1 and e2 are free (coefficients k_r, m_r); the coefficients g_r of e3 are
// solved for. Writing W = e1^2 + e2^2 + e3^2, the characteristic equation in
// E^n_rho is W*W = 0 truncated at rho^n.
//
// Harmonic mode enforces W = 0 itself (every component of a monogenic function
// is then harmonic). Biharmonic mode enforces only W_s = 0 for s < ceil(n/2),
// which is exactly what W*W = 0 requires once W_0 = 0; the remaining g_s are
// free and default to zero.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biharm/cx.hpp"
#include "biharm/jets.hpp"

namespace biharm {

enum class Mode { Harmonic, Biharmonic };

std::string to_string(Mode mode);

struct SpectralParams {
    std::size_t n = 1;
    std::vector<Cx> k;
    std::vector<Cx> m;
    int branch = +1;
    Mode mode = Mode::Biharmonic;
    // Values for the unconstrained indices s >= ceil(n/2) in Biharmonic mode.
    // Empty means all zero; otherwise length n with zeros at constrained indices.
    std::vector<Cx> free_g;

    // Throws ValidationError on length mismatches, bad branch, non-finite data,
    // or an isotropic base direction (k_0^2 + m_0^2 = 0).
    void validate() const;

    friend bool operator==(const SpectralParams&, const SpectralParams&) = default;
};

// Number of g indices fixed by the equations for a given mode.
std::size_t constrained_count(std::size_t n, Mode mode);

struct BasisTriple {
    Jet e1;
    Jet e2;
    Jet e3;
    // g indices [0, constrained) are determined by the characteristic equation.
    std::size_t constrained = 0;

    std::size_t n() const noexcept { return e1.order(); }
    std::span<const Cx> k() const noexcept { return e1.coeffs(); }
    std::span<const Cx> m() const noexcept { return e2.coeffs(); }
    std::span<const Cx> g() const noexcept { return e3.coeffs(); }

    // max |k_r|, |m_r|, |g_r|
    double input_scale() const;
};

// Equal-length k, m, g; `constrained` is taken on trust (0 for hand-built triples).
BasisTriple make_triple(std::vector<Cx> k, std::vector<Cx> m, std::vector<Cx> g, std::size_t constrained = 0);

// W_r = sum_{i+j=r} (k_i k_j + m_i m_j + g_i g_j), r < n.
std::vector<Cx> w_coefficients(std::span<const Cx> k, std::span<const Cx> m, std::span<const Cx> g);

// Coefficients of a sequence's square written out with the even/odd split:
//   r even: a_{r/2}^2 + 2 (a_0 a_r + ... + a_{r/2-1} a_{r/2+1})
//   r odd:  2 (a_0 a_r + ... + a_{(r-1)/2} a_{(r+1)/2})
std::vector<Cx> square_coefficients(std::span<const Cx> a);

// rho-coefficients of (e1^2 + e2^2 + e3^2)^2, computed as the Cauchy square of W.
std::vector<Cx> char_residual(const BasisTriple& t);

// Same quantity through the expanded system G + H + M + 2P + 2R + 2S, where
// B, C, D are the squares of e1, e2, e3, G = B^2, H = C^2, M = D^2,
// P = B*C, R = B*D, S = C*D.
std::vector<Cx> char_residual_expanded(const BasisTriple& t);

// Every entry of char_residual within 1e-10 * input_scale^4.
inline constexpr double kResidualTol = 1e-10;
bool residual_passes(const BasisTriple& t);

// The two residual routes agree to 1e-12 relative (scale n^2 * input_scale^4).
inline constexpr double kRouteAgreementTol = 1e-12;
double residual_route_gap(const BasisTriple& t);
bool residual_routes_agree(const BasisTriple& t);

BasisTriple solve_g(const SpectralParams& p);

// Diagnostic: closed-form expressions for g_1 and g_2 set side by side with
// the first-principles solve. Never used as ground truth.
struct ClosedFormReport {
    Cx g0{};
    Cx g1_closed{};
    Cx g2_closed{};
    Cx g1_solved{};
    Cx g2_solved{};
    bool g2_solved_constrained = false; // false if g_2 is a free index in this mode
    bool g1_agrees = false;
    bool g2_agrees = false;
    Cx w1_closed{};                 // W_1 of the closed-form triple
    bool w1_closed_zero = false;
    BasisTriple closed_triple;      // g = (g0, g1_closed, g2_closed, solved g_3...)
    BasisTriple solved_triple;
    std::vector<Cx> residual_closed;
    std::vector<Cx> residual_solved;
};

// Requires n >= 3.
ClosedFormReport closed_form_check(const SpectralParams& p);

} // namespace biharm
