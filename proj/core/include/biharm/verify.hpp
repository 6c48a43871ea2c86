#pragma once

// Independent oracles for Delta U and Delta^2 U.
//
// Symbolic route (polynomial F): build the jet whose coefficients are the
// linear forms xi_r = k_r x + m_r y + g_r z as TriPoly values, evaluate F on it
// by Horner's rule, take the rho^k coefficient and differentiate exactly.
//
// Finite-difference route (any F): the 7-point Laplacian applied twice, with
// Richardson extrapolation over halved steps.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biharm/characteristic.hpp"
#include "biharm/solutions.hpp"
#include "biharm/tripoly.hpp"

namespace biharm {

// UnsupportedError unless spec.f() is a polynomial.
TriPoly symbolic_u(const SolutionSpec& spec);

TriPoly laplacian(const TriPoly& p);

TriPoly biharmonic_residual_sym(const SolutionSpec& spec);
TriPoly harmonic_residual_sym(const SolutionSpec& spec);

// A symbolic residual counts as zero when its largest coefficient is within
// kSymbolicRelTol of the largest coefficient seen along the way (U, its second
// partials, Delta U and the second partials of Delta U).
inline constexpr double kSymbolicRelTol = 1e-9;

struct SymbolicCheck {
    TriPoly residual;
    double max_coeff = 0.0;
    double reference = 0.0;

    bool is_zero(double rel_tol = kSymbolicRelTol) const noexcept {
        return max_coeff <= rel_tol * std::max(reference, 1e-300);
    }
};

SymbolicCheck check_biharmonic_sym(const SolutionSpec& spec);
SymbolicCheck check_harmonic_sym(const SolutionSpec& spec);

struct FDConfig {
    double h = 1e-2;
    unsigned richardson_levels = 2;
    // Base steps below this are rejected (cancellation guard).
    double min_h = 1e-4;

    void validate() const;
};

struct FDEstimate {
    Cx value{};
    // max |U| over the stencil divided by h^4 (h^2 for the Laplacian), h = base step.
    double scale = 0.0;

    double normalized() const noexcept { return scale > 0.0 ? std::abs(value) / scale : std::abs(value); }
};

using ScalarField = std::function<Cx(const Point3&)>;

// Steps h, h/2, ..., h/2^L; Richardson tableau T[j][l] = (4^l T[j][l-1] - T[j-1][l-1]) / (4^l - 1).
FDEstimate fd_biharmonic(const ScalarField& u, const Point3& p, const FDConfig& cfg = {});
FDEstimate fd_biharmonic(const SolutionSpec& spec, const Point3& p, const FDConfig& cfg = {});
FDEstimate fd_biharmonic(const Superposition& s, const Point3& p, const FDConfig& cfg = {});

FDEstimate fd_laplacian(const ScalarField& u, const Point3& p, const FDConfig& cfg = {});
FDEstimate fd_laplacian(const SolutionSpec& spec, const Point3& p, const FDConfig& cfg = {});

struct VerificationRecord {
    std::string id;
    Mode mode = Mode::Biharmonic;
    std::optional<bool> symbolic_zero; // empty unless F is a polynomial
    double max_coeff = 0.0;
    double reference_coeff = 0.0;
    double fd_residual = 0.0; // |Delta^2 U| at the worst point
    double fd_scale = 0.0;    // its normalization
    bool harmonic_zero = false;
    bool passed = false;
};

// Symbolic oracle when F is a polynomial, FD at every point. Passes when the
// symbolic residual is zero (when available) and every normalized FD residual
// is <= fd_tolerance. harmonic_zero is informational.
VerificationRecord verify_spec(const SolutionSpec& spec, Mode mode, std::string id, std::span<const Point3> points,
                               const FDConfig& cfg, double fd_tolerance);

} // namespace biharm
