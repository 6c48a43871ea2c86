#include "biharm/verify.hpp"

#include <cmath>

#include "biharm/errors.hpp"
#include "biharm/jets.hpp"

namespace biharm {

TriPoly symbolic_u(const SolutionSpec& spec) {
    const std::span<const Cx> coeffs = spec.f().polynomial_coefficients();
    const std::size_t k = spec.index();
    const BasisTriple& b = spec.basis();
    std::vector<TriPoly> xi;
    xi.reserve(k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
        xi.push_back(TriPoly::linear(b.k()[r], b.m()[r], b.g()[r]));
    }
    return horner(coeffs, BasicJet<TriPoly>(std::move(xi)))[k];
}

TriPoly laplacian(const TriPoly& p) {
    return p.derivative(0, 2) + p.derivative(1, 2) + p.derivative(2, 2);
}

namespace {

// Laplacian that also reports the largest coefficient among its ingredients.
TriPoly tracked_laplacian(const TriPoly& p, double& reference) {
    const TriPoly dxx = p.derivative(0, 2);
    const TriPoly dyy = p.derivative(1, 2);
    const TriPoly dzz = p.derivative(2, 2);
    reference = std::max({reference, p.max_abs_coeff(), dxx.max_abs_coeff(), dyy.max_abs_coeff(),
                          dzz.max_abs_coeff()});
    return dxx + dyy + dzz;
}

} // namespace

TriPoly biharmonic_residual_sym(const SolutionSpec& spec) {
    return laplacian(laplacian(symbolic_u(spec)));
}

TriPoly harmonic_residual_sym(const SolutionSpec& spec) {
    return laplacian(symbolic_u(spec));
}

SymbolicCheck check_biharmonic_sym(const SolutionSpec& spec) {
    double reference = 0.0;
    const TriPoly lap = tracked_laplacian(symbolic_u(spec), reference);
    TriPoly res = tracked_laplacian(lap, reference);
    const double m = res.max_abs_coeff();
    return SymbolicCheck{std::move(res), m, reference};
}

SymbolicCheck check_harmonic_sym(const SolutionSpec& spec) {
    double reference = 0.0;
    TriPoly res = tracked_laplacian(symbolic_u(spec), reference);
    reference = std::max(reference, res.max_abs_coeff());
    const double m = res.max_abs_coeff();
    return SymbolicCheck{std::move(res), m, reference};
}

void FDConfig::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw ValidationError("finite-difference step h must be positive");
    }
    if (h < min_h) {
        throw ValidationError("finite-difference step h below the cancellation guard (" + std::to_string(min_h) + ")");
    }
    if (richardson_levels < 1) {
        throw ValidationError("richardson_levels must be >= 1");
    }
}

namespace {

Cx fd_lap(const ScalarField& u, const Point3& p, double h) {
    const Cx centre = u(p);
    const Cx sum = u({p.x + h, p.y, p.z}) + u({p.x - h, p.y, p.z}) + u({p.x, p.y + h, p.z}) +
                   u({p.x, p.y - h, p.z}) + u({p.x, p.y, p.z + h}) + u({p.x, p.y, p.z - h});
    return (sum - 6.0 * centre) / (h * h);
}

// Richardson tableau over steps h / 2^j, j = 0..levels; the operator's error
// expansion is in even powers of the step.
template <class Op>
Cx extrapolate(const FDConfig& cfg, Op&& op) {
    const unsigned levels = cfg.richardson_levels;
    std::vector<std::vector<Cx>> t(levels + 1);
    double step = cfg.h;
    for (unsigned j = 0; j <= levels; ++j, step *= 0.5) {
        t[j].push_back(op(step));
        double factor = 1.0;
        for (unsigned l = 1; l <= j; ++l) {
            factor *= 4.0;
            t[j].push_back((factor * t[j][l - 1] - t[j - 1][l - 1]) / (factor - 1.0));
        }
    }
    return t[levels][levels];
}

ScalarField tracking(const ScalarField& u, double& max_abs) {
    return [&u, &max_abs](const Point3& q) {
        const Cx v = u(q);
        max_abs = std::max(max_abs, std::abs(v));
        return v;
    };
}

} // namespace

FDEstimate fd_biharmonic(const ScalarField& u, const Point3& p, const FDConfig& cfg) {
    cfg.validate();
    double max_u = 0.0;
    const ScalarField tracked = tracking(u, max_u);
    const Cx value = extrapolate(cfg, [&](double step) {
        const ScalarField inner = [&](const Point3& q) { return fd_lap(tracked, q, step); };
        return fd_lap(inner, p, step);
    });
    return FDEstimate{value, max_u / std::pow(cfg.h, 4)};
}

FDEstimate fd_laplacian(const ScalarField& u, const Point3& p, const FDConfig& cfg) {
    cfg.validate();
    double max_u = 0.0;
    const ScalarField tracked = tracking(u, max_u);
    const Cx value = extrapolate(cfg, [&](double step) { return fd_lap(tracked, p, step); });
    return FDEstimate{value, max_u / (cfg.h * cfg.h)};
}

FDEstimate fd_biharmonic(const SolutionSpec& spec, const Point3& p, const FDConfig& cfg) {
    return fd_biharmonic([&spec](const Point3& q) { return evaluate_u(spec, q); }, p, cfg);
}

FDEstimate fd_biharmonic(const Superposition& s, const Point3& p, const FDConfig& cfg) {
    return fd_biharmonic([&s](const Point3& q) { return evaluate_superposition(s, q); }, p, cfg);
}

FDEstimate fd_laplacian(const SolutionSpec& spec, const Point3& p, const FDConfig& cfg) {
    return fd_laplacian([&spec](const Point3& q) { return evaluate_u(spec, q); }, p, cfg);
}

VerificationRecord verify_spec(const SolutionSpec& spec, Mode mode, std::string id, std::span<const Point3> points,
                               const FDConfig& cfg, double fd_tolerance) {
    VerificationRecord rec;
    rec.id = std::move(id);
    rec.mode = mode;
    bool ok = true;

    if (spec.f().is_polynomial()) {
        const SymbolicCheck bih = check_biharmonic_sym(spec);
        rec.symbolic_zero = bih.is_zero();
        rec.max_coeff = bih.max_coeff;
        rec.reference_coeff = bih.reference;
        rec.harmonic_zero = check_harmonic_sym(spec).is_zero();
        ok = ok && *rec.symbolic_zero;
    }

    double worst = -1.0;
    bool harmonic_fd = true;
    for (const Point3& p : points) {
        const FDEstimate est = fd_biharmonic(spec, p, cfg);
        if (est.normalized() > worst) {
            worst = est.normalized();
            rec.fd_residual = std::abs(est.value);
            rec.fd_scale = est.scale;
        }
        if (!spec.f().is_polynomial()) {
            harmonic_fd = harmonic_fd && fd_laplacian(spec, p, cfg).normalized() <= fd_tolerance;
        }
    }
    if (!spec.f().is_polynomial()) {
        rec.harmonic_zero = harmonic_fd && !points.empty();
    }
    ok = ok && worst <= fd_tolerance;
    rec.passed = ok;
    return rec;
}

} // namespace biharm
