#include "biharm/holo.hpp"

#include <cmath>
#include <sstream>

#include "biharm/errors.hpp"

namespace biharm {

namespace {

// i (i-1) ... (i-j+1)
double falling_factorial(std::size_t i, std::size_t j) {
    double r = 1.0;
    for (std::size_t q = 0; q < j; ++q) {
        r *= static_cast<double>(i - q);
    }
    return r;
}

std::string format_cx(Cx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

Cx polynomial_derivative(std::span<const Cx> c, Cx z0, std::size_t j) {
    if (j >= c.size()) {
        return {0.0, 0.0};
    }
    Cx acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > j;) {
        acc = acc * z0 + c[i] * falling_factorial(i, j);
    }
    return acc;
}

Cx series_derivative(const fn::PowerSeries& s, Cx z0, std::size_t j) {
    const auto& a = s.coefficients;
    if (j >= a.size()) {
        return {0.0, 0.0};
    }
    const Cx w = z0 - s.center;
    if (w == Cx{0.0, 0.0}) {
        return a[j] * falling_factorial(j, j);
    }
    Cx sum{0.0, 0.0};
    Cx wpow{1.0, 0.0};
    bool pending = false; // last nonzero term was not yet negligible
    for (std::size_t i = j; i < a.size(); ++i) {
        if (i - j == kSeriesTermCap) {
            if (pending) {
                throw ConvergenceError("power series derivative " + std::to_string(j) + " at " + format_cx(z0) +
                                       " did not converge within " + std::to_string(kSeriesTermCap) + " terms");
            }
            break;
        }
        if (a[i] != Cx{0.0, 0.0}) {
            const Cx term = a[i] * falling_factorial(i, j) * wpow;
            sum += term;
            if (std::abs(term) < kSeriesRelTol * std::abs(sum)) {
                pending = false;
                break;
            }
            pending = true;
        }
        wpow *= w;
    }
    return sum;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

bool DomainCheck::contains(Cx z) const noexcept {
    if (!is_finite(z)) {
        return false;
    }
    if (kind == Kind::Entire) {
        return true;
    }
    return std::abs(z - center) < radius;
}

std::string DomainCheck::describe() const {
    if (kind == Kind::Entire) {
        return "entire";
    }
    std::ostringstream os;
    os.precision(17);
    os << "disk |t - (" << format_cx(center) << ")| < " << radius;
    return os.str();
}

HolomorphicFn HolomorphicFn::polynomial(std::vector<Cx> coefficients) {
    if (coefficients.empty()) {
        throw ValidationError("polynomial needs at least one coefficient");
    }
    require_finite(coefficients, "polynomial coefficient");
    while (coefficients.size() > 1 && coefficients.back() == Cx{0.0, 0.0}) {
        coefficients.pop_back();
    }
    return HolomorphicFn(fn::Polynomial{std::move(coefficients)});
}

HolomorphicFn HolomorphicFn::exp(Cx scale) {
    return HolomorphicFn(fn::Exp{require_finite(scale, "exp scale")});
}

HolomorphicFn HolomorphicFn::sin(Cx scale) {
    return HolomorphicFn(fn::Sin{require_finite(scale, "sin scale")});
}

HolomorphicFn HolomorphicFn::cos(Cx scale) {
    return HolomorphicFn(fn::Cos{require_finite(scale, "cos scale")});
}

HolomorphicFn HolomorphicFn::power_series(Cx center, std::vector<Cx> coefficients, double radius) {
    require_finite(center, "power series center");
    if (coefficients.empty()) {
        throw ValidationError("power series needs at least one coefficient");
    }
    require_finite(coefficients, "power series coefficient");
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw ValidationError("power series radius must be a positive finite number");
    }
    return HolomorphicFn(fn::PowerSeries{center, std::move(coefficients), radius});
}

std::string HolomorphicFn::kind_name() const {
    return std::visit(overloaded{
                          [](const fn::Polynomial&) { return std::string("polynomial"); },
                          [](const fn::Exp&) { return std::string("exp"); },
                          [](const fn::Sin&) { return std::string("sin"); },
                          [](const fn::Cos&) { return std::string("cos"); },
                          [](const fn::PowerSeries&) { return std::string("power_series"); },
                      },
                      kind_);
}

DomainCheck HolomorphicFn::domain() const {
    if (const auto* s = std::get_if<fn::PowerSeries>(&kind_)) {
        return DomainCheck{DomainCheck::Kind::Disk, s->center, s->radius};
    }
    return DomainCheck{};
}

std::span<const Cx> HolomorphicFn::polynomial_coefficients() const {
    if (const auto* p = std::get_if<fn::Polynomial>(&kind_)) {
        return p->coefficients;
    }
    throw UnsupportedError("function of kind '" + kind_name() + "' is not a polynomial");
}

bool in_domain(const HolomorphicFn& f, Cx z0) noexcept {
    return f.domain().contains(z0);
}

std::vector<Cx> derivatives(const HolomorphicFn& f, Cx z0, std::size_t count) {
    if (!in_domain(f, z0)) {
        throw DomainError("point " + format_cx(z0) + " is outside the domain of F (" + f.domain().describe() + ")");
    }
    std::vector<Cx> out(count);
    std::visit(overloaded{
                   [&](const fn::Polynomial& p) {
                       for (std::size_t j = 0; j < count; ++j) {
                           out[j] = polynomial_derivative(p.coefficients, z0, j);
                       }
                   },
                   [&](const fn::Exp& e) {
                       const Cx base = std::exp(e.scale * z0);
                       Cx s{1.0, 0.0};
                       for (std::size_t j = 0; j < count; ++j) {
                           out[j] = s * base;
                           s *= e.scale;
                       }
                   },
                   [&](const fn::Sin& e) {
                       const Cx sv = std::sin(e.scale * z0);
                       const Cx cv = std::cos(e.scale * z0);
                       const Cx cycle[4] = {sv, cv, -sv, -cv};
                       Cx s{1.0, 0.0};
                       for (std::size_t j = 0; j < count; ++j) {
                           out[j] = s * cycle[j % 4];
                           s *= e.scale;
                       }
                   },
                   [&](const fn::Cos& e) {
                       const Cx sv = std::sin(e.scale * z0);
                       const Cx cv = std::cos(e.scale * z0);
                       const Cx cycle[4] = {cv, -sv, -cv, sv};
                       Cx s{1.0, 0.0};
                       for (std::size_t j = 0; j < count; ++j) {
                           out[j] = s * cycle[j % 4];
                           s *= e.scale;
                       }
                   },
                   [&](const fn::PowerSeries& s) {
                       for (std::size_t j = 0; j < count; ++j) {
                           out[j] = series_derivative(s, z0, j);
                       }
                   },
               },
               f.kind());
    return out;
}

} // namespace biharm
