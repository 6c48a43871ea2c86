#pragma once

// Holomorphic functions F : D -> C, consumed only through their derivative
// vector [F(z0), F'(z0), ...] at a point.

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "biharm/cx.hpp"

namespace biharm {

namespace fn {

// sum_d coefficients[d] t^d
struct Polynomial {
    std::vector<Cx> coefficients;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// exp(scale * t)
struct Exp {
    Cx scale{1.0, 0.0};
    friend bool operator==(const Exp&, const Exp&) = default;
};

// sin(scale * t)
struct Sin {
    Cx scale{1.0, 0.0};
    friend bool operator==(const Sin&, const Sin&) = default;
};

// cos(scale * t)
struct Cos {
    Cx scale{1.0, 0.0};
    friend bool operator==(const Cos&, const Cos&) = default;
};

// sum_i coefficients[i] (t - center)^i on the disk |t - center| < radius
struct PowerSeries {
    Cx center{0.0, 0.0};
    std::vector<Cx> coefficients;
    double radius = 1.0;
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

} // namespace fn

struct DomainCheck {
    enum class Kind { Entire, Disk };

    Kind kind = Kind::Entire;
    Cx center{0.0, 0.0};
    double radius = 0.0;

    bool contains(Cx z) const noexcept;
    std::string describe() const;
};

class HolomorphicFn {
public:
    using Kind = std::variant<fn::Polynomial, fn::Exp, fn::Sin, fn::Cos, fn::PowerSeries>;

    // Trailing zero coefficients are dropped (one coefficient is always kept).
    static HolomorphicFn polynomial(std::vector<Cx> coefficients);
    static HolomorphicFn exp(Cx scale = Cx{1.0, 0.0});
    static HolomorphicFn sin(Cx scale = Cx{1.0, 0.0});
    static HolomorphicFn cos(Cx scale = Cx{1.0, 0.0});
    static HolomorphicFn power_series(Cx center, std::vector<Cx> coefficients, double radius);

    const Kind& kind() const noexcept { return kind_; }
    std::string kind_name() const;
    DomainCheck domain() const;

    bool is_polynomial() const noexcept { return std::holds_alternative<fn::Polynomial>(kind_); }
    // Throws UnsupportedError unless is_polynomial().
    std::span<const Cx> polynomial_coefficients() const;

    friend bool operator==(const HolomorphicFn&, const HolomorphicFn&) = default;

private:
    explicit HolomorphicFn(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

// Terms below this fraction of the running sum end a power-series summation.
inline constexpr double kSeriesRelTol = 1e-17;
inline constexpr std::size_t kSeriesTermCap = 10000;

bool in_domain(const HolomorphicFn& f, Cx z0) noexcept;

// [F(z0), F'(z0), ..., F^(count-1)(z0)].
// DomainError if z0 is outside the domain; ConvergenceError if a power series
// does not settle within kSeriesTermCap terms.
std::vector<Cx> derivatives(const HolomorphicFn& f, Cx z0, std::size_t count);

} // namespace biharm
