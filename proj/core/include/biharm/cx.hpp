#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <string_view>

#include "biharm/errors.hpp"

namespace biharm {

using Cx = std::complex<double>;

inline constexpr Cx kI{0.0, 1.0};

inline bool is_finite(Cx z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Cx require_finite(Cx z, std::string_view what) {
    if (!is_finite(z)) {
        throw ValidationError(std::string(what) + ": non-finite complex value");
    }
    return z;
}

inline void require_finite(std::span<const Cx> zs, std::string_view what) {
    for (Cx z : zs) {
        require_finite(z, what);
    }
}

inline double max_abs(std::span<const Cx> zs) noexcept {
    double m = 0.0;
    for (Cx z : zs) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

} // namespace biharm
