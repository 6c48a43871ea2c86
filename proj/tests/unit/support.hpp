#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "biharm/characteristic.hpp"
#include "biharm/cx.hpp"

namespace testing {

using biharm::Cx;

inline bool near(Cx a, Cx b, double rel, double abs_floor = 0.0) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= std::max(rel * scale, abs_floor);
}

inline Cx unit_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Cx z{u(rng), u(rng)};
        if (std::abs(z) < 1.0) {
            return z;
        }
    }
}

inline std::vector<Cx> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::vector<Cx> v(n);
    for (auto& z : v) {
        z = unit_disk(rng);
    }
    return v;
}

// Random spectral parameters with |k0^2 + m0^2| >= 0.1.
inline biharm::SpectralParams random_params(std::mt19937_64& rng, std::size_t n, biharm::Mode mode, int branch) {
    biharm::SpectralParams p;
    p.n = n;
    p.mode = mode;
    p.branch = branch;
    do {
        p.k = random_vec(rng, n);
        p.m = random_vec(rng, n);
    } while (std::abs(p.k[0] * p.k[0] + p.m[0] * p.m[0]) < 0.1);
    if (mode == biharm::Mode::Biharmonic) {
        p.free_g.assign(n, Cx{0.0, 0.0});
        for (std::size_t s = biharm::constrained_count(n, mode); s < n; ++s) {
            p.free_g[s] = unit_disk(rng);
        }
    }
    return p;
}

} // namespace testing
