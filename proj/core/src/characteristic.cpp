#include "biharm/characteristic.hpp"

#include <algorithm>
#include <cmath>

#include "biharm/errors.hpp"

namespace biharm {

namespace {

std::vector<Cx> cauchy_product(std::span<const Cx> a, std::span<const Cx> b) {
    const std::size_t n = a.size();
    std::vector<Cx> c(n);
    for (std::size_t r = 0; r < n; ++r) {
        Cx acc{0.0, 0.0};
        for (std::size_t i = 0; i <= r; ++i) {
            acc += a[i] * b[r - i];
        }
        c[r] = acc;
    }
    return c;
}

bool close(Cx a, Cx b, double scale) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, scale, std::abs(a), std::abs(b)});
}

} // namespace

std::string to_string(Mode mode) {
    return mode == Mode::Harmonic ? "harmonic" : "biharmonic";
}

std::size_t constrained_count(std::size_t n, Mode mode) {
    return mode == Mode::Harmonic ? n : (n + 1) / 2;
}

void SpectralParams::validate() const {
    if (n == 0) {
        throw ValidationError("algebra dimension n must be >= 1");
    }
    if (k.size() != n || m.size() != n) {
        throw ValidationError("k and m must each have n = " + std::to_string(n) + " entries (got " +
                              std::to_string(k.size()) + " and " + std::to_string(m.size()) + ")");
    }
    if (branch != 1 && branch != -1) {
        throw ValidationError("branch must be +1 or -1");
    }
    require_finite(k, "k");
    require_finite(m, "m");
    if (!free_g.empty()) {
        if (free_g.size() != n) {
            throw ValidationError("free_g must be empty or have n = " + std::to_string(n) + " entries");
        }
        require_finite(free_g, "free_g");
        const std::size_t c = constrained_count(n, mode);
        for (std::size_t s = 0; s < c; ++s) {
            if (free_g[s] != Cx{0.0, 0.0}) {
                throw ValidationError("free_g[" + std::to_string(s) + "] is set, but g_" + std::to_string(s) +
                                      " is fixed by the characteristic equation in " + to_string(mode) + " mode");
            }
        }
    }
    const Cx pivot = k[0] * k[0] + m[0] * m[0];
    const double ref = std::max({std::norm(k[0]), std::norm(m[0]), 1.0});
    if (!(std::abs(pivot) > 1e-12 * ref)) {
        throw ValidationError("isotropic base direction: k_0^2 + m_0^2 = 0, so g_0 = 0 and g cannot be solved");
    }
}

double BasisTriple::input_scale() const {
    return std::max({max_abs(k()), max_abs(m()), max_abs(g())});
}

BasisTriple make_triple(std::vector<Cx> k, std::vector<Cx> m, std::vector<Cx> g, std::size_t constrained) {
    if (k.size() != m.size() || k.size() != g.size()) {
        throw ValidationError("basis triple: k, m, g must have equal length");
    }
    if (constrained > k.size()) {
        throw ValidationError("basis triple: constrained count exceeds n");
    }
    return BasisTriple{Jet(std::move(k)), Jet(std::move(m)), Jet(std::move(g)), constrained};
}

std::vector<Cx> w_coefficients(std::span<const Cx> k, std::span<const Cx> m, std::span<const Cx> g) {
    if (k.size() != m.size() || k.size() != g.size()) {
        throw ValidationError("w_coefficients: k, m, g must have equal length");
    }
    const std::size_t n = k.size();
    std::vector<Cx> w(n);
    for (std::size_t r = 0; r < n; ++r) {
        Cx acc{0.0, 0.0};
        for (std::size_t i = 0; i <= r; ++i) {
            const std::size_t j = r - i;
            acc += k[i] * k[j] + m[i] * m[j] + g[i] * g[j];
        }
        w[r] = acc;
    }
    return w;
}

std::vector<Cx> square_coefficients(std::span<const Cx> a) {
    const std::size_t n = a.size();
    std::vector<Cx> b(n);
    for (std::size_t r = 0; r < n; ++r) {
        Cx cross{0.0, 0.0};
        if (r % 2 == 0) {
            for (std::size_t i = 0; i + 1 <= r / 2; ++i) {
                cross += a[i] * a[r - i];
            }
            b[r] = a[r / 2] * a[r / 2] + 2.0 * cross;
        } else {
            for (std::size_t i = 0; i <= (r - 1) / 2; ++i) {
                cross += a[i] * a[r - i];
            }
            b[r] = 2.0 * cross;
        }
    }
    return b;
}

std::vector<Cx> char_residual(const BasisTriple& t) {
    const std::vector<Cx> w = w_coefficients(t.k(), t.m(), t.g());
    return cauchy_product(w, w);
}

std::vector<Cx> char_residual_expanded(const BasisTriple& t) {
    const std::vector<Cx> b = square_coefficients(t.k());
    const std::vector<Cx> c = square_coefficients(t.m());
    const std::vector<Cx> d = square_coefficients(t.g());
    const std::vector<Cx> gg = square_coefficients(b);
    const std::vector<Cx> hh = square_coefficients(c);
    const std::vector<Cx> mm = square_coefficients(d);
    const std::vector<Cx> pp = cauchy_product(b, c);
    const std::vector<Cx> rr = cauchy_product(b, d);
    const std::vector<Cx> ss = cauchy_product(c, d);
    std::vector<Cx> out(t.n());
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[r] = gg[r] + hh[r] + mm[r] + 2.0 * pp[r] + 2.0 * rr[r] + 2.0 * ss[r];
    }
    return out;
}

bool residual_passes(const BasisTriple& t) {
    const double scale = t.input_scale();
    const double tol = kResidualTol * scale * scale * scale * scale;
    const std::vector<Cx> res = char_residual(t);
    return max_abs(res) <= tol;
}

double residual_route_gap(const BasisTriple& t) {
    const std::vector<Cx> a = char_residual(t);
    const std::vector<Cx> b = char_residual_expanded(t);
    double gap = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        gap = std::max(gap, std::abs(a[r] - b[r]));
    }
    return gap;
}

bool residual_routes_agree(const BasisTriple& t) {
    const double n = static_cast<double>(t.n());
    const double s = t.input_scale();
    return residual_route_gap(t) <= kRouteAgreementTol * std::max(1e-300, n * n * s * s * s * s);
}

BasisTriple solve_g(const SpectralParams& p) {
    p.validate();
    const std::size_t n = p.n;
    const std::size_t c = constrained_count(n, p.mode);

    std::vector<Cx> g(n, Cx{0.0, 0.0});
    g[0] = static_cast<double>(p.branch) * kI * std::sqrt(p.k[0] * p.k[0] + p.m[0] * p.m[0]);
    const Cx pivot = 2.0 * g[0];

    // W_s is linear in g_s with coefficient 2 g_0 once g_0..g_{s-1} are known.
    for (std::size_t s = 1; s < c; ++s) {
        Cx rhs{0.0, 0.0};
        for (std::size_t i = 0; i <= s; ++i) {
            rhs += p.k[i] * p.k[s - i] + p.m[i] * p.m[s - i];
        }
        for (std::size_t i = 1; i < s; ++i) {
            rhs += g[i] * g[s - i];
        }
        g[s] = -rhs / pivot;
    }
    if (!p.free_g.empty()) {
        for (std::size_t s = c; s < n; ++s) {
            g[s] = p.free_g[s];
        }
    }
    return make_triple(p.k, p.m, std::move(g), c);
}

ClosedFormReport closed_form_check(const SpectralParams& p) {
    p.validate();
    if (p.n < 3) {
        throw ValidationError("closed-form check needs n >= 3");
    }
    const BasisTriple solved = solve_g(p);
    const auto k = p.k;
    const auto m = p.m;
    const Cx g0 = solved.g()[0];
    const Cx root = std::sqrt(k[0] * k[0] + m[0] * m[0]);
    const Cx sign = static_cast<double>(p.branch) * kI;

    const Cx g1 = sign * (k[0] * k[0] * k[0] * k[1] + m[0] * m[0] * m[0] * m[1]) / (2.0 * root * root * root);

    auto pw = [](Cx z, int e) {
        Cx r{1.0, 0.0};
        for (int i = 0; i < e; ++i) {
            r *= z;
        }
        return r;
    };
    // Transcribed term by term, including the inhomogeneous prefactor.
    const Cx bracket = 4.0 * pw(k[0], 6) * pw(k[1], 2) + 4.0 * pw(k[0], 4) * k[2] + 2.0 * pw(k[0], 2) * pw(k[1], 2) +
                       4.0 * pw(m[0], 6) * pw(m[1], 2) + 4.0 * pw(m[0], 4) * m[2] + 2.0 * pw(m[0], 2) * pw(m[1], 2) +
                       4.0 * pw(g0, 6) * pw(g1, 2) + 2.0 * pw(g0, 2) * pw(g1, 2) + 2.0 * pw(k[0], 2) * pw(m[1], 2) +
                       4.0 * pw(k[0], 2) * m[0] * m[2] + 8.0 * k[0] * k[1] * m[0] * m[1] +
                       2.0 * pw(m[0], 2) * pw(k[1], 2) + 4.0 * pw(m[0], 2) * k[0] * k[2] +
                       2.0 * pw(k[0], 2) * pw(g1, 2) + 8.0 * k[0] * k[1] * g0 * g1 + 2.0 * pw(k[1], 2) * pw(g0, 2) +
                       4.0 * k[0] * k[2] * pw(g0, 2) + 2.0 * pw(m[0], 2) * pw(g1, 2) + 8.0 * m[0] * m[1] * g0 * g1 +
                       2.0 * pw(m[1], 2) * pw(g0, 2) + 4.0 * m[0] * m[2] * pw(g0, 2);
    const Cx g2 = bracket / (4.0 * (pw(g0, 3) - pw(g0, 4)));

    std::vector<Cx> gc(solved.g().begin(), solved.g().end());
    gc[1] = g1;
    gc[2] = g2;
    BasisTriple closed = make_triple(p.k, p.m, gc, 0);

    const double scale = closed.input_scale();
    const Cx w1 = w_coefficients(closed.k(), closed.m(), closed.g())[1];
    const Cx g1s = solved.g()[1];
    const Cx g2s = solved.g()[2];

    ClosedFormReport rep{
        .g0 = g0,
        .g1_closed = g1,
        .g2_closed = g2,
        .g1_solved = g1s,
        .g2_solved = g2s,
        .g2_solved_constrained = solved.constrained > 2,
        .g1_agrees = close(g1, g1s, 0.0),
        .g2_agrees = close(g2, g2s, 0.0),
        .w1_closed = w1,
        .w1_closed_zero = std::abs(w1) <= 1e-12 * std::max(1.0, scale * scale),
        .closed_triple = closed,
        .solved_triple = solved,
        .residual_closed = char_residual(closed),
        .residual_solved = char_residual(solved),
    };
    return rep;
}

} // namespace biharm
