#include <catch_amalgamated.hpp>

#include "biharm/characteristic.hpp"
#include "biharm/errors.hpp"
#include "biharm/jets.hpp"
#include "support.hpp"

using namespace biharm;
using testing::near;

namespace {

const Cx I{0.0, 1.0};

SpectralParams params(std::vector<Cx> k, std::vector<Cx> m, Mode mode, int branch = 1, std::vector<Cx> free_g = {}) {
    SpectralParams p;
    p.n = k.size();
    p.k = std::move(k);
    p.m = std::move(m);
    p.mode = mode;
    p.branch = branch;
    p.free_g = std::move(free_g);
    return p;
}

} // namespace

TEST_CASE("W sequence small cases", "[characteristic]") {
    const std::vector<Cx> k1{1.0, 0.0}, k2{1.0, 1.0}, m{0.0, 0.0}, g{I, 0.0};
    const auto w = w_coefficients(k1, m, g);
    CHECK(w[0] == Cx{0.0, 0.0});
    CHECK(w[1] == Cx{0.0, 0.0});
    const auto w2 = w_coefficients(k2, m, g);
    CHECK(w2[0] == Cx{0.0, 0.0});
    CHECK(w2[1] == Cx{2.0, 0.0});
}

TEST_CASE("W sequence equals the sum of jet squares", "[characteristic]") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 9;
        const auto k = testing::random_vec(rng, n), m = testing::random_vec(rng, n), g = testing::random_vec(rng, n);
        const auto w = w_coefficients(k, m, g);
        const Jet oracle = pow(Jet(k), 2) + pow(Jet(m), 2) + pow(Jet(g), 2);
        for (std::size_t r = 0; r < n; ++r) {
            CHECK(near(w[r], oracle[r], 1e-14));
        }
        const auto sq = square_coefficients(k);
        const Jet ksq = pow(Jet(k), 2);
        for (std::size_t r = 0; r < n; ++r) {
            CHECK(near(sq[r], ksq[r], 1e-14));
        }
    }
}

TEST_CASE("char_residual on unsolved and solved triples", "[characteristic]") {
    const BasisTriple raw = make_triple({1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0});
    const auto r = char_residual(raw);
    CHECK(r[0] == Cx{1.0, 0.0});
    CHECK(r[1] == Cx{0.0, 0.0});
    CHECK_FALSE(residual_passes(raw));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 9;
        const Mode mode = t % 2 ? Mode::Harmonic : Mode::Biharmonic;
        const auto p = testing::random_params(rng, n, mode, t % 4 < 2 ? 1 : -1);
        const BasisTriple b = solve_g(p);
        CHECK(b.constrained == constrained_count(n, mode));
        CHECK(residual_passes(b));
        CHECK(residual_routes_agree(b));
        if (mode == Mode::Harmonic) {
            CHECK(max_abs(w_coefficients(b.k(), b.m(), b.g())) <= 1e-12);
        }
    }
}

TEST_CASE("expanded residual route equals the W convolution route", "[characteristic]") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 9;
        const BasisTriple b =
            make_triple(testing::random_vec(rng, n), testing::random_vec(rng, n), testing::random_vec(rng, n));
        CHECK(residual_routes_agree(b));
    }
}

TEST_CASE("perturbing g_1 leaves (2 g_0)^2 at rho^2", "[characteristic]") {
    std::mt19937_64 rng(4);
    const auto p = testing::random_params(rng, 4, Mode::Biharmonic, 1);
    BasisTriple b = solve_g(p);
    std::vector<Cx> g(b.g().begin(), b.g().end());
    g[1] += 1.0;
    const BasisTriple broken = make_triple(p.k, p.m, g);
    const auto r = char_residual(broken);
    const Cx expect = (2.0 * g[0]) * (2.0 * g[0]);
    CHECK(near(r[2], expect, 1e-12));
    CHECK_FALSE(residual_passes(broken));
}

TEST_CASE("solve_g worked examples", "[characteristic]") {
    const BasisTriple b1 = solve_g(params({1.0}, {0.0}, Mode::Biharmonic));
    CHECK(b1.g()[0] == I);
    CHECK(solve_g(params({1.0}, {0.0}, Mode::Biharmonic, -1)).g()[0] == -I);

    const BasisTriple b2 = solve_g(params({1.0, 0.0}, {0.0, 1.0}, Mode::Harmonic));
    CHECK(b2.g()[0] == I);
    CHECK(b2.g()[1] == Cx{0.0, 0.0});

    const BasisTriple b4 =
        solve_g(params({1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, Mode::Biharmonic, 1, {0.0, 0.0, 1.0, 1.0}));
    CHECK(b4.constrained == 2);
    CHECK(b4.g()[0] == I);
    CHECK(b4.g()[1] == Cx{0.0, 0.0});
    CHECK(b4.g()[2] == Cx{1.0, 0.0});
    CHECK(b4.g()[3] == Cx{1.0, 0.0});
    const auto w = w_coefficients(b4.k(), b4.m(), b4.g());
    CHECK(near(w[2], 2.0 * I, 1e-15));
    CHECK(max_abs(char_residual(b4)) == 0.0);
}

TEST_CASE("constrained count", "[characteristic]") {
    CHECK(constrained_count(4, Mode::Biharmonic) == 2);
    CHECK(constrained_count(5, Mode::Biharmonic) == 3);
    CHECK(constrained_count(1, Mode::Biharmonic) == 1);
    CHECK(constrained_count(7, Mode::Harmonic) == 7);
}

TEST_CASE("parameter validation", "[characteristic]") {
    CHECK_THROWS_WITH(solve_g(params({1.0}, {I}, Mode::Biharmonic)),
                      Catch::Matchers::ContainsSubstring("isotropic base direction"));
    CHECK_THROWS_AS(solve_g(params({1.0, 0.0}, {0.0}, Mode::Biharmonic)), ValidationError);
    CHECK_THROWS_AS(solve_g(params({1.0}, {0.0}, Mode::Biharmonic, 2)), ValidationError);
    CHECK_THROWS_AS(solve_g(params({}, {}, Mode::Biharmonic)), ValidationError);
    // free_g may not override a constrained index.
    CHECK_THROWS_AS(solve_g(params({1.0, 0.0}, {0.0, 0.0}, Mode::Biharmonic, 1, {1.0, 0.0})), ValidationError);
    CHECK_THROWS_AS(solve_g(params({1.0, 0.0}, {0.0, 0.0}, Mode::Biharmonic, 1, {0.0})), ValidationError);
}

TEST_CASE("closed-form report", "[characteristic]") {
    const std::vector<Cx> z3(3, Cx{0.0, 0.0});
    const ClosedFormReport a = closed_form_check(params({1.0, 1.0, 0.0}, z3, Mode::Harmonic));
    CHECK(near(a.g1_closed, 0.5 * I, 1e-15));
    CHECK(near(a.g1_solved, I, 1e-15));
    CHECK_FALSE(a.g1_agrees);
    CHECK(near(a.w1_closed, 1.0, 1e-15));
    CHECK_FALSE(a.w1_closed_zero);
    CHECK(a.residual_closed.size() == 3);
    CHECK(a.residual_solved.size() == 3);
    CHECK(max_abs(a.residual_solved) == 0.0);

    const ClosedFormReport b = closed_form_check(params({1.0, 0.0, 0.0}, z3, Mode::Harmonic));
    CHECK(b.g1_closed == Cx{0.0, 0.0});
    CHECK(b.g1_solved == Cx{0.0, 0.0});
    CHECK(b.g1_agrees);
    CHECK_THROWS_AS(closed_form_check(params({1.0, 1.0}, {0.0, 0.0}, Mode::Harmonic)), ValidationError);
}
