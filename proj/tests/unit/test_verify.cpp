#include <catch_amalgamated.hpp>

#include <cmath>

#include "biharm/errors.hpp"
#include "biharm/verify.hpp"
#include "support.hpp"

using namespace biharm;
using testing::near;

namespace {

const Cx I{0.0, 1.0};

BasisTriple basis_free_g1() {
    SpectralParams p;
    p.n = 2;
    p.k = {1.0, 0.0};
    p.m = {0.0, 0.0};
    p.mode = Mode::Biharmonic;
    p.free_g = {0.0, 1.0};
    return solve_g(p);
}

const auto cube = HolomorphicFn::polynomial({0.0, 0.0, 0.0, 1.0});
const auto quartic = HolomorphicFn::polynomial({0.0, 0.0, 0.0, 0.0, 1.0});

} // namespace

TEST_CASE("symbolic U", "[verify]") {
    const SolutionSpec s0(make_triple({1.0}, {0.0}, {I}, 1), HolomorphicFn::polynomial({0.0, 0.0, 1.0}), 0);
    const TriPoly u0 = symbolic_u(s0);
    CHECK(u0 == TriPoly::monomial(1.0, 2, 0, 0) + TriPoly::monomial(2.0 * I, 1, 0, 1) - TriPoly::monomial(1.0, 0, 0, 2));

    const SolutionSpec s1(basis_free_g1(), cube, 1);
    const TriPoly u1 = symbolic_u(s1);
    const TriPoly want = TriPoly::monomial(3.0, 2, 0, 1) + TriPoly::monomial(6.0 * I, 1, 0, 2) - TriPoly::monomial(3.0, 0, 0, 3);
    CHECK(u1 == want);

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
        const Point3 p{u(rng), u(rng), u(rng)};
        CHECK(near(u1.evaluate(p.x, p.y, p.z), evaluate_u(s1, p), 1e-12));
    }
    CHECK_THROWS_AS(symbolic_u(SolutionSpec(basis_free_g1(), HolomorphicFn::exp(), 1)), UnsupportedError);
}

TEST_CASE("symbolic U matches evaluate_u on random specs", "[verify]") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 8;
        const auto p = testing::random_params(rng, n, t % 2 ? Mode::Harmonic : Mode::Biharmonic, t % 4 < 2 ? 1 : -1);
        const SolutionSpec spec(solve_g(p), HolomorphicFn::polynomial(testing::random_vec(rng, 1 + t % 7)), t % n);
        const TriPoly sym = symbolic_u(spec);
        const Point3 q{u(rng), u(rng), u(rng)};
        CHECK(near(sym.evaluate(q.x, q.y, q.z), evaluate_u(spec, q), 1e-12));
    }
}

TEST_CASE("laplacian of small polynomials", "[verify]") {
    const TriPoly r2 = TriPoly::monomial(1.0, 2, 0, 0) + TriPoly::monomial(1.0, 0, 2, 0) + TriPoly::monomial(1.0, 0, 0, 2);
    CHECK(laplacian(r2) == TriPoly(6.0));
    const TriPoly h = TriPoly::monomial(1.0, 2, 0, 0) + TriPoly::monomial(2.0 * I, 1, 0, 1) - TriPoly::monomial(1.0, 0, 0, 2);
    CHECK(laplacian(h).is_zero());

    const TriPoly u1 = symbolic_u(SolutionSpec(basis_free_g1(), cube, 1));
    const TriPoly lap = laplacian(u1);
    CHECK(lap == TriPoly::linear(12.0 * I, 0.0, -12.0));
    CHECK(laplacian(lap).is_zero());

    // FD oracle on the same field.
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const ScalarField field = [&](const Point3& p) { return u1.evaluate(p.x, p.y, p.z); };
    for (int t = 0; t < 5; ++t) {
        const Point3 p{u(rng), u(rng), u(rng)};
        const FDEstimate e = fd_laplacian(field, p);
        CHECK(std::abs(e.value - lap.evaluate(p.x, p.y, p.z)) <= 1e-6);
    }
}

TEST_CASE("residual checks", "[verify]") {
    const SolutionSpec s1(basis_free_g1(), cube, 1);
    CHECK(check_biharmonic_sym(s1).is_zero());
    const SymbolicCheck h = check_harmonic_sym(s1);
    CHECK_FALSE(h.is_zero());
    CHECK(harmonic_residual_sym(s1) == TriPoly::linear(12.0 * I, 0.0, -12.0));
    CHECK(biharmonic_residual_sym(s1).is_zero());

    SpectralParams p;
    p.n = 3;
    p.k = {1.0, 0.4, Cx{0.2, 0.1}};
    p.m = {0.3, Cx{0.0, 0.5}, 0.1};
    p.mode = Mode::Harmonic;
    const BasisTriple hb = solve_g(p);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(check_harmonic_sym(SolutionSpec(hb, quartic, k)).is_zero());
    }

    // U_0 is harmonic on any basis.
    std::mt19937_64 rng(3);
    const auto bp = testing::random_params(rng, 4, Mode::Biharmonic, -1);
    CHECK(check_harmonic_sym(SolutionSpec(solve_g(bp), quartic, 0)).is_zero());

    // Perturbed g_1 on an n = 3 Biharmonic basis breaks U_2.
    p.mode = Mode::Biharmonic;
    const BasisTriple good = solve_g(p);
    std::vector<Cx> g(good.g().begin(), good.g().end());
    g[1] += 1.0;
    const SolutionSpec broken(make_triple(p.k, p.m, g), quartic, 2, true);
    CHECK(check_biharmonic_sym(SolutionSpec(good, quartic, 2)).is_zero());
    CHECK_FALSE(check_biharmonic_sym(broken).is_zero());
}

TEST_CASE("FD biharmonic on a known non-solution", "[verify]") {
    const ScalarField x4 = [](const Point3& p) { return Cx{std::pow(p.x, 4), 0.0}; };
    const FDEstimate e = fd_biharmonic(x4, {0.3, -0.2, 0.5});
    CHECK(std::abs(e.value - 24.0) <= 1e-3);
}

TEST_CASE("FD biharmonic on exact solutions", "[verify]") {
    std::mt19937_64 rng(40);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 8; ++t) {
        const auto p = testing::random_params(rng, 5, Mode::Biharmonic, t % 2 ? 1 : -1);
        const BasisTriple b = solve_g(p);
        const Point3 q{u(rng), u(rng), u(rng)};
        const SolutionSpec se(b, HolomorphicFn::exp(testing::unit_disk(rng)), 4);
        CHECK(fd_biharmonic(se, q).normalized() <= 1e-4);
        const SolutionSpec sp(b, quartic, 3);
        const FDEstimate ep = fd_biharmonic(sp, q);
        CHECK(std::abs(ep.value) <= 1e-5 * ep.scale);
    }
}

TEST_CASE("FD Exp route agrees with a truncated Taylor polynomial", "[verify]") {
    // The degree-12 Taylor polynomial of exp(s t) about 0 is exactly biharmonic
    // through the symbolic route; on |xi_0| < 1 its tail is below 1e-9.
    std::mt19937_64 rng(41);
    const auto p = testing::random_params(rng, 4, Mode::Biharmonic, 1);
    const BasisTriple b = solve_g(p);
    const Cx s{0.5, 0.2};
    std::vector<Cx> taylor(13);
    Cx term{1.0, 0.0};
    for (std::size_t j = 0; j < taylor.size(); ++j) {
        taylor[j] = term;
        term *= s / static_cast<double>(j + 1);
    }
    const SolutionSpec se(b, HolomorphicFn::exp(s), 3);
    const SolutionSpec st(b, HolomorphicFn::polynomial(taylor), 3);
    CHECK(check_biharmonic_sym(st).is_zero());
    const Point3 q{0.2, 0.1, -0.15};
    CHECK(near(evaluate_u(se, q), evaluate_u(st, q), 1e-8));
    const FDEstimate fe = fd_biharmonic(se, q);
    const FDEstimate ft = fd_biharmonic(st, q);
    CHECK(std::abs(fe.value - ft.value) <= 1e-4 * fe.scale);
    CHECK(fe.normalized() <= 1e-4);
}

TEST_CASE("FD config guards", "[verify]") {
    const ScalarField one = [](const Point3&) { return Cx{1.0, 0.0}; };
    CHECK_THROWS_AS(fd_biharmonic(one, {}, FDConfig{1e-5, 2, 1e-4}), ValidationError);
    CHECK_THROWS_AS(fd_biharmonic(one, {}, FDConfig{0.0, 2, 1e-4}), ValidationError);
    CHECK_THROWS_AS(fd_biharmonic(one, {}, FDConfig{1e-2, 0, 1e-4}), ValidationError);
    const auto geo = HolomorphicFn::power_series(0.0, std::vector<Cx>(60, Cx{1.0, 0.0}), 1.0);
    const SolutionSpec s(make_triple({1.0}, {0.0}, {I}, 1), geo, 0);
    CHECK_THROWS_AS(fd_biharmonic(s, {0.99, 0.0, 0.0}), DomainError);
}

TEST_CASE("verification records", "[verify]") {
    SpectralParams p;
    p.n = 3;
    p.k = {1.0, 0.3, 0.2};
    p.m = {0.4, 0.1, 0.0};
    const BasisTriple b = solve_g(p);
    const std::vector<Point3> pts{{0.0, 0.0, 0.0}, {0.3, -0.2, 0.4}};
    const VerificationRecord ok = verify_spec(SolutionSpec(b, quartic, 2), Mode::Biharmonic, "U_2", pts, {}, 1e-4);
    CHECK(ok.passed);
    REQUIRE(ok.symbolic_zero.has_value());
    CHECK(*ok.symbolic_zero);
    CHECK_FALSE(ok.harmonic_zero);

    const VerificationRecord ex =
        verify_spec(SolutionSpec(b, HolomorphicFn::exp(Cx{0.3, 0.3}), 2), Mode::Biharmonic, "U_2", pts, {}, 1e-4);
    CHECK(ex.passed);
    CHECK_FALSE(ex.symbolic_zero.has_value());
    CHECK(ex.fd_residual <= 1e-4 * ex.fd_scale);

    std::vector<Cx> g(b.g().begin(), b.g().end());
    g[1] += 0.5;
    const VerificationRecord bad =
        verify_spec(SolutionSpec(make_triple(p.k, p.m, g), quartic, 2, true), Mode::Biharmonic, "U_2", pts, {}, 1e-4);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(*bad.symbolic_zero);
}
