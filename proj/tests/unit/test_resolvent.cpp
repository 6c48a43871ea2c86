#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "biharm/errors.hpp"
#include "biharm/jets.hpp"
#include "biharm/resolvent.hpp"
#include "support.hpp"

using namespace biharm;
using testing::near;

namespace {

using F = std::initializer_list<std::pair<unsigned, unsigned>>;

XiMonomial mono(F f) {
    return XiMonomial::from_factors(f);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

WideInt fact(unsigned n) {
    WideInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

} // namespace

TEST_CASE("resolvent coefficients: small tables", "[resolvent]") {
    const auto a0 = resolvent_coeffs(0);
    REQUIRE(a0.terms.size() == 1);
    CHECK(a0.terms.at(1).at(XiMonomial{}) == 1);

    const auto a1 = resolvent_coeffs(1);
    CHECK(a1.terms == std::map<unsigned, XiPolynomial>{{2, {{mono({{1, 1}}), 1}}}});

    const auto a4 = resolvent_coeffs(4);
    const std::map<unsigned, XiPolynomial> want4{
        {2, {{mono({{4, 1}}), 1}}},
        {3, {{mono({{1, 1}, {3, 1}}), 2}, {mono({{2, 2}}), 1}}},
        {4, {{mono({{1, 2}, {2, 1}}), 3}}},
        {5, {{mono({{1, 4}}), 1}}},
    };
    CHECK(a4.terms == want4);

    const auto a6 = resolvent_coeffs(6);
    const XiPolynomial want65{{mono({{1, 3}, {3, 1}}), 4}, {mono({{1, 2}, {2, 2}}), 6}};
    CHECK(a6.terms.at(5) == want65);
}

TEST_CASE("resolvent coefficients count compositions", "[resolvent]") {
    // xi_1^{a_1} xi_2^{a_2} ... at pole order j appears once per ordering of
    // the j-1 parts, i.e. with multinomial coefficient (j-1)! / prod a_r!.
    for (std::size_t k = 1; k <= 14; ++k) {
        const auto pe = resolvent_coeffs(k);
        CHECK(pe.k == k);
        std::int64_t total = 0;
        for (const auto& [j, poly] : pe.terms) {
            CHECK(j >= 2);
            CHECK(j <= k + 1);
            for (const auto& [m, c] : poly) {
                CHECK(m.weight() == k);
                CHECK(m.degree() == j - 1);
                WideInt denom = 1;
                for (unsigned r = 1; r <= m.max_index(); ++r) {
                    denom *= fact(m.exponent(r));
                }
                CHECK(static_cast<WideInt>(c) * denom == fact(j - 1));
                total += c;
            }
        }
        // Compositions of k: 2^{k-1}.
        CHECK(total == (std::int64_t{1} << (k - 1)));
    }
}

TEST_CASE("resolvent index cap", "[resolvent]") {
    CHECK_NOTHROW(resolvent_coeffs(kMaxResolventIndex));
    CHECK_THROWS_AS(resolvent_coeffs(kMaxResolventIndex + 1), ValidationError);
    CHECK_THROWS_AS(u_formula(kMaxResolventIndex + 1), ValidationError);
    CHECK_NOTHROW(u_formula(kMaxResolventIndex));
}

TEST_CASE("residue evaluation", "[resolvent]") {
    const std::vector<Cx> xi{1.0, 2.0, 3.0};
    const auto sq = HolomorphicFn::polynomial({0.0, 0.0, 1.0});
    CHECK(near(residue_eval(resolvent_coeffs(2), sq, xi), 10.0, 1e-15));
    CHECK(near(residue_eval(resolvent_coeffs(0), sq, xi), 1.0, 1e-15));
    CHECK(residue_eval(resolvent_coeffs(1), HolomorphicFn::polynomial({Cx{4.0, 1.0}}), xi) == Cx{0.0, 0.0});
    CHECK_THROWS_AS(residue_eval(resolvent_coeffs(3), sq, xi), ValidationError);
}

TEST_CASE("residue evaluation matches the jet composition", "[resolvent]") {
    std::mt19937_64 rng(31);
    const std::vector<HolomorphicFn> fns{HolomorphicFn::exp(Cx{0.7, 0.2}), HolomorphicFn::sin(Cx{1.0, -0.3}),
                                         HolomorphicFn::polynomial(testing::random_vec(rng, 6))};
    for (int t = 0; t < 30; ++t) {
        const std::size_t k = t % 9;
        const auto xi = testing::random_vec(rng, k + 1);
        const auto& f = fns[t % fns.size()];
        const Jet comp = compose_taylor(derivatives(f, xi[0], k + 1), Jet(xi));
        CHECK(near(residue_eval(resolvent_coeffs(k), f, xi), comp[k], 1e-12));
    }
}

TEST_CASE("U formula coefficients", "[resolvent]") {
    const auto u0 = u_formula(0);
    CHECK(u0.terms.at(0).at(XiMonomial{}) == Rational(1));

    const auto u5 = u_formula(5);
    const std::map<XiMonomial, Rational> want53{{mono({{1, 2}, {3, 1}}), Rational(1, 2)},
                                                {mono({{1, 1}, {2, 2}}), Rational(1, 2)}};
    CHECK(u5.terms.at(3) == want53);

    const auto u6 = u_formula(6);
    CHECK(u6.terms.at(6).at(mono({{1, 6}})) == Rational(1, 720));
    CHECK(u6.terms.at(6).size() == 1);

    // Every coefficient is 1 / prod a_r!.
    for (std::size_t k = 0; k <= 12; ++k) {
        for (const auto& [d, group] : u_formula(k).terms) {
            for (const auto& [m, c] : group) {
                WideInt denom = 1;
                for (unsigned r = 1; r <= m.max_index(); ++r) {
                    denom *= fact(m.exponent(r));
                }
                CHECK(c == Rational(1, denom));
                CHECK(m.degree() == d);
            }
        }
    }
}

TEST_CASE("formula rendering", "[resolvent]") {
    CHECK(to_text(u_formula(0)) == "U_0 = F(ξ0)");
    CHECK(to_text(u_formula(1)) == "U_1 = ξ1·F′(ξ0)");
    CHECK(to_latex(u_formula(4)).find(R"(\frac{1}{2}(2\xi_1\xi_3+\xi_2^2)F''(\xi_0))") != std::string::npos);
    CHECK(to_latex(u_formula(12)).find(R"(\xi_{12})") != std::string::npos);
    CHECK(to_latex(u_formula(12)).find(R"(\xi_1^{12})") != std::string::npos);
    CHECK(to_text(u_formula(7)) == to_text(u_formula(7)));
}

TEST_CASE("formula golden files", "[resolvent]") {
    for (std::size_t k = 0; k <= 6; ++k) {
        const std::string base = std::string(BIHARM_GOLDEN_DIR) + "/U_" + std::to_string(k);
        CHECK(to_text(u_formula(k)) + "\n" == read_file(base + ".txt"));
        CHECK(to_latex(u_formula(k)) + "\n" == read_file(base + ".tex"));
    }
}

TEST_CASE("rational arithmetic", "[resolvent]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(factorial(24) == fact(24));
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
    CHECK_THROWS_AS(checked_mul(factorial(30), factorial(30)), OverflowError);
}
