#include <catch_amalgamated.hpp>

#include <cmath>

#include "biharm/errors.hpp"
#include "biharm/holo.hpp"
#include "support.hpp"

using namespace biharm;
using testing::near;

TEST_CASE("polynomial derivatives", "[holo]") {
    const auto cube = HolomorphicFn::polynomial({0.0, 0.0, 0.0, 1.0});
    const auto d = derivatives(cube, 2.0, 5);
    const std::vector<Cx> expected{8.0, 12.0, 12.0, 6.0, 0.0};
    REQUIRE(d.size() == 5);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(d[j] == expected[j]);
    }
    CHECK(cube.is_polynomial());
    CHECK(HolomorphicFn::polynomial({1.0, 2.0, 0.0, 0.0}).polynomial_coefficients().size() == 2);
    CHECK_THROWS_AS(HolomorphicFn::polynomial({}), ValidationError);
    CHECK_THROWS_AS(HolomorphicFn::exp().polynomial_coefficients(), UnsupportedError);
}

TEST_CASE("entire functions", "[holo]") {
    const auto d = derivatives(HolomorphicFn::exp(), 0.0, 4);
    for (Cx v : d) {
        CHECK(near(v, 1.0, 1e-15));
    }
    const Cx s{0.3, -0.7}, z{0.4, 1.1};
    const auto e = derivatives(HolomorphicFn::exp(s), z, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(near(e[j], std::pow(s, static_cast<int>(j)) * std::exp(s * z), 1e-14));
    }
    const auto sn = derivatives(HolomorphicFn::sin(s), z, 5);
    const auto cs = derivatives(HolomorphicFn::cos(s), z, 5);
    CHECK(near(sn[0], std::sin(s * z), 1e-14));
    CHECK(near(sn[1], s * std::cos(s * z), 1e-14));
    CHECK(near(sn[2], -s * s * std::sin(s * z), 1e-14));
    CHECK(near(sn[4], std::pow(s, 4) * std::sin(s * z), 1e-14));
    CHECK(near(cs[1], -s * std::sin(s * z), 1e-14));
    CHECK(near(cs[3], s * s * s * std::sin(s * z), 1e-14));
    CHECK(in_domain(HolomorphicFn::exp(), Cx{1e6, -1e6}));
}

TEST_CASE("geometric power series", "[holo]") {
    std::vector<Cx> ones(200, Cx{1.0, 0.0});
    const auto f = HolomorphicFn::power_series(0.0, ones, 1.0);
    const auto d = derivatives(f, 0.5, 3);
    // j! (1 - z)^{-(j+1)} at z = 1/2.
    CHECK(near(d[0], 2.0, 1e-12));
    CHECK(near(d[1], 4.0, 1e-12));
    CHECK(near(d[2], 16.0, 1e-12));

    CHECK_FALSE(in_domain(f, 2.0));
    CHECK(in_domain(f, 0.999));
    CHECK_THROWS_AS(derivatives(f, 2.0, 1), DomainError);
    CHECK_THROWS_AS(HolomorphicFn::power_series(0.0, ones, 0.0), ValidationError);
    CHECK_THROWS_AS(HolomorphicFn::power_series(0.0, {}, 1.0), ValidationError);
}

TEST_CASE("power series at its center reads the coefficients", "[holo]") {
    const auto f = HolomorphicFn::power_series(Cx{1.0, 1.0}, {3.0, 2.0, 5.0, 0.0, 7.0}, 2.0);
    const auto d = derivatives(f, Cx{1.0, 1.0}, 6);
    CHECK(d[0] == Cx{3.0, 0.0});
    CHECK(d[1] == Cx{2.0, 0.0});
    CHECK(d[2] == Cx{10.0, 0.0});
    CHECK(d[3] == Cx{0.0, 0.0});
    CHECK(d[4] == Cx{168.0, 0.0});
    CHECK(d[5] == Cx{0.0, 0.0});
}

TEST_CASE("derivative j is the central difference of derivative j-1", "[holo]") {
    const double h = 1e-5;
    const Cx z{0.3, 0.2};
    const std::vector<HolomorphicFn> fns{
        HolomorphicFn::polynomial({1.0, Cx{0.0, 2.0}, -1.0, 0.5}),
        HolomorphicFn::exp(Cx{0.5, 0.5}),
        HolomorphicFn::sin(),
        HolomorphicFn::cos(Cx{1.0, -0.5}),
        HolomorphicFn::power_series(0.0, std::vector<Cx>(400, Cx{1.0, 0.0}), 1.0),
    };
    for (const auto& f : fns) {
        const auto d0 = derivatives(f, z, 4);
        const auto dp = derivatives(f, z + h, 4);
        const auto dm = derivatives(f, z - h, 4);
        for (std::size_t j = 1; j <= 3; ++j) {
            const Cx fd = (dp[j - 1] - dm[j - 1]) / (2.0 * h);
            CHECK(std::abs(fd - d0[j]) <= 1e-6 * std::max(1.0, std::abs(d0[j])));
        }
    }
}

TEST_CASE("non-finite inputs are rejected", "[holo]") {
    CHECK_THROWS_AS(HolomorphicFn::exp(Cx{INFINITY, 0.0}), ValidationError);
    CHECK_THROWS_AS(HolomorphicFn::polynomial({Cx{0.0, NAN}}), ValidationError);
}
