#pragma once

// Solution fields U_k(x, y, z): the rho^k component of F(x e1 + y e2 + z e3).

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "biharm/characteristic.hpp"
#include "biharm/cx.hpp"
#include "biharm/holo.hpp"

namespace biharm {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

std::string to_string(const Point3& p);

// U_k needs W_s = 0 for s < ceil((k+1)/2), i.e. that many constrained g's.
std::size_t required_constraints(std::size_t index);

class SolutionSpec {
public:
    // ValidationError if index >= n, or if the basis constrains too few g's
    // for U_index to be biharmonic (unless `unchecked`).
    SolutionSpec(BasisTriple basis, HolomorphicFn f, std::size_t index, bool unchecked = false);

    const BasisTriple& basis() const noexcept { return basis_; }
    const HolomorphicFn& f() const noexcept { return f_; }
    std::size_t index() const noexcept { return index_; }
    bool unchecked() const noexcept { return unchecked_; }

private:
    BasisTriple basis_;
    HolomorphicFn f_;
    std::size_t index_;
    bool unchecked_;
};

struct WeightedSpec {
    Cx weight;
    SolutionSpec spec;
};

class Superposition {
public:
    explicit Superposition(std::vector<WeightedSpec> members);
    std::span<const WeightedSpec> members() const noexcept { return members_; }

private:
    std::vector<WeightedSpec> members_;
};

// xi_r = k_r x + m_r y + g_r z, r = 0..n-1.
std::vector<Cx> xi_values(const BasisTriple& basis, const Point3& p);

bool in_domain(const SolutionSpec& spec, const Point3& p);

// DomainError if xi_0(p) lies outside the domain of F.
Cx evaluate_u(const SolutionSpec& spec, const Point3& p);
Cx evaluate_superposition(const Superposition& s, const Point3& p);

struct Grid {
    std::array<double, 3> min{};
    std::array<double, 3> max{};
    std::array<std::size_t, 3> steps{1, 1, 1};

    // ValidationError on zero steps, non-finite bounds, or reversed ranges.
    void validate() const;
    std::size_t size() const noexcept { return steps[0] * steps[1] * steps[2]; }
    // Row-major with z fastest: idx = (ix * ny + iy) * nz + iz.
    Point3 point(std::size_t idx) const;

    friend bool operator==(const Grid&, const Grid&) = default;
};

struct Field {
    Grid grid;
    std::vector<Cx> values;
};

// threads = 0 picks std::thread::hardware_concurrency(). Every point is
// computed independently into its own slot, so the result does not depend on
// the schedule. Domain errors name the first offending point in grid order.
Field grid_eval(const SolutionSpec& spec, const Grid& grid, unsigned threads = 0);
Field grid_eval(const Superposition& s, const Grid& grid, unsigned threads = 0);

} // namespace biharm
