#include "biharm/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <exception>
#include <thread>

#include "biharm/errors.hpp"
#include "biharm/jets.hpp"

namespace biharm {

std::string to_string(const Point3& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
    return os.str();
}

std::size_t required_constraints(std::size_t index) {
    return (index + 2) / 2;
}

SolutionSpec::SolutionSpec(BasisTriple basis, HolomorphicFn f, std::size_t index, bool unchecked)
    : basis_(std::move(basis)), f_(std::move(f)), index_(index), unchecked_(unchecked) {
    if (index_ >= basis_.n()) {
        throw ValidationError("solution index " + std::to_string(index_) + " needs an algebra of dimension > " +
                              std::to_string(index_) + " (n = " + std::to_string(basis_.n()) + ")");
    }
    if (!unchecked_ && basis_.constrained < required_constraints(index_)) {
        throw ValidationError("U_" + std::to_string(index_) + " needs " + std::to_string(required_constraints(index_)) +
                              " constrained g coefficients, basis has " + std::to_string(basis_.constrained) +
                              " (set unchecked to explore anyway)");
    }
}

Superposition::Superposition(std::vector<WeightedSpec> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw ValidationError("superposition needs at least one member");
    }
    for (const auto& m : members_) {
        require_finite(m.weight, "superposition weight");
    }
}

std::vector<Cx> xi_values(const BasisTriple& basis, const Point3& p) {
    const auto k = basis.k();
    const auto m = basis.m();
    const auto g = basis.g();
    std::vector<Cx> xi(basis.n());
    for (std::size_t r = 0; r < xi.size(); ++r) {
        xi[r] = k[r] * p.x + m[r] * p.y + g[r] * p.z;
    }
    return xi;
}

bool in_domain(const SolutionSpec& spec, const Point3& p) {
    const auto& b = spec.basis();
    const Cx xi0 = b.k()[0] * p.x + b.m()[0] * p.y + b.g()[0] * p.z;
    return biharm::in_domain(spec.f(), xi0);
}

Cx evaluate_u(const SolutionSpec& spec, const Point3& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
        throw ValidationError("evaluation point must be finite");
    }
    const std::size_t k = spec.index();
    std::vector<Cx> xi = xi_values(spec.basis(), p);
    if (!biharm::in_domain(spec.f(), xi[0])) {
        throw DomainError("point " + to_string(p) + " lies outside the solution domain: xi_0 is outside the domain of F (" +
                          spec.f().domain().describe() + ")");
    }
    xi.resize(k + 1);
    const std::vector<Cx> d = derivatives(spec.f(), xi[0], k + 1);
    return compose_taylor(d, Jet(std::move(xi)))[k];
}

Cx evaluate_superposition(const Superposition& s, const Point3& p) {
    Cx total{0.0, 0.0};
    for (const auto& m : s.members()) {
        total += m.weight * evaluate_u(m.spec, p);
    }
    return total;
}

void Grid::validate() const {
    for (int a = 0; a < 3; ++a) {
        if (steps[a] == 0) {
            throw ValidationError("grid needs at least one step per axis");
        }
        if (!std::isfinite(min[a]) || !std::isfinite(max[a])) {
            throw ValidationError("grid bounds must be finite");
        }
        if (max[a] < min[a]) {
            throw ValidationError("grid max must be >= min on every axis");
        }
    }
}

Point3 Grid::point(std::size_t idx) const {
    const std::size_t iz = idx % steps[2];
    const std::size_t iy = (idx / steps[2]) % steps[1];
    const std::size_t ix = idx / (steps[2] * steps[1]);
    auto coord = [&](int a, std::size_t i) {
        if (steps[a] == 1) {
            return min[a];
        }
        return min[a] + (max[a] - min[a]) * static_cast<double>(i) / static_cast<double>(steps[a] - 1);
    };
    return {coord(0, ix), coord(1, iy), coord(2, iz)};
}

namespace {

template <class InDomain, class Eval>
Field evaluate_grid(const Grid& grid, unsigned threads, InDomain&& inside, Eval&& eval) {
    grid.validate();
    const std::size_t total = grid.size();
    for (std::size_t i = 0; i < total; ++i) {
        const Point3 p = grid.point(i);
        if (!inside(p)) {
            throw DomainError("grid point #" + std::to_string(i) + " " + to_string(p) +
                              " lies outside the solution domain");
        }
    }

    Field field{grid, std::vector<Cx>(total)};
    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) {
            field.values[i] = eval(grid.point(i));
        }
        return field;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < total; i += workers) {
                        field.values[i] = eval(grid.point(i));
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return field;
}

} // namespace

Field grid_eval(const SolutionSpec& spec, const Grid& grid, unsigned threads) {
    return evaluate_grid(
        grid, threads, [&](const Point3& p) { return in_domain(spec, p); },
        [&](const Point3& p) { return evaluate_u(spec, p); });
}

Field grid_eval(const Superposition& s, const Grid& grid, unsigned threads) {
    return evaluate_grid(
        grid, threads,
        [&](const Point3& p) {
            return std::all_of(s.members().begin(), s.members().end(),
                               [&](const WeightedSpec& m) { return in_domain(m.spec, p); });
        },
        [&](const Point3& p) { return evaluate_superposition(s, p); });
}

} // namespace biharm
