#pragma once

// Truncated power series over a commutative coefficient ring: the algebra with
// basis {1, rho, ..., rho^(n-1)} and rho^n = 0.
//
// BasicJet<Cx> is the numeric carrier. The same arithmetic instantiated over
// TriPoly (polynomials in x, y, z) gives the exact symbolic route in verify.hpp.

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "biharm/cx.hpp"
#include "biharm/errors.hpp"

namespace biharm {

template <class T>
class BasicJet {
public:
    using value_type = T;

    explicit BasicJet(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw ValidationError("jet order must be >= 1");
        }
        if constexpr (std::is_same_v<T, Cx>) {
            require_finite(coeffs_, "jet coefficient");
        }
    }

    static BasicJet zero(std::size_t order) { return BasicJet(std::vector<T>(checked_order(order))); }

    static BasicJet unit(std::size_t order) {
        std::vector<T> c(checked_order(order));
        c[0] = T(Cx{1.0, 0.0});
        return BasicJet(std::move(c));
    }

    // rho itself (zero unless order >= 2).
    static BasicJet generator(std::size_t order) {
        std::vector<T> c(checked_order(order));
        if (order > 1) {
            c[1] = T(Cx{1.0, 0.0});
        }
        return BasicJet(std::move(c));
    }

    std::size_t order() const noexcept { return coeffs_.size(); }
    std::span<const T> coeffs() const noexcept { return coeffs_; }
    const T& operator[](std::size_t r) const { return coeffs_.at(r); }

    // Same element with the rho^0 term removed; always nilpotent.
    BasicJet nilpotent_part() const {
        std::vector<T> c = coeffs_;
        c[0] = T{};
        return BasicJet(std::move(c));
    }

    // Projection onto E^m (drop coefficients of rho^r, r >= m).
    BasicJet truncated(std::size_t m) const {
        if (m == 0 || m > order()) {
            throw ValidationError("jet truncation order out of range");
        }
        return BasicJet(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m)));
    }

    friend BasicJet operator+(const BasicJet& a, const BasicJet& b) {
        require_same_order(a, b, "jet addition");
        std::vector<T> c(a.order());
        for (std::size_t r = 0; r < c.size(); ++r) {
            c[r] = a.coeffs_[r] + b.coeffs_[r];
        }
        return BasicJet(std::move(c));
    }

    friend BasicJet operator-(const BasicJet& a, const BasicJet& b) {
        require_same_order(a, b, "jet subtraction");
        std::vector<T> c(a.order());
        for (std::size_t r = 0; r < c.size(); ++r) {
            c[r] = a.coeffs_[r] - b.coeffs_[r];
        }
        return BasicJet(std::move(c));
    }

    // Truncated Cauchy product.
    friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
        require_same_order(a, b, "jet multiplication");
        const std::size_t n = a.order();
        std::vector<T> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; i + j < n; ++j) {
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return BasicJet(std::move(c));
    }

    friend BasicJet operator*(Cx s, const BasicJet& a) {
        std::vector<T> c(a.order());
        for (std::size_t r = 0; r < c.size(); ++r) {
            c[r] = a.coeffs_[r] * s;
        }
        return BasicJet(std::move(c));
    }

    friend bool operator==(const BasicJet&, const BasicJet&) = default;

private:
    static std::size_t checked_order(std::size_t order) {
        if (order == 0) {
            throw ValidationError("jet order must be >= 1");
        }
        return order;
    }

    static void require_same_order(const BasicJet& a, const BasicJet& b, const char* what) {
        if (a.order() != b.order()) {
            throw ValidationError(std::string(what) + ": order mismatch (" + std::to_string(a.order()) +
                                  " vs " + std::to_string(b.order()) + ")");
        }
    }

    std::vector<T> coeffs_;
};

using Jet = BasicJet<Cx>;

template <class T>
BasicJet<T> pow(const BasicJet<T>& a, unsigned p) {
    BasicJet<T> result = BasicJet<T>::unit(a.order());
    for (unsigned i = 0; i < p; ++i) {
        result = result * a;
    }
    return result;
}

// Polynomial sum_d coeffs[d] t^d evaluated at a jet by Horner's rule.
template <class T>
BasicJet<T> horner(std::span<const Cx> coeffs, const BasicJet<T>& x) {
    const std::size_t n = x.order();
    if (coeffs.empty()) {
        return BasicJet<T>::zero(n);
    }
    BasicJet<T> acc = coeffs.back() * BasicJet<T>::unit(n);
    for (std::size_t d = coeffs.size() - 1; d-- > 0;) {
        acc = acc * x + coeffs[d] * BasicJet<T>::unit(n);
    }
    return acc;
}

// F(zeta) from the Taylor data [F(z0), F'(z0), ...] at z0 = zeta[0]:
//   sum_j F^(j)(z0)/j! * eta^j,  eta = zeta - z0 (nilpotent, so the sum is finite).
// The rho^k coefficient is the residue of F(t) A_k at t = z0.
inline Jet compose_taylor(std::span<const Cx> derivs, const Jet& zeta) {
    const std::size_t n = zeta.order();
    if (derivs.size() < n) {
        throw ValidationError("compose_taylor: need " + std::to_string(n) + " derivatives, got " +
                              std::to_string(derivs.size()));
    }
    std::vector<Cx> taylor(n);
    double factorial = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) {
            factorial *= static_cast<double>(j);
        }
        taylor[j] = derivs[j] / factorial;
    }
    return horner<Cx>(taylor, zeta.nilpotent_part());
}

} // namespace biharm
