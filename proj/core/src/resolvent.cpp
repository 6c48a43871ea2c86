#include "biharm/resolvent.hpp"

#include <algorithm>

#include "biharm/errors.hpp"

namespace biharm {

XiMonomial::XiMonomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
    while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
    }
}

XiMonomial XiMonomial::from_factors(std::initializer_list<std::pair<unsigned, unsigned>> index_power) {
    std::vector<unsigned> e;
    for (auto [index, power] : index_power) {
        if (index == 0) {
            throw ValidationError("xi monomials carry indices >= 1");
        }
        if (e.size() < index) {
            e.resize(index, 0);
        }
        e[index - 1] += power;
    }
    return XiMonomial(std::move(e));
}

unsigned XiMonomial::exponent(unsigned index) const noexcept {
    if (index == 0 || index > exps_.size()) {
        return 0;
    }
    return exps_[index - 1];
}

unsigned XiMonomial::degree() const noexcept {
    unsigned d = 0;
    for (unsigned a : exps_) {
        d += a;
    }
    return d;
}

unsigned XiMonomial::weight() const noexcept {
    unsigned w = 0;
    for (std::size_t r = 0; r < exps_.size(); ++r) {
        w += static_cast<unsigned>(r + 1) * exps_[r];
    }
    return w;
}

XiMonomial XiMonomial::times(unsigned index) const {
    if (index == 0) {
        throw ValidationError("xi monomials carry indices >= 1");
    }
    std::vector<unsigned> e = exps_;
    if (e.size() < index) {
        e.resize(index, 0);
    }
    ++e[index - 1];
    return XiMonomial(std::move(e));
}

Cx XiMonomial::evaluate(std::span<const Cx> xi) const {
    Cx v{1.0, 0.0};
    for (std::size_t r = 0; r < exps_.size(); ++r) {
        if (exps_[r] == 0) {
            continue;
        }
        if (r + 1 >= xi.size()) {
            throw ValidationError("monomial needs xi_" + std::to_string(r + 1) + " but only " +
                                  std::to_string(xi.size()) + " values were given");
        }
        for (unsigned p = 0; p < exps_[r]; ++p) {
            v *= xi[r + 1];
        }
    }
    return v;
}

std::strong_ordering operator<=>(const XiMonomial& a, const XiMonomial& b) {
    const std::size_t len = std::max(a.exps_.size(), b.exps_.size());
    for (std::size_t r = 0; r < len; ++r) {
        const unsigned ea = r < a.exps_.size() ? a.exps_[r] : 0;
        const unsigned eb = r < b.exps_.size() ? b.exps_[r] : 0;
        if (ea != eb) {
            return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

PoleExpansion resolvent_coeffs(std::size_t k) {
    if (k > kMaxResolventIndex) {
        throw ValidationError("resolvent index " + std::to_string(k) + " exceeds the cap of " +
                              std::to_string(kMaxResolventIndex));
    }
    std::vector<PoleExpansion> a;
    a.reserve(k + 1);
    a.push_back(PoleExpansion{0, {{1u, XiPolynomial{{XiMonomial{}, 1}}}}});
    for (std::size_t s = 1; s <= k; ++s) {
        PoleExpansion next{s, {}};
        for (std::size_t i = 1; i <= s; ++i) {
            for (const auto& [pole, poly] : a[s - i].terms) {
                XiPolynomial& target = next.terms[pole + 1];
                for (const auto& [mono, coeff] : poly) {
                    std::int64_t& slot = target[mono.times(static_cast<unsigned>(i))];
                    if (__builtin_add_overflow(slot, coeff, &slot)) {
                        throw OverflowError("resolvent coefficient overflow at index " + std::to_string(s));
                    }
                }
            }
        }
        a.push_back(std::move(next));
    }
    return std::move(a.back());
}

Cx residue_eval(const PoleExpansion& pe, const HolomorphicFn& f, std::span<const Cx> xi) {
    if (xi.size() < pe.k + 1) {
        throw ValidationError("residue_eval: need xi_0..xi_" + std::to_string(pe.k));
    }
    const std::vector<Cx> d = derivatives(f, xi[0], pe.k + 1);
    Cx total{0.0, 0.0};
    for (const auto& [pole, poly] : pe.terms) {
        Cx p{0.0, 0.0};
        for (const auto& [mono, coeff] : poly) {
            p += static_cast<double>(coeff) * mono.evaluate(xi);
        }
        const double fact = static_cast<double>(factorial(pole - 1));
        total += p * d[pole - 1] / fact;
    }
    return total;
}

UFormula u_formula(std::size_t k) {
    const PoleExpansion pe = resolvent_coeffs(k);
    UFormula u{k, {}};
    for (const auto& [pole, poly] : pe.terms) {
        const unsigned order = pole - 1;
        const Rational inv_fact(1, factorial(order));
        auto& group = u.terms[order];
        for (const auto& [mono, coeff] : poly) {
            group.emplace(mono, Rational(coeff) * inv_fact);
        }
    }
    return u;
}

} // namespace biharm
