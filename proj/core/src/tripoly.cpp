#include "biharm/tripoly.hpp"

#include <algorithm>

namespace biharm {

TriPoly::TriPoly(Cx constant) {
    require_finite(constant, "polynomial coefficient");
    if (constant != Cx{0.0, 0.0}) {
        terms_.emplace(Exponent3{0, 0, 0}, constant);
    }
}

TriPoly TriPoly::monomial(Cx coeff, unsigned a, unsigned b, unsigned c) {
    require_finite(coeff, "polynomial coefficient");
    TriPoly p;
    if (coeff != Cx{0.0, 0.0}) {
        p.terms_.emplace(Exponent3{a, b, c}, coeff);
    }
    return p;
}

TriPoly TriPoly::linear(Cx cx, Cx cy, Cx cz) {
    TriPoly p = monomial(cx, 1, 0, 0) + monomial(cy, 0, 1, 0) + monomial(cz, 0, 0, 1);
    return p;
}

Cx TriPoly::coeff(unsigned a, unsigned b, unsigned c) const {
    const auto it = terms_.find(Exponent3{a, b, c});
    return it == terms_.end() ? Cx{0.0, 0.0} : it->second;
}

double TriPoly::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& [e, c] : terms_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

unsigned TriPoly::degree() const noexcept {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[0] + e[1] + e[2]);
    }
    return d;
}

Cx TriPoly::evaluate(double x, double y, double z) const {
    Cx total{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        total += c * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
    }
    return total;
}

TriPoly TriPoly::derivative(int axis, unsigned times) const {
    TriPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[axis] < times) {
            continue;
        }
        double factor = 1.0;
        for (unsigned q = 0; q < times; ++q) {
            factor *= static_cast<double>(e[axis] - q);
        }
        Exponent3 shifted = e;
        shifted[axis] -= times;
        out.terms_[shifted] += c * factor;
    }
    out.normalize();
    return out;
}

void TriPoly::normalize() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == Cx{0.0, 0.0}; });
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    TriPoly out = a;
    for (const auto& [e, c] : b.terms_) {
        out.terms_[e] += c;
    }
    out.normalize();
    return out;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
    TriPoly out = a;
    for (const auto& [e, c] : b.terms_) {
        out.terms_[e] -= c;
    }
    out.normalize();
    return out;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.terms_[Exponent3{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
        }
    }
    out.normalize();
    return out;
}

TriPoly operator*(const TriPoly& a, Cx s) {
    TriPoly out;
    if (s == Cx{0.0, 0.0}) {
        return out;
    }
    for (const auto& [e, c] : a.terms_) {
        out.terms_.emplace(e, c * s);
    }
    out.normalize();
    return out;
}

} // namespace biharm
