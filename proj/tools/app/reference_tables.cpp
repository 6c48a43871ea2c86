#include "reference_tables.hpp"

#include <set>

namespace biharm::app {

namespace {

using F = std::initializer_list<std::pair<unsigned, unsigned>>;

XiMonomial mono(F factors) {
    return XiMonomial::from_factors(factors);
}

} // namespace

const std::vector<PoleExpansion>& reference_resolvent_table() {
    static const std::vector<PoleExpansion> table = {
        {1, {{2, {{mono({{1, 1}}), 1}}}}},
        {2, {{2, {{mono({{2, 1}}), 1}}}, {3, {{mono({{1, 2}}), 1}}}}},
        {3, {{2, {{mono({{3, 1}}), 1}}}, {3, {{mono({{1, 1}, {2, 1}}), 2}}}, {4, {{mono({{1, 3}}), 1}}}}},
        {4,
         {{2, {{mono({{4, 1}}), 1}}},
          {3, {{mono({{1, 1}, {3, 1}}), 2}, {mono({{2, 2}}), 1}}},
          {4, {{mono({{1, 2}, {2, 1}}), 3}}},
          {5, {{mono({{1, 4}}), 1}}}}},
        {5,
         {{2, {{mono({{5, 1}}), 1}}},
          {3, {{mono({{1, 1}, {4, 1}}), 2}, {mono({{2, 1}, {3, 1}}), 2}}},
          {4, {{mono({{1, 2}, {3, 1}}), 3}, {mono({{1, 1}, {2, 2}}), 3}}},
          {5, {{mono({{1, 3}, {2, 1}}), 4}}},
          {6, {{mono({{1, 5}}), 1}}}}},
        {6,
         {{2, {{mono({{6, 1}}), 1}}},
          {3, {{mono({{3, 2}}), 1}, {mono({{1, 1}, {5, 1}}), 2}, {mono({{2, 1}, {4, 1}}), 2}}},
          {4, {{mono({{2, 3}}), 1}, {mono({{1, 1}, {2, 1}, {3, 1}}), 6}, {mono({{1, 2}, {4, 1}}), 3}}},
          {5, {{mono({{1, 3}, {3, 1}}), 4}, {mono({{1, 2}, {2, 2}}), 6}}},
          {6, {{mono({{1, 4}, {2, 1}}), 5}}},
          {7, {{mono({{1, 6}}), 1}}}}},
    };
    return table;
}

std::string to_string(const XiPolynomial& poly) {
    std::string out;
    for (const auto& [m, c] : poly) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string body;
        for (unsigned r = 1; r <= m.max_index(); ++r) {
            const unsigned a = m.exponent(r);
            if (a == 0) {
                continue;
            }
            body += "xi" + std::to_string(r);
            if (a > 1) {
                body += "^" + std::to_string(a);
            }
        }
        if (body.empty()) {
            out += std::to_string(c);
        } else {
            out += (c == 1 ? "" : std::to_string(c) + "*") + body;
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> diff_pole_expansions(const PoleExpansion& expected, const PoleExpansion& actual) {
    std::vector<std::string> diffs;
    const std::string tag = "A_" + std::to_string(expected.k);
    if (expected.k != actual.k) {
        diffs.push_back(tag + ": index mismatch (computed A_" + std::to_string(actual.k) + ")");
        return diffs;
    }
    std::set<unsigned> poles;
    for (const auto& [j, p] : expected.terms) {
        poles.insert(j);
    }
    for (const auto& [j, p] : actual.terms) {
        poles.insert(j);
    }
    for (unsigned j : poles) {
        const auto e = expected.terms.find(j);
        const auto a = actual.terms.find(j);
        const XiPolynomial none;
        const XiPolynomial& ep = e == expected.terms.end() ? none : e->second;
        const XiPolynomial& ap = a == actual.terms.end() ? none : a->second;
        if (ep != ap) {
            diffs.push_back(tag + ", pole order " + std::to_string(j) + ": expected " + to_string(ep) + ", computed " +
                            to_string(ap));
        }
    }
    return diffs;
}

} // namespace biharm::app
