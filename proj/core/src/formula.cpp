#include "biharm/resolvent.hpp"

#include <vector>

namespace biharm {

namespace {

enum class Style { Text, Latex };

std::string superscript(unsigned v) {
    static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    const std::string s = std::to_string(v);
    std::string out;
    for (char ch : s) {
        out += digits[ch - '0'];
    }
    return out;
}

std::string subscript_latex(unsigned v) {
    const std::string s = std::to_string(v);
    return s.size() == 1 ? "_" + s : "_{" + s + "}";
}

std::string power_latex(unsigned v) {
    const std::string s = std::to_string(v);
    return s.size() == 1 ? "^" + s : "^{" + s + "}";
}

std::string monomial(const XiMonomial& mono, Style style) {
    std::string out;
    for (unsigned r = 1; r <= mono.max_index(); ++r) {
        const unsigned a = mono.exponent(r);
        if (a == 0) {
            continue;
        }
        if (style == Style::Text) {
            out += "ξ" + std::to_string(r);
            if (a > 1) {
                out += superscript(a);
            }
        } else {
            out += "\\xi" + subscript_latex(r);
            if (a > 1) {
                out += power_latex(a);
            }
        }
    }
    return out;
}

std::string derivative(unsigned d, Style style) {
    if (style == Style::Text) {
        switch (d) {
        case 0: return "F(ξ0)";
        case 1: return "F′(ξ0)";
        case 2: return "F″(ξ0)";
        case 3: return "F‴(ξ0)";
        default: return "F⁽" + superscript(d) + "⁾(ξ0)";
        }
    }
    switch (d) {
    case 0: return "F(\\xi_0)";
    case 1: return "F'(\\xi_0)";
    case 2: return "F''(\\xi_0)";
    case 3: return "F'''(\\xi_0)";
    default: return "F^{(" + std::to_string(d) + ")}(\\xi_0)";
    }
}

std::string group(unsigned d, const std::map<XiMonomial, Rational>& terms, Style style) {
    WideInt common = 1;
    for (const auto& [mono, c] : terms) {
        common = lcm(common, c.den());
    }
    std::vector<std::string> parts;
    for (const auto& [mono, c] : terms) {
        const WideInt scaled = checked_mul(c.num(), common / c.den());
        const std::string m = monomial(mono, style);
        std::string coeff = scaled == 1 && !m.empty() ? "" : to_string(scaled);
        parts.push_back(coeff + m);
    }

    std::string out;
    if (common != 1) {
        out += style == Style::Text ? "(1/" + to_string(common) + ")" : "\\frac{1}{" + to_string(common) + "}";
    }
    if (parts.size() == 1) {
        out += parts.front() == "1" ? "" : parts.front();
    } else {
        out += "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) {
                out += style == Style::Text ? " + " : "+";
            }
            out += parts[i];
        }
        out += ")";
    }
    if (!out.empty() && style == Style::Text) {
        out += "·";
    }
    return out + derivative(d, style);
}

std::string render(const UFormula& u, Style style) {
    std::string out = style == Style::Text ? "U_" + std::to_string(u.k) : "U" + subscript_latex(static_cast<unsigned>(u.k));
    out += " = ";
    bool first = true;
    for (const auto& [d, terms] : u.terms) {
        if (terms.empty()) {
            continue;
        }
        if (!first) {
            out += " + ";
        }
        first = false;
        out += group(d, terms, style);
    }
    if (first) {
        out += "0";
    }
    return out;
}

} // namespace

std::string to_text(const UFormula& u) {
    return render(u, Style::Text);
}

std::string to_latex(const UFormula& u) {
    return render(u, Style::Latex);
}

} // namespace biharm
