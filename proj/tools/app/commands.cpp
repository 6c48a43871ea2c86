#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "biharm/errors.hpp"
#include "biharm/resolvent.hpp"
#include "reference_tables.hpp"

namespace biharm::app {

namespace {

using nlohmann::json;

json cx_json(Cx z) {
    return json::array({z.real(), z.imag()});
}

json cx_list_json(std::span<const Cx> zs) {
    json arr = json::array();
    for (Cx z : zs) {
        arr.push_back(cx_json(z));
    }
    return arr;
}

void print_sequence(std::ostream& out, const std::string& name, std::span<const Cx> values) {
    for (std::size_t r = 0; r < values.size(); ++r) {
        out << "  " << name << '_' << r << " = " << format_cx(values[r]) << '\n';
    }
}

std::vector<Point3> verify_points(const RunConfig& cfg) {
    if (!cfg.grid) {
        return {Point3{0.0, 0.0, 0.0}};
    }
    cfg.grid->validate();
    std::vector<Point3> pts;
    pts.reserve(cfg.grid->size());
    for (std::size_t i = 0; i < cfg.grid->size(); ++i) {
        pts.push_back(cfg.grid->point(i));
    }
    return pts;
}

void write_output(const RunConfig& cfg, const std::string& payload, std::ostream& out, const std::string& what) {
    if (cfg.output && cfg.output->path) {
        std::ofstream file(*cfg.output->path, std::ios::binary);
        if (!file) {
            throw ValidationError("cannot open output path '" + *cfg.output->path + "' for writing");
        }
        file << payload;
        if (!file) {
            throw std::runtime_error("write to '" + *cfg.output->path + "' failed");
        }
        out << "wrote " << what << " to " << *cfg.output->path << '\n';
    } else {
        out << payload;
    }
}

std::string verdict(const SymbolicCheck& c) {
    std::ostringstream os;
    os << (c.is_zero() ? "zero" : "NONZERO") << " (max coeff " << format_double(c.max_coeff) << ", reference "
       << format_double(c.reference) << ")";
    return os.str();
}

void closed_form_section(std::ostream& out, const std::string& label, const SpectralParams& p) {
    const ClosedFormReport rep = closed_form_check(p);
    out << "-- " << label << '\n';
    out << "  k = (";
    for (std::size_t i = 0; i < p.n; ++i) {
        out << (i ? ", " : "") << format_cx(p.k[i]);
    }
    out << "), m = (";
    for (std::size_t i = 0; i < p.n; ++i) {
        out << (i ? ", " : "") << format_cx(p.m[i]);
    }
    out << "), branch = " << (p.branch > 0 ? "+1" : "-1") << ", mode = " << to_string(p.mode) << '\n';
    out << "  g_0                          = " << format_cx(rep.g0) << '\n';
    out << "  g_1 closed form              = " << format_cx(rep.g1_closed) << '\n';
    out << "  g_1 first principles (W_1=0) = " << format_cx(rep.g1_solved) << '\n';
    out << "  g_1: " << (rep.g1_agrees ? "agree" : "disagree") << '\n';
    out << "  g_2 closed form              = " << format_cx(rep.g2_closed) << '\n';
    out << "  g_2 first principles (W_2=0) = " << format_cx(rep.g2_solved) << '\n';
    out << "  g_2: " << (rep.g2_agrees ? "agree" : "disagree") << '\n';
    out << "  W_1 of closed-form triple    = " << format_cx(rep.w1_closed) << (rep.w1_closed_zero ? " (zero)" : " (nonzero)")
        << '\n';
    out << "  char_residual, closed-form triple:\n";
    print_sequence(out, "  R", rep.residual_closed);
    out << "  char_residual, first-principles triple:\n";
    print_sequence(out, "  R", rep.residual_solved);

    const HolomorphicFn quartic = HolomorphicFn::polynomial({0.0, 0.0, 0.0, 0.0, 1.0});
    out << "  Delta^2 oracle, F = t^4:\n";
    for (std::size_t k = 1; k <= 2; ++k) {
        const SolutionSpec closed(rep.closed_triple, quartic, k, true);
        const SolutionSpec solved(rep.solved_triple, quartic, k);
        out << "    U_" << k << " closed form:      " << verdict(check_biharmonic_sym(closed)) << '\n';
        out << "    U_" << k << " first principles: " << verdict(check_biharmonic_sym(solved)) << '\n';
    }
}

} // namespace

std::string format_double(double v) {
    if (v == 0.0) {
        return "0"; // folds -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_cx(Cx z) {
    std::string s = format_double(z.real());
    const double im = z.imag();
    if (im < 0.0) {
        s += "-" + format_double(-im);
    } else {
        s += "+" + format_double(im);
    }
    return s + "i";
}

std::string field_to_csv(const Field& field) {
    std::string out = "x,y,z,re,im\n";
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        const Point3 p = field.grid.point(i);
        out += format_double(p.x) + ',' + format_double(p.y) + ',' + format_double(p.z) + ',' +
               format_double(field.values[i].real()) + ',' + format_double(field.values[i].imag()) + '\n';
    }
    return out;
}

std::string field_to_json(const Field& field, const RunConfig& cfg, const BasisTriple& basis) {
    json doc;
    doc["config"] = to_json(cfg);
    doc["basis"] = {{"g", cx_list_json(basis.g())}, {"constrained_count", basis.constrained}};
    doc["grid"] = {{"min", field.grid.min}, {"max", field.grid.max}, {"steps", field.grid.steps}};
    doc["columns"] = {"re", "im"};
    doc["order"] = "z fastest";
    doc["values"] = cx_list_json(field.values);
    return doc.dump(2) + "\n";
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
    const AlgebraSection& a = require_algebra(cfg);
    const BasisTriple t = build_basis(a);
    const std::size_t c = constrained_count(a.n, a.mode);
    out << "mode: " << to_string(a.mode) << ", n = " << a.n << '\n';
    out << "g:\n";
    print_sequence(out, "g", t.g());
    out << "constrained_count = " << c << (basis_is_perturbed(a) ? " (g_offset applied)" : "") << '\n';
    out << "W:\n";
    print_sequence(out, "W", w_coefficients(t.k(), t.m(), t.g()));
    out << "char_residual:\n";
    print_sequence(out, "R", char_residual(t));
    const bool agree = residual_routes_agree(t);
    out << "expanded route gap = " << format_double(residual_route_gap(t)) << (agree ? " (agree)" : " (DISAGREE)")
        << '\n';
    const bool ok = residual_passes(t) && agree;
    out << "residual: " << (ok ? "pass" : "FAIL") << '\n';
    return ok ? kExitOk : kExitVerification;
}

int cmd_formula(std::size_t k, FormulaFormat format, std::ostream& out) {
    const UFormula u = u_formula(k);
    out << (format == FormulaFormat::Latex ? to_latex(u) : to_text(u)) << '\n';
    return kExitOk;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
    const AlgebraSection& a = require_algebra(cfg);
    const HolomorphicFn f = to_function(require_function(cfg));
    const SolutionSection& sol = require_solution(cfg);
    const Grid& grid = require_grid(cfg);
    grid.validate();
    const BasisTriple basis = build_basis(a);
    const bool unchecked = basis_is_perturbed(a);
    const std::string format = cfg.output ? cfg.output->format : "csv";

    Field field;
    if (sol.k_index) {
        field = grid_eval(SolutionSpec(basis, f, *sol.k_index, unchecked), grid);
    } else {
        const std::vector<std::size_t> idx = sol.indices();
        std::vector<WeightedSpec> members;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const Cx w = sol.weights ? sol.weights->at(i) : Cx{1.0, 0.0};
            members.push_back(WeightedSpec{w, SolutionSpec(basis, f, idx[i], unchecked)});
        }
        field = grid_eval(Superposition(std::move(members)), grid);
    }
    const std::string payload = format == "json" ? field_to_json(field, cfg, basis) : field_to_csv(field);
    write_output(cfg, payload, out, std::to_string(field.values.size()) + " points (" + format + ")");
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const AlgebraSection& a = require_algebra(cfg);
    const HolomorphicFn f = to_function(require_function(cfg));
    const SolutionSection& sol = require_solution(cfg);
    const VerifySection v = cfg.verify.value_or(VerifySection{});
    const FDConfig fd = to_fd_config(v);
    const BasisTriple basis = build_basis(a);
    const bool unchecked = basis_is_perturbed(a);
    const std::vector<Point3> pts = verify_points(cfg);

    json records = json::array();
    bool all = true;
    for (std::size_t k : sol.indices()) {
        const SolutionSpec spec(basis, f, k, unchecked);
        const std::string id = "U_" + std::to_string(k);
        const VerificationRecord r = verify_spec(spec, a.mode, id, pts, fd, v.tolerance);
        all = all && r.passed;
        out << id << " [" << to_string(r.mode) << "]";
        if (r.symbolic_zero) {
            out << " symbolic_zero=" << (*r.symbolic_zero ? "true" : "false") << " max_coeff="
                << format_double(r.max_coeff) << " reference=" << format_double(r.reference_coeff);
        } else {
            out << " symbolic=n/a";
        }
        const double norm = r.fd_scale > 0.0 ? r.fd_residual / r.fd_scale : r.fd_residual;
        out << " fd_residual=" << format_double(r.fd_residual) << " fd_scale=" << format_double(r.fd_scale)
            << " normalized=" << format_double(norm) << " harmonic_zero=" << (r.harmonic_zero ? "true" : "false")
            << " -> " << (r.passed ? "PASS" : "FAIL") << '\n';
        records.push_back({
            {"spec_id", r.id},
            {"mode", to_string(r.mode)},
            {"symbolic_zero", r.symbolic_zero ? json(*r.symbolic_zero) : json(nullptr)},
            {"max_coeff", r.max_coeff},
            {"reference_coeff", r.reference_coeff},
            {"fd_residual", r.fd_residual},
            {"fd_scale", r.fd_scale},
            {"harmonic_zero", r.harmonic_zero},
            {"passed", r.passed},
        });
    }
    const json doc = {{"records", records}, {"points", pts.size()}, {"tolerance", v.tolerance}, {"passed", all}};
    write_output(cfg, doc.dump(2) + "\n", out, "verification report");
    out << "verification: " << (all ? "PASS" : "FAIL") << '\n';
    return all ? kExitOk : kExitVerification;
}

int cmd_paper_check(std::ostream& out) {
    out << "== resolvent coefficients A_1 .. A_6 against reference table ==\n";
    std::vector<std::string> diffs;
    for (const PoleExpansion& expected : reference_resolvent_table()) {
        const PoleExpansion actual = resolvent_coeffs(expected.k);
        const auto d = diff_pole_expansions(expected, actual);
        out << "A_" << expected.k << ": " << (d.empty() ? "match" : "MISMATCH") << '\n';
        diffs.insert(diffs.end(), d.begin(), d.end());
    }
    if (diffs.empty()) {
        out << "diff: empty\n";
    } else {
        for (const auto& d : diffs) {
            out << "diff: " << d << '\n';
        }
    }

    out << "\n== closed-form g_1, g_2 against first-principles solve ==\n";
    // Harmonic mode so that g_2 is also fixed by W_2 = 0 at n = 3.
    const std::vector<Cx> zero3(3, Cx{0.0, 0.0});
    closed_form_section(out, "sample 1", SpectralParams{3, {1.0, 1.0, 0.0}, zero3, 1, Mode::Harmonic, {}});
    closed_form_section(out, "sample 2", SpectralParams{3, {1.0, 0.0, 0.0}, zero3, 1, Mode::Harmonic, {}});
    closed_form_section(out, "sample 3",
                        SpectralParams{3, {Cx{0.8, 0.1}, Cx{0.3, -0.2}, Cx{-0.1, 0.4}},
                                       {Cx{0.2, 0.3}, Cx{-0.5, 0.1}, Cx{0.25, 0.0}}, -1, Mode::Harmonic, {}});
    return diffs.empty() ? kExitOk : kExitVerification;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"biharm: exact polynomial and holomorphic solutions of the 3D biharmonic equation", "biharm"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 internal error, 2 validation error, 3 domain error, 4 verification failure.");

    std::string config_path;
    std::vector<std::string> overrides;
    auto add_config = [&](CLI::App* sub) {
        sub->add_option("-c,--config", config_path, "run configuration (JSON)");
        sub->add_option("--set", overrides, "override a config key, e.g. --set grid.steps=[5,5,5]");
    };

    CLI::App* basis = app.add_subcommand("basis", "solve the characteristic equation and print the basis triple");
    add_config(basis);
    std::size_t k = 0;
    std::string format = "text";
    CLI::App* formula = app.add_subcommand("formula", "print the closed formula for U_k");
    formula->add_option("-k,--k", k, "solution index (0..24)")->required();
    formula->add_option("--format", format, "text or latex")->check(CLI::IsMember({"text", "latex"}));
    CLI::App* eval = app.add_subcommand("eval", "evaluate U_k (or a superposition) on a grid, CSV or JSON");
    add_config(eval);
    CLI::App* verify = app.add_subcommand("verify", "check the biharmonic residual symbolically and by finite differences");
    add_config(verify);
    CLI::App* check = app.add_subcommand("paper-check", "regenerate reference tables and report closed-form discrepancies");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    auto load = [&]() {
        json doc = json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw ValidationError("cannot read config file '" + config_path + "'");
            }
            try {
                doc = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ValidationError("config '" + config_path + "' is not valid JSON: " + e.what());
            }
        }
        for (const auto& o : overrides) {
            apply_override(doc, o);
        }
        return parse_config(doc);
    };

    try {
        if (basis->parsed()) {
            return cmd_basis(load(), out);
        }
        if (formula->parsed()) {
            return cmd_formula(k, format == "latex" ? FormulaFormat::Latex : FormulaFormat::Text, out);
        }
        if (eval->parsed()) {
            return cmd_eval(load(), out);
        }
        if (verify->parsed()) {
            return cmd_verify(load(), out);
        }
        if (check->parsed()) {
            return cmd_paper_check(out);
        }
        return kExitInternal;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace biharm::app
