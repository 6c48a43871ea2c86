#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "biharm/errors.hpp"

namespace biharm::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("config " + where + ": " + what);
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!ok.contains(key)) {
            fail(where, "unknown key '" + key + "'");
        }
    }
}

double get_number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        fail(where, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        fail(where, "expected a finite number");
    }
    return d;
}

std::size_t get_count(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(where, "expected a non-negative integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

Cx get_cx(const json& v, const std::string& where) {
    if (v.is_number()) {
        return {get_number(v, where), 0.0};
    }
    if (!v.is_array() || v.size() != 2) {
        fail(where, "expected a complex number [re, im]");
    }
    return {get_number(v[0], where + "[0]"), get_number(v[1], where + "[1]")};
}

std::vector<Cx> get_cx_list(const json& v, const std::string& where) {
    if (!v.is_array()) {
        fail(where, "expected a list of complex numbers");
    }
    std::vector<Cx> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_cx(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::array<double, 3> get_triple(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) {
        fail(where, "expected three numbers");
    }
    return {get_number(v[0], where), get_number(v[1], where), get_number(v[2], where)};
}

json cx_json(Cx z) {
    return json::array({z.real(), z.imag()});
}

json cx_list_json(const std::vector<Cx>& zs) {
    json out = json::array();
    for (Cx z : zs) {
        out.push_back(cx_json(z));
    }
    return out;
}

AlgebraSection parse_algebra(const json& j) {
    check_keys(j, "algebra", {"n", "k", "m", "branch", "mode", "free_g", "g_offset"});
    AlgebraSection a;
    if (!j.contains("n") || !j.contains("k") || !j.contains("m")) {
        fail("algebra", "'n', 'k' and 'm' are required");
    }
    a.n = get_count(j["n"], "algebra.n");
    if (a.n == 0) {
        fail("algebra.n", "must be >= 1");
    }
    a.k = get_cx_list(j["k"], "algebra.k");
    a.m = get_cx_list(j["m"], "algebra.m");
    if (j.contains("branch")) {
        if (!j["branch"].is_number_integer() || (j["branch"].get<int>() != 1 && j["branch"].get<int>() != -1)) {
            fail("algebra.branch", "must be 1 or -1");
        }
        a.branch = j["branch"].get<int>();
    }
    if (j.contains("mode")) {
        const json& mode = j["mode"];
        if (mode == "harmonic") {
            a.mode = Mode::Harmonic;
        } else if (mode == "biharmonic") {
            a.mode = Mode::Biharmonic;
        } else {
            fail("algebra.mode", "must be \"harmonic\" or \"biharmonic\"");
        }
    }
    if (j.contains("free_g")) {
        a.free_g = get_cx_list(j["free_g"], "algebra.free_g");
    }
    if (j.contains("g_offset")) {
        a.g_offset = get_cx_list(j["g_offset"], "algebra.g_offset");
        if (a.g_offset->size() != a.n) {
            fail("algebra.g_offset", "must have n entries");
        }
    }
    return a;
}

FunctionSection parse_function(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        fail("function", "'kind' is required");
    }
    FunctionSection f;
    f.kind = j["kind"].get<std::string>();
    if (f.kind == "polynomial") {
        check_keys(j, "function", {"kind", "coefficients"});
    } else if (f.kind == "exp" || f.kind == "sin" || f.kind == "cos") {
        check_keys(j, "function", {"kind", "scale"});
    } else if (f.kind == "power_series") {
        check_keys(j, "function", {"kind", "coefficients", "center", "radius"});
    } else {
        fail("function.kind", "unknown kind '" + f.kind + "'");
    }
    if (j.contains("coefficients")) {
        f.coefficients = get_cx_list(j["coefficients"], "function.coefficients");
    }
    if (j.contains("scale")) {
        f.scale = get_cx(j["scale"], "function.scale");
    }
    if (j.contains("center")) {
        f.center = get_cx(j["center"], "function.center");
    }
    if (j.contains("radius")) {
        f.radius = get_number(j["radius"], "function.radius");
    }
    if ((f.kind == "polynomial" || f.kind == "power_series") && !f.coefficients) {
        fail("function", "'coefficients' is required for kind '" + f.kind + "'");
    }
    if (f.kind == "power_series" && !f.radius) {
        fail("function", "'radius' is required for kind 'power_series'");
    }
    return f;
}

SolutionSection parse_solution(const json& j) {
    check_keys(j, "solution", {"k_index", "k_range", "weights"});
    SolutionSection s;
    if (j.contains("k_index") == j.contains("k_range")) {
        fail("solution", "exactly one of 'k_index' and 'k_range' is required");
    }
    if (j.contains("k_index")) {
        s.k_index = get_count(j["k_index"], "solution.k_index");
        if (j.contains("weights")) {
            fail("solution.weights", "only valid together with 'k_range'");
        }
    } else {
        const json& r = j["k_range"];
        if (!r.is_array() || r.size() != 2) {
            fail("solution.k_range", "expected [first, last]");
        }
        s.k_range = std::array<std::size_t, 2>{get_count(r[0], "solution.k_range[0]"),
                                               get_count(r[1], "solution.k_range[1]")};
        if ((*s.k_range)[1] < (*s.k_range)[0]) {
            fail("solution.k_range", "last must be >= first");
        }
        if (j.contains("weights")) {
            s.weights = get_cx_list(j["weights"], "solution.weights");
            if (s.weights->size() != (*s.k_range)[1] - (*s.k_range)[0] + 1) {
                fail("solution.weights", "needs one weight per index in k_range");
            }
        }
    }
    return s;
}

Grid parse_grid(const json& j) {
    check_keys(j, "grid", {"min", "max", "steps"});
    if (!j.contains("min") || !j.contains("max") || !j.contains("steps")) {
        fail("grid", "'min', 'max' and 'steps' are required");
    }
    Grid g;
    g.min = get_triple(j["min"], "grid.min");
    g.max = get_triple(j["max"], "grid.max");
    const json& s = j["steps"];
    if (!s.is_array() || s.size() != 3) {
        fail("grid.steps", "expected three integers");
    }
    for (std::size_t a = 0; a < 3; ++a) {
        g.steps[a] = get_count(s[a], "grid.steps");
    }
    g.validate();
    return g;
}

VerifySection parse_verify(const json& j) {
    check_keys(j, "verify", {"h", "richardson_levels", "tolerance"});
    VerifySection v;
    if (j.contains("h")) {
        v.h = get_number(j["h"], "verify.h");
    }
    if (j.contains("richardson_levels")) {
        v.richardson_levels = static_cast<unsigned>(get_count(j["richardson_levels"], "verify.richardson_levels"));
    }
    if (j.contains("tolerance")) {
        v.tolerance = get_number(j["tolerance"], "verify.tolerance");
        if (!(v.tolerance > 0.0)) {
            fail("verify.tolerance", "must be positive");
        }
    }
    to_fd_config(v).validate();
    return v;
}

OutputSection parse_output(const json& j) {
    check_keys(j, "output", {"format", "path"});
    OutputSection o;
    if (j.contains("format")) {
        if (j["format"] != "csv" && j["format"] != "json") {
            fail("output.format", "must be \"csv\" or \"json\"");
        }
        o.format = j["format"].get<std::string>();
    }
    if (j.contains("path")) {
        if (!j["path"].is_string()) {
            fail("output.path", "expected a string");
        }
        o.path = j["path"].get<std::string>();
    }
    return o;
}

} // namespace

std::vector<std::size_t> SolutionSection::indices() const {
    if (k_index) {
        return {*k_index};
    }
    std::vector<std::size_t> out;
    for (std::size_t k = (*k_range)[0]; k <= (*k_range)[1]; ++k) {
        out.push_back(k);
    }
    return out;
}

RunConfig parse_config(const json& doc) {
    check_keys(doc, "document", {"algebra", "function", "solution", "grid", "verify", "output"});
    RunConfig cfg;
    if (doc.contains("algebra")) {
        cfg.algebra = parse_algebra(doc["algebra"]);
    }
    if (doc.contains("function")) {
        cfg.function = parse_function(doc["function"]);
    }
    if (doc.contains("solution")) {
        cfg.solution = parse_solution(doc["solution"]);
    }
    if (doc.contains("grid")) {
        cfg.grid = parse_grid(doc["grid"]);
    }
    if (doc.contains("verify")) {
        cfg.verify = parse_verify(doc["verify"]);
    }
    if (doc.contains("output")) {
        cfg.output = parse_output(doc["output"]);
    }
    return cfg;
}

RunConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

json to_json(const RunConfig& cfg) {
    json doc = json::object();
    if (cfg.algebra) {
        const AlgebraSection& a = *cfg.algebra;
        json j = {{"n", a.n}, {"k", cx_list_json(a.k)}, {"m", cx_list_json(a.m)}, {"branch", a.branch},
                  {"mode", to_string(a.mode)}};
        if (a.free_g) {
            j["free_g"] = cx_list_json(*a.free_g);
        }
        if (a.g_offset) {
            j["g_offset"] = cx_list_json(*a.g_offset);
        }
        doc["algebra"] = std::move(j);
    }
    if (cfg.function) {
        const FunctionSection& f = *cfg.function;
        json j = {{"kind", f.kind}};
        if (f.coefficients) {
            j["coefficients"] = cx_list_json(*f.coefficients);
        }
        if (f.scale) {
            j["scale"] = cx_json(*f.scale);
        }
        if (f.center) {
            j["center"] = cx_json(*f.center);
        }
        if (f.radius) {
            j["radius"] = *f.radius;
        }
        doc["function"] = std::move(j);
    }
    if (cfg.solution) {
        const SolutionSection& s = *cfg.solution;
        json j = json::object();
        if (s.k_index) {
            j["k_index"] = *s.k_index;
        }
        if (s.k_range) {
            j["k_range"] = json::array({(*s.k_range)[0], (*s.k_range)[1]});
        }
        if (s.weights) {
            j["weights"] = cx_list_json(*s.weights);
        }
        doc["solution"] = std::move(j);
    }
    if (cfg.grid) {
        const Grid& g = *cfg.grid;
        doc["grid"] = {{"min", g.min}, {"max", g.max}, {"steps", g.steps}};
    }
    if (cfg.verify) {
        const VerifySection& v = *cfg.verify;
        doc["verify"] = {{"h", v.h}, {"richardson_levels", v.richardson_levels}, {"tolerance", v.tolerance}};
    }
    if (cfg.output) {
        json j = {{"format", cfg.output->format}};
        if (cfg.output->path) {
            j["path"] = *cfg.output->path;
        }
        doc["output"] = std::move(j);
    }
    return doc;
}

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError("override '" + assignment + "' must look like section.key=value");
    }
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw;
    }
    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (key.empty()) {
            throw ValidationError("override '" + assignment + "' has an empty key");
        }
        if (!node->is_object()) {
            if (!node->is_null()) {
                throw ValidationError("override '" + assignment + "' descends into a non-object");
            }
            *node = json::object();
        }
        if (dot == std::string::npos) {
            if (value.is_null()) {
                node->erase(key); // key=null removes the key
            } else {
                (*node)[key] = std::move(value);
            }
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

const AlgebraSection& require_algebra(const RunConfig& cfg) {
    if (!cfg.algebra) {
        throw ValidationError("config: the 'algebra' section is required");
    }
    return *cfg.algebra;
}

const FunctionSection& require_function(const RunConfig& cfg) {
    if (!cfg.function) {
        throw ValidationError("config: the 'function' section is required");
    }
    return *cfg.function;
}

const SolutionSection& require_solution(const RunConfig& cfg) {
    if (!cfg.solution) {
        throw ValidationError("config: the 'solution' section is required");
    }
    return *cfg.solution;
}

const Grid& require_grid(const RunConfig& cfg) {
    if (!cfg.grid) {
        throw ValidationError("config: the 'grid' section is required");
    }
    return *cfg.grid;
}

SpectralParams to_params(const AlgebraSection& a) {
    SpectralParams p;
    p.n = a.n;
    p.k = a.k;
    p.m = a.m;
    p.branch = a.branch;
    p.mode = a.mode;
    if (a.free_g) {
        p.free_g = *a.free_g;
    }
    p.validate();
    return p;
}

HolomorphicFn to_function(const FunctionSection& f) {
    const Cx one{1.0, 0.0};
    if (f.kind == "polynomial") {
        return HolomorphicFn::polynomial(f.coefficients.value_or(std::vector<Cx>{}));
    }
    if (f.kind == "exp") {
        return HolomorphicFn::exp(f.scale.value_or(one));
    }
    if (f.kind == "sin") {
        return HolomorphicFn::sin(f.scale.value_or(one));
    }
    if (f.kind == "cos") {
        return HolomorphicFn::cos(f.scale.value_or(one));
    }
    if (f.kind == "power_series") {
        return HolomorphicFn::power_series(f.center.value_or(Cx{}), f.coefficients.value_or(std::vector<Cx>{}),
                                           f.radius.value_or(0.0));
    }
    throw ValidationError("config function.kind: unknown kind '" + f.kind + "'");
}

FDConfig to_fd_config(const VerifySection& v) {
    FDConfig c;
    c.h = v.h;
    c.richardson_levels = v.richardson_levels;
    return c;
}

bool basis_is_perturbed(const AlgebraSection& a) {
    return a.g_offset.has_value();
}

BasisTriple build_basis(const AlgebraSection& a) {
    BasisTriple t = solve_g(to_params(a));
    if (!a.g_offset) {
        return t;
    }
    std::vector<Cx> g(t.g().begin(), t.g().end());
    for (std::size_t r = 0; r < g.size(); ++r) {
        g[r] += (*a.g_offset)[r];
    }
    return make_triple(std::vector<Cx>(t.k().begin(), t.k().end()), std::vector<Cx>(t.m().begin(), t.m().end()),
                       std::move(g), 0);
}

} // namespace biharm::app
