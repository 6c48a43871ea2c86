#pragma once

// The run configuration document that drives every command.
//
// {
//   "algebra":  {"n": 3, "k": [[1,0],[1,0],[0,0]], "m": [...], "branch": 1,
//                "mode": "harmonic" | "biharmonic", "free_g": [...], "g_offset": [...]},
//   "function": {"kind": "polynomial" | "exp" | "sin" | "cos" | "power_series",
//                "coefficients": [...], "scale": [re,im], "center": [re,im], "radius": 1.0},
//   "solution": {"k_index": 2} | {"k_range": [0, 2], "weights": [...]},
//   "grid":     {"min": [x,y,z], "max": [x,y,z], "steps": [nx,ny,nz]},
//   "verify":   {"h": 0.01, "richardson_levels": 2, "tolerance": 1e-4},
//   "output":   {"format": "csv" | "json", "path": "out.csv"}
// }
//
// Complex numbers are [re, im] pairs; a bare number is accepted as a real value.
// g_offset is added to the solved g after solving (a diagnostic for
// deliberately broken bases); it disables the biharmonicity guard.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "biharm/characteristic.hpp"
#include "biharm/holo.hpp"
#include "biharm/solutions.hpp"
#include "biharm/verify.hpp"

namespace biharm::app {

struct AlgebraSection {
    std::size_t n = 1;
    std::vector<Cx> k;
    std::vector<Cx> m;
    int branch = 1;
    Mode mode = Mode::Biharmonic;
    std::optional<std::vector<Cx>> free_g;
    std::optional<std::vector<Cx>> g_offset;

    friend bool operator==(const AlgebraSection&, const AlgebraSection&) = default;
};

struct FunctionSection {
    std::string kind = "polynomial";
    std::optional<std::vector<Cx>> coefficients;
    std::optional<Cx> scale;
    std::optional<Cx> center;
    std::optional<double> radius;

    friend bool operator==(const FunctionSection&, const FunctionSection&) = default;
};

struct SolutionSection {
    std::optional<std::size_t> k_index;
    std::optional<std::array<std::size_t, 2>> k_range;
    std::optional<std::vector<Cx>> weights;

    std::vector<std::size_t> indices() const;

    friend bool operator==(const SolutionSection&, const SolutionSection&) = default;
};

struct VerifySection {
    double h = 1e-2;
    unsigned richardson_levels = 2;
    double tolerance = 1e-4;

    friend bool operator==(const VerifySection&, const VerifySection&) = default;
};

struct OutputSection {
    std::string format = "csv";
    std::optional<std::string> path;

    friend bool operator==(const OutputSection&, const OutputSection&) = default;
};

struct RunConfig {
    std::optional<AlgebraSection> algebra;
    std::optional<FunctionSection> function;
    std::optional<SolutionSection> solution;
    std::optional<Grid> grid;
    std::optional<VerifySection> verify;
    std::optional<OutputSection> output;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Schema validation; unknown keys and wrong types raise ValidationError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& cfg);

// "a.b.c=value": value is parsed as JSON, falling back to a plain string.
// "a.b.c=null" removes the key.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Section accessors: ValidationError when a command needs a missing section.
const AlgebraSection& require_algebra(const RunConfig& cfg);
const FunctionSection& require_function(const RunConfig& cfg);
const SolutionSection& require_solution(const RunConfig& cfg);
const Grid& require_grid(const RunConfig& cfg);

SpectralParams to_params(const AlgebraSection& a);
HolomorphicFn to_function(const FunctionSection& f);
FDConfig to_fd_config(const VerifySection& v);

// Solved basis, with g_offset applied when present.
BasisTriple build_basis(const AlgebraSection& a);
bool basis_is_perturbed(const AlgebraSection& a);

} // namespace biharm::app
