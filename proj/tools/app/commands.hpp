#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace biharm::app {

// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitValidation = 2,
    kExitDomain = 3,
    kExitVerification = 4,
};

enum class FormulaFormat { Text, Latex };

// Each command writes its report to `out` and returns an exit code; errors
// surface as exceptions (mapped to exit codes by run_cli).
int cmd_basis(const RunConfig& cfg, std::ostream& out);
int cmd_formula(std::size_t k, FormulaFormat format, std::ostream& out);
int cmd_eval(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_paper_check(std::ostream& out);

// Field export in the two interchange formats.
std::string field_to_csv(const Field& field);
std::string field_to_json(const Field& field, const RunConfig& cfg, const BasisTriple& basis);

// Shortest round-trip decimal for a double.
std::string format_double(double v);
std::string format_cx(Cx z);

// Full command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace biharm::app
