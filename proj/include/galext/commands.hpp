#pragma once

#include "galext/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace galext {

// Command drivers behind the galext executable. Each returns a Report whose
// status decides the exit code (pass 0, fail 1). Invalid input throws a
// galext::Error (mapped to exit 2 by the executable); verification failures
// are recorded in the report instead.

enum class AlgebraCommand { Verify, Cohomology };

Report cmd_algebra(const std::filesystem::path &file, AlgebraCommand command);

struct RealizeOptions
{
    std::string model;
    std::optional<int> spin;
    std::optional<int> rank;
    std::optional<std::string> lambda;
    std::optional<std::string> shift;
    bool strict_table = false;
};

Report cmd_realize(const RealizeOptions &options);

struct FieldcheckOptions
{
    /// conservation, boost, rotation or multispinor-eqs.
    std::string check;
    std::optional<int> index;
    std::optional<int> spin;
    std::optional<int> rank;
    /// corrected (default) or literal.
    std::optional<std::string> variant;
    std::vector<std::string> omit;
};

Report cmd_fieldcheck(const FieldcheckOptions &options);

struct NumcheckOptions
{
    int n_max = 24;
    int low = 8;
    double m = 1.0;
    double t = 0.5;
    std::string model = "schrodinger";
    std::optional<int> spin;
    std::optional<int> rank;
    double tolerance = 1e-9;
};

Report cmd_numcheck(const NumcheckOptions &options);

/// Exit code for a finished report.
int exit_code(const Report &report);

/// File name used under $GALEXT_REPORT_DIR, derived from the command echo.
std::string report_file_name(const std::vector<std::string> &command);

} // namespace galext
