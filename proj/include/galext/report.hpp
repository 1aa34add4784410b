#pragma once

#include <map>
#include <string>
#include <vector>

namespace galext {

inline constexpr const char *kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Info };

std::string to_string(CheckStatus status);
CheckStatus parse_status(const std::string &text);

struct CheckRecord
{
    std::string name;
    /// Short statement of the claim being checked.
    std::string claim;
    CheckStatus status = CheckStatus::Info;
    /// Residual rendering; "0" when exact.
    std::string residual;
    /// Extracted quantities (kappa, mass, h2, ...) and notes, rendered as text.
    std::map<std::string, std::string> values;

    friend bool operator==(const CheckRecord &, const CheckRecord &) = default;
};

/**
 * Result of one CLI command. The machine-readable form is JSON following
 * docs/report.schema.json; it carries no timestamps, so identical inputs give
 * byte-identical output.
 */
struct Report
{
    std::string tool_version = kToolVersion;
    std::vector<std::string> command;
    std::vector<CheckRecord> checks;

    /// Pass unless some check failed; informational checks do not count.
    CheckStatus status() const;

    friend bool operator==(const Report &, const Report &) = default;
};

std::string emit_json(const Report &report);
/// Throws ParseError on malformed or schema-violating input.
Report parse_report(const std::string &text);
std::string render_human(const Report &report);

} // namespace galext
