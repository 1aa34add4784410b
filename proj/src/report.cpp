#include "galext/report.hpp"

#include "galext/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace galext {

using nlohmann::json;

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Info:
        return "info";
    }
    return "info";
}

CheckStatus parse_status(const std::string &text)
{
    if (text == "pass")
        return CheckStatus::Pass;
    if (text == "fail")
        return CheckStatus::Fail;
    if (text == "info")
        return CheckStatus::Info;
    throw ParseError(1, 1, "unknown status '" + text + "'");
}

CheckStatus Report::status() const
{
    for (const auto &c : checks)
        if (c.status == CheckStatus::Fail)
            return CheckStatus::Fail;
    return CheckStatus::Pass;
}

std::string emit_json(const Report &report)
{
    json checks = json::array();
    for (const auto &c : report.checks)
        checks.push_back({{"name", c.name},
                          {"claim", c.claim},
                          {"status", to_string(c.status)},
                          {"residual", c.residual},
                          {"values", c.values}});
    json doc = {{"tool_version", report.tool_version},
                {"command", report.command},
                {"checks", checks},
                {"status", to_string(report.status())}};
    return doc.dump(2) + "\n";
}

Report parse_report(const std::string &text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(1, e.byte, e.what());
    }
    try {
        Report r;
        r.tool_version = doc.at("tool_version").get<std::string>();
        r.command = doc.at("command").get<std::vector<std::string>>();
        for (const auto &c : doc.at("checks")) {
            CheckRecord rec;
            rec.name = c.at("name").get<std::string>();
            rec.claim = c.at("claim").get<std::string>();
            rec.status = parse_status(c.at("status").get<std::string>());
            rec.residual = c.at("residual").get<std::string>();
            rec.values = c.at("values").get<std::map<std::string, std::string>>();
            r.checks.push_back(std::move(rec));
        }
        if (doc.at("status").get<std::string>() != to_string(r.status()))
            throw ParseError(1, 1, "overall status disagrees with the checks");
        return r;
    } catch (const json::exception &e) {
        throw ParseError(1, 1, std::string("report does not match the schema: ") + e.what());
    }
}

std::string render_human(const Report &report)
{
    std::ostringstream os;
    os << "galext " << report.tool_version << ":";
    for (const auto &arg : report.command)
        os << " " << arg;
    os << "\n";
    for (const auto &c : report.checks) {
        std::string tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "INFO";
        os << "  [" << tag << "] " << c.name;
        if (!c.claim.empty())
            os << " -- " << c.claim;
        os << "\n";
        if (!c.residual.empty())
            os << "      residual: " << c.residual << "\n";
        for (const auto &[key, value] : c.values)
            os << "      " << key << ": " << value << "\n";
    }
    os << "status: " << to_string(report.status()) << "\n";
    return os.str();
}

} // namespace galext
