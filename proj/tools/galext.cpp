/**
 * galext command-line driver.
 *
 * Commands:
 *   algebra verify|cohomology FILE      Jacobi check or H2 of an algebra file
 *   realize MODEL [flags]               build generators and verify the bracket table
 *   fieldcheck CHECK [flags]            conservation, boost, rotation, multispinor-eqs
 *   numcheck [flags]                    truncated oscillator cross-check
 *
 * Exit codes: 0 pass, 1 verification failure, 2 input error.
 * --json prints the machine-readable report (docs/report.schema.json).
 * GALEXT_REPORT_DIR, when set, also receives the JSON report as a file.
 */

#include "galext/commands.hpp"
#include "galext/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

int write_report_file(const galext::Report &report)
{
    const char *dir = std::getenv("GALEXT_REPORT_DIR");
    if (dir == nullptr || *dir == '\0')
        return 0;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path path = std::filesystem::path(dir) / galext::report_file_name(report.command);
    std::ofstream out(path, std::ios::binary);
    out << galext::emit_json(report);
    if (!out) {
        std::cerr << "galext: error: cannot write " << path.string() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact checks of Galilean central extensions and their spinor realizations", "galext"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print the JSON report instead of the text summary");

    std::string algebra_action;
    std::string algebra_file;
    CLI::App *algebra = app.add_subcommand("algebra", "Check an algebra file");
    algebra->add_option("action", algebra_action, "verify or cohomology")
        ->required()
        ->check(CLI::IsMember({"verify", "cohomology"}));
    algebra->add_option("file", algebra_file, "Algebra file")->required();

    galext::RealizeOptions realize_opts;
    CLI::App *realize = app.add_subcommand("realize", "Build a realization and verify the bracket table");
    realize->add_option("model", realize_opts.model, "schrodinger, levyleblond or multispinor")
        ->required()
        ->check(CLI::IsMember({"schrodinger", "levyleblond", "multispinor"}));
    realize->add_option("--spin-s", realize_opts.spin, "Spin label, +1 or -1");
    realize->add_option("--rank", realize_opts.rank, "Multispinor rank N, 1..4");
    realize->add_option("--lambda", realize_opts.lambda, "Constant added to J (polynomial text)");
    realize->add_option("--shift", realize_opts.shift, "Boost redefinition parameter c (polynomial text)");
    realize->add_flag("--strict-paper-table", realize_opts.strict_table,
                      "Also verify against the table as printed, with [K_i,H]=0");

    galext::FieldcheckOptions field_opts;
    CLI::App *fieldcheck = app.add_subcommand("fieldcheck", "Field-equation checks");
    fieldcheck->add_option("check", field_opts.check, "conservation, boost, rotation or multispinor-eqs")
        ->required()
        ->check(CLI::IsMember({"conservation", "boost", "rotation", "multispinor-eqs"}));
    fieldcheck->add_option("--index", field_opts.index, "Free index i of the conservation law, 1 or 2");
    fieldcheck->add_option("--spin-s", field_opts.spin, "Spin label, +1 or -1 (default: both)");
    fieldcheck->add_option("--rank", field_opts.rank, "Multispinor rank N, 1..4 (default: all)");
    fieldcheck->add_option("--variant", field_opts.variant, "corrected or literal conservation law");
    fieldcheck->add_option("--omit", field_opts.omit, "Drop a conservation-law term by label")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    galext::NumcheckOptions num_opts;
    CLI::App *numcheck = app.add_subcommand("numcheck", "Truncated oscillator cross-check of the bracket table");
    numcheck->add_option("--nmax", num_opts.n_max, "Levels per axis")->capture_default_str();
    numcheck->add_option("--low", num_opts.low, "Low-mode projector cutoff")->capture_default_str();
    numcheck->add_option("--m", num_opts.m, "Mass")->capture_default_str();
    numcheck->add_option("--t", num_opts.t, "Time")->capture_default_str();
    numcheck->add_option("--model", num_opts.model, "schrodinger, levyleblond or multispinor")
        ->capture_default_str();
    numcheck->add_option("--spin-s", num_opts.spin, "Spin label, +1 or -1");
    numcheck->add_option("--rank", num_opts.rank, "Multispinor rank N, 1..4");
    numcheck->add_option("--tol", num_opts.tolerance, "Projected residual tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    galext::Report report;
    try {
        if (algebra->parsed())
            report = galext::cmd_algebra(algebra_file, algebra_action == "verify" ? galext::AlgebraCommand::Verify
                                                                                 : galext::AlgebraCommand::Cohomology);
        else if (realize->parsed())
            report = galext::cmd_realize(realize_opts);
        else if (fieldcheck->parsed())
            report = galext::cmd_fieldcheck(field_opts);
        else
            report = galext::cmd_numcheck(num_opts);
    } catch (const galext::Error &e) {
        std::cerr << "galext: error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "galext: error: " << e.what() << "\n";
        return 2;
    }

    report.command.assign(argv + 1, argv + argc);
    std::cout << (json ? galext::emit_json(report) : galext::render_human(report));
    if (int rc = write_report_file(report); rc != 0)
        return rc;
    return galext::exit_code(report);
}
