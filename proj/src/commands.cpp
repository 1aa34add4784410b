#include "galext/commands.hpp"

#include "galext/algebra_file.hpp"
#include "galext/fieldcheck.hpp"
#include "galext/galrealize.hpp"
#include "galext/numtrunc.hpp"

#include <cmath>
#include <cstdio>

namespace galext {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string signed_label(int s) { return s > 0 ? "+1" : "-1"; }

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckStatus status_of(bool pass) { return pass ? CheckStatus::Pass : CheckStatus::Fail; }

std::vector<int> spins_or_both(const std::optional<int> &spin)
{
    if (!spin)
        return {1, -1};
    if (*spin != 1 && *spin != -1)
        throw BadSpin("--spin-s must be +1 or -1");
    return {*spin};
}

std::string render_beta(const LieAlgebraSpec &a, const ScalarMatrix &beta)
{
    std::string out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!beta[i][j].is_zero()) {
                if (!out.empty())
                    out += ", ";
                out += "beta(" + a.names()[i] + "," + a.names()[j] + ")=" + beta[i][j].str();
            }
    return out.empty() ? "0" : out;
}

void append_rows(Report &report, const StructureReport &s, const std::string &prefix)
{
    for (const auto &row : s.rows) {
        CheckRecord rec;
        rec.name = prefix + "[" + row.lhs_a + "," + row.lhs_b + "]";
        rec.claim = "[" + row.lhs_a + "," + row.lhs_b + "] = " + row.expected_text;
        rec.status = status_of(row.pass);
        rec.residual = row.residual.str();
        if (!row.pass)
            rec.values["computed"] = row.computed.str();
        if (!row.note.empty())
            rec.values["note"] = row.note;
        report.checks.push_back(std::move(rec));
    }
}

GeneratorSet build_model(const RealizeOptions &o)
{
    if (o.model == "schrodinger") {
        if (o.spin || o.rank)
            throw BadParameter("schrodinger takes neither --spin-s nor --rank");
        return realize_schrodinger();
    }
    if (o.model == "levyleblond") {
        if (o.rank)
            throw BadParameter("levyleblond takes no --rank");
        return realize_levyleblond(o.spin.value_or(1));
    }
    if (o.model == "multispinor")
        return realize_multispinor(o.spin.value_or(1), o.rank.value_or(1));
    throw BadParameter("unknown model '" + o.model + "'");
}

void realize_checks(Report &report, const GeneratorSet &g, const StructureReport &s)
{
    CheckRecord kappa{"kappa", "[K1,K2] = i kappa Id with kappa a constant", CheckStatus::Pass, "0", {}};
    if (s.kappa) {
        kappa.values["kappa"] = s.kappa->str();
    } else {
        kappa.status = CheckStatus::Fail;
        kappa.residual = bracket(g["K1"], g["K2"]).str();
        kappa.values["note"] = "[K1,K2] is not a constant multiple of the identity";
    }
    report.checks.push_back(std::move(kappa));

    CheckRecord mass{"mass", "[K_i,P_i] = i M with M = m", CheckStatus::Pass, "0", {}};
    mass.values["M"] = s.mass ? s.mass->str() : "?";
    report.checks.push_back(std::move(mass));

    TripleJacobiResult tj = triple_jacobi(g);
    CheckRecord jac{"triple-jacobi", "cyclic double brackets vanish on all generator triples",
                    status_of(tj.failures.empty()), tj.failures.empty() ? "0" : "nonzero", {}};
    jac.values["triples"] = std::to_string(tj.triples_checked);
    if (!tj.failures.empty()) {
        std::string list;
        for (const auto &f : tj.failures)
            list += (list.empty() ? "" : " ") + ("(" + f[0] + "," + f[1] + "," + f[2] + ")");
        jac.values["failures"] = list;
    }
    report.checks.push_back(std::move(jac));
}

LawVariant parse_variant(const std::string &text)
{
    if (text == "corrected")
        return LawVariant::Corrected;
    if (text == "literal")
        return LawVariant::Literal;
    throw BadParameter("--variant must be 'corrected' or 'literal'");
}

} // namespace

Report cmd_algebra(const std::filesystem::path &file, AlgebraCommand command)
{
    LieAlgebraSpec a = load_algebra(file);
    Report report;
    JacobiResult j = jacobi_check(a);
    CheckRecord jac{"jacobi", "structure constants satisfy the Jacobi identity", status_of(j.ok),
                    j.ok ? "0" : j.value.str(), {}};
    jac.values["generators"] = std::to_string(a.dim());
    if (j.offending) {
        const auto &o = *j.offending;
        jac.values["triple"] = a.names()[o[0]] + "," + a.names()[o[1]] + "," + a.names()[o[2]];
        jac.values["component"] = a.names()[o[3]];
    }
    report.checks.push_back(std::move(jac));
    if (command == AlgebraCommand::Verify || !j.ok)
        return report;

    ExtensionSpace e = central_extensions(a);
    CheckRecord coh{"cohomology", "dimension of the central-extension space H2",
                    status_of(e.h2 == e.h2_cross_check), "0", {}};
    coh.values["cocycles"] = std::to_string(e.cocycle_dim);
    coh.values["coboundaries"] = std::to_string(e.coboundary_dim);
    coh.values["h2"] = std::to_string(e.h2);
    coh.values["h2_reverse_order"] = std::to_string(e.h2_cross_check);
    for (std::size_t k = 0; k < e.representatives.size(); ++k)
        coh.values["class_" + std::to_string(k + 1)] = render_beta(a, e.representatives[k]);
    report.checks.push_back(std::move(coh));
    return report;
}

Report cmd_realize(const RealizeOptions &o)
{
    GeneratorSet g = build_model(o);
    if (o.lambda)
        g = extend_lambda(g, parse_poly(g.registry(), *o.lambda));
    if (o.shift)
        g = kappa_shift(g, parse_poly(g.registry(), *o.shift));

    Report report;
    CheckRecord model{"model", "generators built", CheckStatus::Info, "", {}};
    model.values["model"] = g.meta().model;
    if (g.meta().spin)
        model.values["s"] = signed_label(*g.meta().spin);
    if (g.meta().model == "multispinor")
        model.values["rank"] = std::to_string(g.meta().rank);
    model.values["lambda"] = g.meta().lambda.str();
    model.values["shift"] = g.meta().shift.str();
    model.values["components"] = std::to_string(g.dim());
    report.checks.push_back(std::move(model));

    StructureReport corrected = verify_structure(g, corrected_table());
    if (!o.strict_table) {
        append_rows(report, corrected, "");
        realize_checks(report, g, corrected);
        return report;
    }

    StructureReport literal = verify_structure(g, literal_table());
    append_rows(report, literal, "literal ");
    append_rows(report, corrected, "corrected ");
    realize_checks(report, g, corrected);

    std::string failing;
    for (std::size_t k = 0; k < literal.rows.size(); ++k)
        if (!literal.rows[k].pass && corrected.rows[k].pass)
            failing += (failing.empty() ? "" : " ") + ("[" + literal.rows[k].lhs_a + "," + literal.rows[k].lhs_b + "]");
    CheckRecord flag{"table-discrepancy", "the printed table agrees with the realization on every row",
                     status_of(failing.empty()), "", {}};
    if (!failing.empty()) {
        flag.residual = "rows disagree";
        flag.values["rows"] = failing;
        flag.values["note"] = "printed [K_i,H]=0 contradicts the realization, which gives [K_i,H]=i P_i; "
                              "the corrected table passes these rows";
    }
    report.checks.push_back(std::move(flag));
    return report;
}

Report cmd_fieldcheck(const FieldcheckOptions &o)
{
    const bool conservation = o.check == "conservation";
    if (!conservation && (o.index || o.variant || !o.omit.empty()))
        throw BadParameter("--index, --variant and --omit apply to conservation only");
    if (o.check != "multispinor-eqs" && o.rank)
        throw BadParameter("--rank applies to multispinor-eqs only");
    std::vector<int> spins = spins_or_both(o.spin);

    Report report;
    if (conservation) {
        LawVariant variant = parse_variant(o.variant.value_or("corrected"));
        std::vector<int> indices{1, 2};
        if (o.index) {
            if (*o.index != 1 && *o.index != 2)
                throw IndexError("--index must be 1 or 2");
            indices = {*o.index};
        }
        ConservationLaw law = default_conservation_law();
        for (const auto &label : o.omit) {
            bool known = false;
            for (const auto &t : law.terms)
                known = known || t.label == label;
            if (!known)
                throw BadParameter("unknown term label '" + label + "'");
        }
        for (int i : indices)
            for (int s : spins) {
                FieldPoly r = check_conservation(law, i, s, variant, o.omit);
                CheckRecord rec{"conservation i=" + std::to_string(i) + " s=" + signed_label(s),
                                "divergence of the spin current vanishes on shell", status_of(r.is_zero()),
                                r.str(), {}};
                rec.values["variant"] = o.variant.value_or("corrected");
                if (!o.omit.empty()) {
                    std::string list;
                    for (const auto &l : o.omit)
                        list += (list.empty() ? "" : " ") + l;
                    rec.values["omitted"] = list;
                }
                report.checks.push_back(std::move(rec));
            }
    } else if (o.check == "boost") {
        for (int s : spins) {
            CheckRecord rec{"boost s=" + signed_label(s), "S^-1 G' S = Lambda(v) G for a constant Lambda(v)",
                            CheckStatus::Fail, "", {}};
            try {
                BoostCovariance b = check_boost_covariance(s);
                rec.status = status_of(b.identity_at_zero && b.round_trip);
                rec.residual = "0";
                rec.values["lambda"] = b.lambda.str();
                rec.values["convention"] = b.convention;
                rec.values["identity_at_zero"] = yes_no(b.identity_at_zero);
                rec.values["round_trip"] = yes_no(b.round_trip);
                rec.values["degree_in_v"] = std::to_string(b.degree_in_v);
            } catch (const CovarianceFailure &e) {
                rec.residual = "unsolvable";
                rec.values["note"] = e.what();
            }
            report.checks.push_back(std::move(rec));
        }
    } else if (o.check == "rotation") {
        for (int s : spins) {
            CheckRecord rec{"rotation s=" + signed_label(s), "[G, J] = Lambda_J G for a constant Lambda_J",
                            CheckStatus::Fail, "", {}};
            try {
                RotationCovariance r = check_rotation_covariance(s);
                rec.status = status_of(r.diagonal && r.traceless);
                rec.residual = "0";
                rec.values["lambda_J"] = r.lambda.str();
                rec.values["generator"] = r.generator.str();
                rec.values["diagonal"] = yes_no(r.diagonal);
                rec.values["traceless"] = yes_no(r.traceless);
            } catch (const CovarianceFailure &e) {
                rec.residual = "unsolvable";
                rec.values["note"] = e.what();
            }
            report.checks.push_back(std::move(rec));
        }
    } else if (o.check == "multispinor-eqs") {
        std::vector<int> ranks{1, 2, 3, 4};
        if (o.rank) {
            if (*o.rank < 1 || *o.rank > 4)
                throw BadRank("--rank must be in 1..4");
            ranks = {*o.rank};
        }
        for (int n : ranks)
            for (int s : spins) {
                CheckRecord rec{"multispinor-eqs N=" + std::to_string(n) + " s=" + signed_label(s),
                                "the symmetric wave equation reduces to two distinct equations",
                                CheckStatus::Fail, "", {}};
                try {
                    MultispinorEquations m = multispinor_equations(n, s);
                    rec.status = CheckStatus::Pass;
                    rec.residual = "0";
                    rec.values["distinct_equations"] = std::to_string(m.row_rank);
                    rec.values["nullity"] = std::to_string(m.nullity);
                    rec.values["phi_scale"] = m.phi_scale.str();
                    rec.values["chi_scale"] = m.chi_scale.str();
                    rec.values["restricted"] = m.restricted.str();
                } catch (const RedundancyClaimFailure &e) {
                    rec.residual = "claim violated";
                    rec.values["note"] = e.what();
                }
                report.checks.push_back(std::move(rec));
            }
    } else {
        throw BadParameter("unknown check '" + o.check + "'");
    }
    return report;
}

Report cmd_numcheck(const NumcheckOptions &o)
{
    if (!(o.tolerance > 0.0) || !std::isfinite(o.tolerance))
        throw BadParameter("--tol must be positive");
    NumericModel model;
    model.name = o.model;
    if (o.model == "schrodinger" && (o.spin || o.rank))
        throw BadParameter("schrodinger takes neither --spin-s nor --rank");
    if (o.model == "levyleblond" && o.rank)
        throw BadParameter("levyleblond takes no --rank");
    model.s = o.spin.value_or(1);
    model.rank = o.rank.value_or(1);
    TruncatedOperators ops = build_numeric(model, o.m, o.t, o.n_max);
    ResidualReport r = residual_report(ops, corrected_table(), o.low);

    Report report;
    const std::string tol = sci(o.tolerance);
    for (const auto &row : r.rows) {
        CheckRecord rec{"[" + row.lhs_a + "," + row.lhs_b + "]",
                        "projected residual of the truncated bracket within tolerance",
                        status_of(row.projected <= o.tolerance), sci(row.projected), {}};
        rec.values["full"] = sci(row.full);
        rec.values["tolerance"] = tol;
        report.checks.push_back(std::move(rec));
    }
    CheckRecord summary{"projected-max", "largest projected residual", status_of(r.max_projected <= o.tolerance),
                        sci(r.max_projected), {}};
    summary.values["n_max"] = std::to_string(r.n_max);
    summary.values["low_cutoff"] = std::to_string(r.low_cutoff);
    summary.values["edge_margin"] = std::to_string(r.n_max - 1 - r.low_cutoff);
    summary.values["tolerance"] = tol;
    if (r.max_projected > o.tolerance)
        summary.values["note"] = "edge contamination: the low-mode projector reaches the truncation edge";
    report.checks.push_back(std::move(summary));

    LadderDefect d = ladder_defect(o.n_max);
    CheckRecord ladder{"ladder-defect", "[x,p] - i Id is confined to the top basis state", CheckStatus::Info,
                       sci(d.elsewhere), {}};
    ladder.values["top"] = "(" + sci(d.top.real()) + ", " + sci(d.top.imag()) + ")";
    ladder.values["elsewhere"] = sci(d.elsewhere);
    report.checks.push_back(std::move(ladder));
    return report;
}

int exit_code(const Report &report) { return report.status() == CheckStatus::Fail ? 1 : 0; }

std::string report_file_name(const std::vector<std::string> &command)
{
    std::string out;
    for (const auto &arg : command) {
        if (!out.empty())
            out += '_';
        for (char c : arg) {
            bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                        c == '+' || c == '-';
            out += keep ? c : '-';
        }
    }
    return (out.empty() ? std::string("report") : out) + ".json";
}

} // namespace galext
