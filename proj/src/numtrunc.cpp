#include "galext/numtrunc.hpp"

#include <cmath>

namespace galext {

namespace {

const cplx I(0.0, 1.0);

SparseOp identity(int n)
{
    SparseOp id(n, n);
    id.setIdentity();
    return id;
}

SparseOp annihilation(int n)
{
    std::vector<Eigen::Triplet<cplx>> entries;
    for (int k = 1; k < n; ++k)
        entries.emplace_back(k - 1, k, std::sqrt(static_cast<double>(k)));
    SparseOp a(n, n);
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
}

/// a (x) b with a on the more significant index.
SparseOp kron(const SparseOp &a, const SparseOp &b)
{
    std::vector<Eigen::Triplet<cplx>> entries;
    for (int i = 0; i < a.outerSize(); ++i)
        for (SparseOp::InnerIterator ea(a, i); ea; ++ea)
            for (int k = 0; k < b.outerSize(); ++k)
                for (SparseOp::InnerIterator eb(b, k); eb; ++eb)
                    entries.emplace_back(ea.row() * b.rows() + eb.row(), ea.col() * b.cols() + eb.col(),
                                         ea.value() * eb.value());
    SparseOp r(a.rows() * b.rows(), a.cols() * b.cols());
    r.setFromTriplets(entries.begin(), entries.end());
    return r;
}

SparseOp commutator(const SparseOp &a, const SparseOp &b)
{
    SparseOp ab = a * b;
    SparseOp ba = b * a;
    return ab - ba;
}

double spin_constant(const NumericModel &model)
{
    if (model.name == "schrodinger")
        return 0.0;
    if (model.s != 1 && model.s != -1)
        throw BadSpin("spin label s must be +1 or -1");
    if (model.name == "levyleblond")
        return model.s / 2.0;
    if (model.name == "multispinor") {
        if (model.rank < 1 || model.rank > 4)
            throw BadRank("multispinor rank must be in 1..4");
        return model.rank * model.s / 2.0;
    }
    throw BadParameter("unknown model '" + model.name + "'");
}

double max_abs(const SparseOp &a, int n_max, int low)
{
    double out = 0.0;
    for (int i = 0; i < a.outerSize(); ++i)
        for (SparseOp::InnerIterator e(a, i); e; ++e) {
            if (low >= 0) {
                auto r = e.row(), c = e.col();
                if (r / n_max > low || r % n_max > low || c / n_max > low || c % n_max > low)
                    continue;
            }
            out = std::max(out, std::abs(e.value()));
        }
    return out;
}

} // namespace

SparseOp ladder_position(int n_max)
{
    SparseOp a = annihilation(n_max);
    SparseOp ad = a.adjoint();
    return (a + ad) * cplx(1.0 / std::sqrt(2.0));
}

SparseOp ladder_momentum(int n_max)
{
    SparseOp a = annihilation(n_max);
    SparseOp ad = a.adjoint();
    return (ad - a) * (I / std::sqrt(2.0));
}

TruncatedOperators build_numeric(const NumericModel &model, double m, double t, int n_max)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw BadParameter("mass must be positive");
    if (!std::isfinite(t))
        throw BadParameter("time must be finite");
    if (n_max < 4)
        throw BadParameter("n_max must be at least 4");
    double spin = spin_constant(model);

    SparseOp x = ladder_position(n_max), p = ladder_momentum(n_max), id = identity(n_max);
    TruncatedOperators out;
    out.n_max = n_max;
    out.m = m;
    out.t = t;
    auto &ops = out.ops;
    ops["x1"] = kron(x, id);
    ops["x2"] = kron(id, x);
    ops["p1"] = kron(p, id);
    ops["p2"] = kron(id, p);
    const SparseOp big_id = identity(n_max * n_max);

    ops["P1"] = ops["p1"];
    ops["P2"] = ops["p2"];
    SparseOp h = ops["p1"] * ops["p1"];
    h += SparseOp(ops["p2"] * ops["p2"]);
    ops["H"] = h * cplx(1.0 / (2.0 * m));
    SparseOp j = ops["x1"] * ops["p2"];
    j -= SparseOp(ops["x2"] * ops["p1"]);
    if (spin != 0.0)
        j += big_id * cplx(spin);
    ops["J"] = j;
    ops["K1"] = ops["x1"] * cplx(m) - ops["p1"] * cplx(t);
    ops["K2"] = ops["x2"] * cplx(m) - ops["p2"] * cplx(t);
    ops["M"] = big_id * cplx(m);
    for (auto &[name, op] : ops)
        op.makeCompressed();
    return out;
}

ResidualReport residual_report(const TruncatedOperators &ops, const StructureTable &table, int low_cutoff)
{
    if (low_cutoff < 0 || low_cutoff >= ops.n_max)
        throw BadParameter("low cutoff must satisfy 0 <= low < n_max");
    ResidualReport report;
    report.n_max = ops.n_max;
    report.low_cutoff = low_cutoff;
    const auto &o = ops.ops;
    for (const auto &row : table.rows()) {
        SparseOp residual = commutator(o.at(row.lhs_a), o.at(row.lhs_b));
        for (const auto &term : row.rhs) {
            if (term.name == "kappa")
                continue; // kappa = 0 for these realizations
            cplx c(term.coeff.re().get_d(), term.coeff.im().get_d());
            residual -= o.at(term.name) * c;
        }
        NumericRow r{row.lhs_a, row.lhs_b, max_abs(residual, ops.n_max, low_cutoff), max_abs(residual, ops.n_max, -1)};
        report.max_projected = std::max(report.max_projected, r.projected);
        report.rows.push_back(std::move(r));
    }
    return report;
}

LadderDefect ladder_defect(int n_max)
{
    if (n_max < 1)
        throw BadParameter("n_max must be positive");
    SparseOp d = commutator(ladder_position(n_max), ladder_momentum(n_max)) - identity(n_max) * I;
    LadderDefect out{cplx(0.0), 0.0};
    for (int i = 0; i < d.outerSize(); ++i)
        for (SparseOp::InnerIterator e(d, i); e; ++e) {
            if (e.row() == n_max - 1 && e.col() == n_max - 1)
                out.top = e.value();
            else
                out.elsewhere = std::max(out.elsewhere, std::abs(e.value()));
        }
    return out;
}

double hermiticity_defect(const SparseOp &a)
{
    SparseOp adj = a.adjoint();
    SparseOp diff = a - adj;
    return max_abs(diff, 1, -1);
}

} // namespace galext
