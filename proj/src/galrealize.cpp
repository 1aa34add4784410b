#include "galext/galrealize.hpp"

#include <algorithm>
#include <set>

namespace galext {

namespace {

const Scalar I = Scalar::imaginary_unit();

bool coordinate_free(const PolyExpr &q)
{
    const auto &reg = *q.registry();
    for (const char *name : {"x1", "x2", "t"})
        if (auto idx = reg.find(name); idx && q.depends_on(*idx))
            return false;
    return true;
}

PolyExpr sym(const RegistryPtr &reg, const char *name, int exponent = 1) { return PolyExpr::symbol(reg, name, exponent); }

/// Position of a generator name in kNames, or 7 for kappa.
std::size_t table_index(const std::string &name)
{
    const auto &names = GeneratorSet::kNames;
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end())
        return static_cast<std::size_t>(it - names.begin());
    if (name == "kappa")
        return names.size();
    throw BadParameter("unknown generator '" + name + "' in structure table");
}

GeneratorSet realize_base(const RegistryPtr &reg, const PolyExpr &spin_shift, GeneratorMeta meta)
{
    for (const char *name : {"m", "x1", "x2", "t"})
        reg->index_of(name);
    if (!reg->symbol(reg->index_of("m")).invertible)
        throw BadParameter("mass symbol m must be invertible");

    PolyExpr m = sym(reg, "m");
    ScalarDiffOp d1 = ScalarDiffOp::partial(reg, Axis::X1);
    ScalarDiffOp d2 = ScalarDiffOp::partial(reg, Axis::X2);
    ScalarDiffOp x1(sym(reg, "x1")), x2(sym(reg, "x2"));
    PolyExpr t = sym(reg, "t");

    std::map<std::string, DiffOp> gens;
    gens.emplace("P1", DiffOp(-I * d1));
    gens.emplace("P2", DiffOp(-I * d2));
    PolyExpr inv_2m = sym(reg, "m", -1) * Scalar::ratio(-1, 2);
    gens.emplace("H", DiffOp(inv_2m * (compose(d1, d1) + compose(d2, d2))));
    gens.emplace("J", DiffOp(-I * (compose(x1, d2) - compose(x2, d1)) + ScalarDiffOp(spin_shift)));
    gens.emplace("K1", DiffOp(m * x1 + (I * t) * d1));
    gens.emplace("K2", DiffOp(m * x2 + (I * t) * d2));
    gens.emplace("M", DiffOp::scalar(m, 1));
    return GeneratorSet(std::move(gens), std::move(meta));
}

GeneratorMeta base_meta(const RegistryPtr &reg, std::string model, std::optional<int> spin, int rank)
{
    return GeneratorMeta{std::move(model), spin, rank, PolyExpr(reg), PolyExpr(reg)};
}

void require_spin(int s)
{
    if (s != 1 && s != -1)
        throw BadSpin("spin label s must be +1 or -1, got " + std::to_string(s));
}

} // namespace

const std::array<std::string, 7> GeneratorSet::kNames = {"P1", "P2", "H", "J", "K1", "K2", "M"};

GeneratorSet::GeneratorSet(std::map<std::string, DiffOp> gens, GeneratorMeta meta)
    : gens_(std::move(gens))
    , meta_(std::move(meta))
{
    if (gens_.size() != kNames.size())
        throw BadParameter("a generator set holds exactly P1 P2 H J K1 K2 M");
    for (const auto &name : kNames)
        if (!gens_.count(name))
            throw BadParameter("generator " + name + " missing");
    const DiffOp &first = gens_.begin()->second;
    for (const auto &[name, op] : gens_) {
        if (op.dim() != first.dim())
            throw ShapeError("generator " + name + " has a different dimension");
        if (op.registry() != first.registry())
            throw RegistryMismatch("generator " + name + " uses a different registry");
    }
    auto q = gens_.at("M").as_identity_multiple();
    if (!q || !coordinate_free(*q))
        throw BadMass("M must be a coordinate-free multiple of the identity");
}

const DiffOp &GeneratorSet::operator[](const std::string &name) const
{
    auto it = gens_.find(name);
    if (it == gens_.end())
        throw BadParameter("unknown generator '" + name + "'");
    return it->second;
}

PolyExpr GeneratorSet::mass() const { return *gens_.at("M").as_identity_multiple(); }

GeneratorSet GeneratorSet::with(const std::string &name, DiffOp op) const
{
    auto gens = gens_;
    if (!gens.count(name))
        throw BadParameter("unknown generator '" + name + "'");
    gens.insert_or_assign(name, std::move(op));
    return GeneratorSet(std::move(gens), meta_);
}

GeneratorSet GeneratorSet::with_meta(GeneratorMeta meta) const { return GeneratorSet(gens_, std::move(meta)); }

GeneratorSet realize_schrodinger(RegistryPtr registry)
{
    return realize_base(registry, PolyExpr(registry), base_meta(registry, "schrodinger", std::nullopt, 1));
}

GeneratorSet realize_levyleblond(int s, RegistryPtr registry)
{
    require_spin(s);
    return realize_base(registry, PolyExpr(registry, Scalar::ratio(s, 2)), base_meta(registry, "levyleblond", s, 1));
}

GeneratorSet realize_multispinor(int s, int rank, RegistryPtr registry)
{
    require_spin(s);
    if (rank < 1 || rank > 4)
        throw BadRank("multispinor rank must be in 1..4, got " + std::to_string(rank));
    return realize_base(registry, PolyExpr(registry, Scalar::ratio(rank * s, 2)),
                        base_meta(registry, "multispinor", s, rank));
}

GeneratorSet extend_lambda(const GeneratorSet &g, const PolyExpr &lambda)
{
    PolyExpr m = sym(g.registry(), "m");
    if (!(g.mass() == m))
        throw BadMass("lambda extension requires M = m Id, found M = " + g.mass().str());
    // lambda M/m = lambda once M = m.
    DiffOp j = g["J"] + DiffOp::scalar(lambda, g.dim());
    GeneratorMeta meta = g.meta();
    meta.lambda += lambda;
    return g.with("J", j).with_meta(std::move(meta));
}

GeneratorSet kappa_shift(const GeneratorSet &g, const PolyExpr &c)
{
    PolyExpr mass = g.mass();
    if (!mass.is_unit())
        throw BadMass("kappa shift needs an invertible mass, found M = " + mass.str());
    PolyExpr half_c_over_m = c * mass.unit_inverse() * Scalar::ratio(1, 2);
    GeneratorMeta meta = g.meta();
    meta.shift += c;
    return g.with("K1", g["K1"] + half_c_over_m * g["P2"])
        .with("K2", g["K2"] - half_c_over_m * g["P1"])
        .with_meta(std::move(meta));
}

PolyExpr extract_kappa(const GeneratorSet &g)
{
    DiffOp b = bracket(g["K1"], g["K2"]);
    auto q = b.as_identity_multiple();
    if (!q || !coordinate_free(*q))
        throw NotCentral("[K1,K2] is not a constant multiple of the identity: " + b.str());
    return *q * (-I);
}

// ---------------------------------------------------------------------------

StructureTable::StructureTable(std::string name, std::vector<TableRow> rows)
    : name_(std::move(name))
    , rows_(std::move(rows))
{
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &row : rows_) {
        std::size_t a = table_index(row.lhs_a), b = table_index(row.lhs_b);
        if (a == b)
            throw BadParameter("table row brackets " + row.lhs_a + " with itself");
        if (!seen.insert(std::minmax(a, b)).second)
            throw BadParameter("table lists [" + row.lhs_a + "," + row.lhs_b + "] twice");
        for (const auto &term : row.rhs)
            table_index(term.name);
    }
}

LieAlgebraSpec StructureTable::to_algebra() const
{
    std::vector<std::string> names(GeneratorSet::kNames.begin(), GeneratorSet::kNames.end());
    names.push_back("kappa");
    LieAlgebraSpec a(names);
    for (const auto &row : rows_) {
        std::vector<std::pair<std::size_t, Scalar>> rhs;
        for (const auto &term : row.rhs)
            rhs.emplace_back(table_index(term.name), term.coeff);
        a.set_bracket(table_index(row.lhs_a), table_index(row.lhs_b), rhs);
    }
    return a;
}

namespace {

std::vector<TableRow> table_rows(bool literal)
{
    const auto &names = GeneratorSet::kNames;
    std::map<std::pair<std::string, std::string>, TableRow> special;
    auto put = [&](std::string a, std::string b, std::vector<TableTerm> rhs, std::string note = {}) {
        special[{a, b}] = TableRow{a, b, std::move(rhs), std::move(note)};
    };
    put("J", "P1", {{I, "P2"}});
    put("J", "P2", {{-I, "P1"}});
    if (literal) {
        const std::string note = "printed as [K_i,H]=0; the realization gives i P_i";
        put("K1", "H", {}, note);
        put("K2", "H", {}, note);
        const std::string jk = "printed as [J,K_j]=i eps_ij K_j; read with free index i";
        put("J", "K1", {{I, "K2"}}, jk);
        put("J", "K2", {{-I, "K1"}}, jk);
    } else {
        put("K1", "H", {{I, "P1"}});
        put("K2", "H", {{I, "P2"}});
        put("J", "K1", {{I, "K2"}});
        put("J", "K2", {{-I, "K1"}});
    }
    put("K1", "P1", {{I, "M"}});
    put("K2", "P2", {{I, "M"}});
    put("K1", "K2", {{I, "kappa"}});

    std::vector<TableRow> rows;
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b) {
            auto it = special.find({names[a], names[b]});
            if (it == special.end())
                it = special.find({names[b], names[a]});
            rows.push_back(it != special.end() ? it->second : TableRow{names[a], names[b], {}, {}});
        }
    return rows;
}

} // namespace

StructureTable corrected_table() { return StructureTable("corrected", table_rows(false)); }

StructureTable literal_table() { return StructureTable("literal", table_rows(true)); }

std::string render_rhs(const std::vector<TableTerm> &rhs)
{
    std::string out;
    for (const auto &term : rhs) {
        if (term.coeff.is_zero())
            continue;
        std::string c = term.coeff.str();
        bool negative = c.front() == '-';
        if (negative)
            c.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (c != "1")
            out += c + "*";
        out += term.name;
    }
    return out.empty() ? "0" : out;
}

StructureReport verify_structure(const GeneratorSet &g, const StructureTable &table)
{
    if (auto j = jacobi_check(table.to_algebra()); !j.ok)
        throw BadParameter("structure table '" + table.name() + "' violates the Jacobi identity");

    StructureReport report;
    report.table = table.name();
    report.pass = true;
    std::string kappa_error;
    try {
        report.kappa = extract_kappa(g);
    } catch (const NotCentral &e) {
        kappa_error = e.what();
    }
    report.mass = g.mass();

    const std::size_t dim = g.dim();
    for (const auto &row : table.rows()) {
        DiffOp computed = bracket(g[row.lhs_a], g[row.lhs_b]);
        DiffOp expected(g.registry(), dim);
        std::string note = row.note;
        bool usable = true;
        for (const auto &term : row.rhs) {
            if (term.name == "kappa") {
                if (!report.kappa) {
                    usable = false;
                    note = note.empty() ? kappa_error : note + "; " + kappa_error;
                    continue;
                }
                expected += term.coeff * DiffOp::scalar(*report.kappa, dim);
            } else {
                expected += term.coeff * g[term.name];
            }
        }
        DiffOp residual = computed - expected;
        bool pass = usable && residual.is_zero();
        report.pass = report.pass && pass;
        report.rows.push_back(RowResult{row.lhs_a, row.lhs_b, render_rhs(row.rhs), std::move(computed),
                                        std::move(expected), std::move(residual), pass, std::move(note)});
    }
    return report;
}

TripleJacobiResult triple_jacobi(const GeneratorSet &g)
{
    TripleJacobiResult out;
    const auto &n = GeneratorSet::kNames;
    for (std::size_t a = 0; a < n.size(); ++a)
        for (std::size_t b = a + 1; b < n.size(); ++b)
            for (std::size_t c = b + 1; c < n.size(); ++c) {
                const DiffOp &A = g[n[a]], &B = g[n[b]], &C = g[n[c]];
                DiffOp sum = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B));
                ++out.triples_checked;
                if (!sum.is_zero())
                    out.failures.push_back({n[a], n[b], n[c]});
            }
    return out;
}

} // namespace galext
