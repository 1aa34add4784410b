#include "galext/fieldcheck.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef GALEXT_DATA_DIR
#define GALEXT_DATA_DIR "data"
#endif

namespace galext {

namespace {

const Scalar I = Scalar::imaginary_unit();

std::size_t axis_symbol(const SymbolRegistry &reg, Axis axis)
{
    static const char *names[3] = {"x1", "x2", "t"};
    return reg.index_of(names[static_cast<std::size_t>(axis)]);
}

DerivIndex bump(DerivIndex d, Axis axis, int by = 1)
{
    d[static_cast<std::size_t>(axis)] += by;
    return d;
}

void require_spin(int s)
{
    if (s != 1 && s != -1)
        throw BadSpin("spin label s must be +1 or -1, got " + std::to_string(s));
}

std::string render_factor(const FieldFactor &f)
{
    std::string d;
    static const char *axis[3] = {"d1", "d2", "dt"};
    for (std::size_t a = 0; a < 3; ++a)
        for (int k = 0; k < f.deriv[a]; ++k)
            d += std::string(axis[a]) + " ";
    return "[" + d + (f.comp == Component::Phi ? "phi" : "chi") + "]";
}

} // namespace

FieldPoly::FieldPoly(RegistryPtr registry)
    : registry_(std::move(registry))
{}

FieldPoly FieldPoly::bilinear(const PolyExpr &coeff, FieldFactor left, FieldFactor right)
{
    FieldPoly f(coeff.registry());
    f.add_term({left, right}, coeff);
    return f;
}

void FieldPoly::add_term(const Key &key, const PolyExpr &coeff)
{
    if (coeff.is_zero())
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool FieldPoly::is_reduced() const
{
    for (const auto &[key, coeff] : terms_)
        for (const FieldFactor *f : {&key.first, &key.second})
            if (f->comp == Component::Chi || f->deriv[2] != 0)
                return false;
    return true;
}

FieldPoly &FieldPoly::operator+=(const FieldPoly &o)
{
    if (registry_ != o.registry_)
        throw RegistryMismatch("field polynomials use different registries");
    for (const auto &[key, coeff] : o.terms_)
        add_term(key, coeff);
    return *this;
}

FieldPoly &FieldPoly::operator-=(const FieldPoly &o)
{
    if (registry_ != o.registry_)
        throw RegistryMismatch("field polynomials use different registries");
    for (const auto &[key, coeff] : o.terms_)
        add_term(key, -coeff);
    return *this;
}

FieldPoly operator*(const PolyExpr &c, const FieldPoly &f)
{
    FieldPoly r(f.registry_);
    for (const auto &[key, coeff] : f.terms_)
        r.add_term(key, c * coeff);
    return r;
}

FieldPoly FieldPoly::derivative(Axis axis) const
{
    FieldPoly r(registry_);
    std::size_t sym = axis_symbol(*registry_, axis);
    for (const auto &[key, coeff] : terms_) {
        auto [left, right] = key;
        r.add_term(key, coeff.derivative(sym));
        r.add_term({FieldFactor{left.comp, bump(left.deriv, axis)}, right}, coeff);
        r.add_term({left, FieldFactor{right.comp, bump(right.deriv, axis)}}, coeff);
    }
    return r;
}

std::string FieldPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &[key, coeff] : terms_) {
        if (!out.empty())
            out += " + ";
        out += "(" + coeff.str() + ")*" + render_factor(key.first) + "^+" + render_factor(key.second);
    }
    return out;
}

// ---------------------------------------------------------------------------

EomRules::EomRules(int s_, RegistryPtr registry_)
    : s(s_)
    , registry(std::move(registry_))
{
    require_spin(s);
    if (!registry->symbol(registry->index_of("m")).invertible)
        throw BadParameter("mass symbol m must be invertible");
}

namespace {

using Expansion = std::vector<std::pair<PolyExpr, DerivIndex>>;

/// d^alpha of a component (conjugated or not) as a combination of spatial
/// derivatives of phi (or phi^+).
Expansion reduce_factor(const FieldFactor &f, bool conjugate, const EomRules &rules)
{
    const RegistryPtr &reg = rules.registry;
    // i/2m for phi, -i/2m for phi^+
    PolyExpr half = PolyExpr::symbol(reg, "m", -1) * (Scalar::ratio(1, 2) * (conjugate ? -I : I));
    Expansion out;
    if (f.comp == Component::Chi) {
        // chi = (i/2m)(d1 + i s d2) phi; chi^+ = -(i/2m)(d1 - i s d2) phi^+
        Scalar is = I * Scalar(conjugate ? -rules.s : rules.s);
        for (auto &[c, d] : reduce_factor({Component::Phi, bump(f.deriv, Axis::X1)}, conjugate, rules))
            out.emplace_back(half * c, d);
        for (auto &[c, d] : reduce_factor({Component::Phi, bump(f.deriv, Axis::X2)}, conjugate, rules))
            out.emplace_back(half * is * c, d);
        return out;
    }
    if (f.deriv[2] == 0) {
        out.emplace_back(PolyExpr(reg, Scalar(1)), f.deriv);
        return out;
    }
    DerivIndex lower = bump(f.deriv, Axis::T, -1);
    for (Axis a : {Axis::X1, Axis::X2})
        for (auto &[c, d] : reduce_factor({Component::Phi, bump(lower, a, 2)}, conjugate, rules))
            out.emplace_back(half * c, d);
    return out;
}

} // namespace

FieldPoly reduce_on_shell(const FieldPoly &f, const EomRules &rules)
{
    if (f.registry() != rules.registry)
        throw RegistryMismatch("rules and field polynomial use different registries");
    FieldPoly out(f.registry());
    for (const auto &[key, coeff] : f.terms()) {
        Expansion left = reduce_factor(key.first, true, rules);
        Expansion right = reduce_factor(key.second, false, rules);
        for (const auto &[cl, dl] : left)
            for (const auto &[cr, dr] : right)
                out += FieldPoly::bilinear(coeff * cl * cr, {Component::Phi, dl}, {Component::Phi, dr});
    }
    return out;
}

// ---------------------------------------------------------------------------

ConservationLaw parse_conservation_law(const std::string &text)
{
    ConservationLaw law;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> cols;
        for (std::string col; fields >> col;)
            cols.push_back(col);
        if (cols.empty())
            continue;
        if (cols.size() != 7)
            throw ParseError(line_no, 1, "expected 7 columns, found " + std::to_string(cols.size()));
        law.terms.push_back(LawTerm{cols[0], cols[1], cols[2], cols[3], cols[4], cols[5], cols[6]});
    }
    return law;
}

ConservationLaw load_conservation_law(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw BadParameter("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_conservation_law(buffer.str());
}

std::filesystem::path data_directory()
{
    if (const char *env = std::getenv("GALEXT_DATA_DIR"); env && *env)
        return env;
    return GALEXT_DATA_DIR;
}

ConservationLaw default_conservation_law() { return load_conservation_law(data_directory() / "conservation-law.txt"); }

namespace {

std::string replace_all(std::string text, const std::string &from, const std::string &to)
{
    for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos; pos += to.size())
        text.replace(pos, from.size(), to);
    return text;
}

struct IndexBinding
{
    int i;
    int j;
    int s;

    std::string apply(std::string text) const
    {
        int eps = i == j ? 0 : (i == 1 ? 1 : -1);
        text = replace_all(text, "{i}", std::to_string(i));
        text = replace_all(text, "{j}", std::to_string(j));
        text = replace_all(text, "{s}", "(" + std::to_string(s) + ")");
        text = replace_all(text, "{eps}", "(" + std::to_string(eps) + ")");
        return text;
    }
};

DerivIndex parse_deriv(const std::string &token, std::size_t term)
{
    DerivIndex d{0, 0, 0};
    if (token == ".")
        return d;
    if (token == "d1")
        d[0] = 1;
    else if (token == "d2")
        d[1] = 1;
    else if (token == "dt")
        d[2] = 1;
    else
        throw ParseError(term, 1, "unknown derivative '" + token + "'");
    return d;
}

/// sigma1, s*sigma2, sigma3 or 1+sigma3.
MatExpr parse_matrix(const RegistryPtr &reg, const std::string &token, int s, std::size_t term)
{
    if (token == "1")
        return MatExpr::identity(reg, 2);
    if (token == "1+sigma3")
        return MatExpr::identity(reg, 2) + MatExpr::pauli(reg, 3);
    if (token == "sigma1")
        return MatExpr::pauli(reg, 1);
    if (token == "sigma2")
        return Scalar(s) * MatExpr::pauli(reg, 2);
    if (token == "sigma3")
        return MatExpr::pauli(reg, 3);
    throw ParseError(term, 1, "unknown matrix '" + token + "'");
}

bool selected(const LawTerm &t, LawVariant variant, const std::vector<std::string> &omit)
{
    for (const auto &label : omit)
        if (t.label == label)
            return false;
    if (t.variant == "all")
        return true;
    return t.variant == (variant == LawVariant::Corrected ? "corrected" : "literal");
}

} // namespace

FieldPoly build_conservation_expression(const ConservationLaw &law, int i, int s, LawVariant variant,
                                        const std::vector<std::string> &omit)
{
    if (i != 1 && i != 2)
        throw IndexError("free index must be 1 or 2");
    require_spin(s);
    RegistryPtr reg = physics_registry();
    FieldPoly total(reg);
    for (std::size_t n = 0; n < law.terms.size(); ++n) {
        const LawTerm &t = law.terms[n];
        if (!selected(t, variant, omit))
            continue;
        bool summed = t.outer == "d{j}";
        if (!summed && t.outer != "dt")
            throw ParseError(n + 1, 1, "unknown outer derivative '" + t.outer + "'");
        for (int j = 1; j <= (summed ? 2 : 1); ++j) {
            IndexBinding bind{i, j, s};
            PolyExpr coeff = parse_poly(reg, bind.apply(t.coefficient));
            MatExpr mat = parse_matrix(reg, bind.apply(t.matrix), s, n + 1);
            DerivIndex left = parse_deriv(bind.apply(t.left), n + 1);
            DerivIndex right = parse_deriv(bind.apply(t.right), n + 1);
            FieldPoly inner(reg);
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    inner += FieldPoly::bilinear(coeff * mat(a, b), {static_cast<Component>(a), left},
                                                 {static_cast<Component>(b), right});
            total += inner.derivative(summed ? (j == 1 ? Axis::X1 : Axis::X2) : Axis::T);
        }
    }
    return total;
}

FieldPoly check_conservation(const ConservationLaw &law, int i, int s, LawVariant variant,
                             const std::vector<std::string> &omit)
{
    FieldPoly expr = build_conservation_expression(law, i, s, variant, omit);
    return reduce_on_shell(expr, EomRules(s, expr.registry()));
}

FieldPoly check_conservation(int i, int s, LawVariant variant, const std::vector<std::string> &omit)
{
    return check_conservation(default_conservation_law(), i, s, variant, omit);
}

// ---------------------------------------------------------------------------

DiffOp wave_operator(int s, RegistryPtr reg)
{
    require_spin(s);
    auto p = [&](Axis a) { return DiffOp(-I * ScalarDiffOp::partial(reg, a)); };
    auto lift = [&](const MatExpr &m, const DiffOp &op) {
        DiffOp r(reg, 2);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                r(a, b) = compose(ScalarDiffOp(m(a, b)), op(0, 0));
        return r;
    };
    DiffOp energy(I * ScalarDiffOp::partial(reg, Axis::T));
    MatExpr one = MatExpr::identity(reg, 2);
    MatExpr mass = PolyExpr::symbol(reg, "m") * (one - MatExpr::pauli(reg, 3));
    return lift(MatExpr::gamma_projector(reg), energy) + lift(MatExpr::pauli(reg, 1), p(Axis::X1)) +
           lift(Scalar(s) * MatExpr::pauli(reg, 2), p(Axis::X2)) + DiffOp::from_matrix(mass);
}

namespace {

bool coordinate_free(const PolyExpr &q)
{
    const auto &reg = *q.registry();
    for (Axis a : {Axis::X1, Axis::X2, Axis::T})
        if (q.depends_on(axis_symbol(reg, a)))
            return false;
    return true;
}

} // namespace

std::optional<MatExpr> solve_left_factor(const DiffOp &target, const DiffOp &g)
{
    if (target.dim() != g.dim())
        throw ShapeError("operator dimensions differ");
    const std::size_t n = g.dim();
    const RegistryPtr &reg = g.registry();
    MatExpr lambda(reg, n);
    for (std::size_t a = 0; a < n; ++a) {
        // One equation per (column b, derivative index):
        // sum_c lambda_ac coeff(g_cb) = coeff(target_ab); last entry is the rhs.
        std::vector<std::vector<PolyExpr>> eqs;
        for (std::size_t b = 0; b < n; ++b) {
            std::map<DerivIndex, std::vector<PolyExpr>> rows;
            auto row_for = [&](const DerivIndex &d) -> std::vector<PolyExpr> & {
                auto it = rows.find(d);
                if (it == rows.end())
                    it = rows.emplace(d, std::vector<PolyExpr>(n + 1, PolyExpr(reg))).first;
                return it->second;
            };
            for (std::size_t c = 0; c < n; ++c)
                for (const auto &[d, coeff] : g(c, b).terms())
                    row_for(d)[c] = coeff;
            for (const auto &[d, coeff] : target(a, b).terms())
                row_for(d)[n] = coeff;
            for (auto &[d, row] : rows)
                eqs.push_back(std::move(row));
        }
        // Elimination with unit pivots only (stays inside the Laurent ring).
        std::vector<bool> used(eqs.size(), false);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t pivot = eqs.size();
            for (std::size_t r = 0; r < eqs.size(); ++r)
                if (!used[r] && !eqs[r][c].is_zero() && eqs[r][c].is_unit()) {
                    pivot = r;
                    break;
                }
            if (pivot == eqs.size())
                continue;
            used[pivot] = true;
            PolyExpr inv = eqs[pivot][c].unit_inverse();
            for (auto &e : eqs[pivot])
                e = e * inv;
            for (std::size_t r = 0; r < eqs.size(); ++r) {
                if (r == pivot || eqs[r][c].is_zero())
                    continue;
                PolyExpr factor = eqs[r][c];
                for (std::size_t k = 0; k <= n; ++k)
                    eqs[r][k] -= factor * eqs[pivot][k];
            }
        }
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (used[r])
                continue;
            for (const auto &e : eqs[r])
                if (!e.is_zero())
                    return std::nullopt;
        }
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (!used[r])
                continue;
            std::size_t c = 0;
            while (eqs[r][c].is_zero())
                ++c;
            lambda(a, c) = eqs[r][n];
            for (std::size_t k = c + 1; k < n; ++k)
                if (!eqs[r][k].is_zero())
                    return std::nullopt; // leftover free unknown coupled to a pivot
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!coordinate_free(lambda(a, b)))
                return std::nullopt;
    if (!(compose(DiffOp::from_matrix(lambda), g) == target))
        return std::nullopt;
    return lambda;
}

namespace {

/// v+ under the chosen reading: v1 + i s v2 (sign_convention = 1) or v1 - i s v2.
PolyExpr v_plus(int s, const PolyExpr &v1, const PolyExpr &v2, int sign_convention)
{
    return v1 + I * Scalar(s * sign_convention) * v2;
}

/// Id + k/4 (sigma1 - i sigma2) v+.
MatExpr nilpotent_factor(const RegistryPtr &reg, const PolyExpr &vp, const Scalar &k)
{
    MatExpr lowering = MatExpr::pauli(reg, 1) - I * MatExpr::pauli(reg, 2);
    return MatExpr::identity(reg, 2) + (vp * (k * Scalar::ratio(1, 4))) * lowering;
}

int degree_in_v(const MatExpr &m)
{
    const auto &reg = *m.registry();
    std::vector<std::size_t> vs{reg.index_of("v1"), reg.index_of("v2")};
    int deg = 0;
    for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < m.dim(); ++b)
            deg = std::max(deg, m(a, b).degree_in(vs));
    return deg;
}

PolyExpr at_zero_velocity(const PolyExpr &p)
{
    const auto &reg = p.registry();
    PolyExpr zero(reg);
    return p.substitute(reg->index_of("v1"), zero).substitute(reg->index_of("v2"), zero);
}

} // namespace

DiffOp boost_transform(const DiffOp &a, int s, const PolyExpr &v1, const PolyExpr &v2, int sign_convention)
{
    require_spin(s);
    const RegistryPtr &reg = a.registry();
    PolyExpr m = PolyExpr::symbol(reg, "m");
    PolyExpr x1 = PolyExpr::symbol(reg, "x1"), x2 = PolyExpr::symbol(reg, "x2"), t = PolyExpr::symbol(reg, "t");
    PolyExpr theta = m * (v1 * x1 + v2 * x2) + m * (v1 * v1 + v2 * v2) * t * Scalar::ratio(1, 2);
    PolyExpr vp = v_plus(s, v1, v2, sign_convention);
    DiffOp S = DiffOp::from_matrix(nilpotent_factor(reg, vp, Scalar(-1)));
    DiffOp S_inv = DiffOp::from_matrix(nilpotent_factor(reg, vp, Scalar(1)));
    return compose(S_inv, compose(conjugate_phase(conjugate_shift(a, v1, v2), theta), S));
}

BoostCovariance check_boost_covariance(int s)
{
    RegistryPtr reg = physics_registry();
    DiffOp g = wave_operator(s, reg);
    PolyExpr v1 = PolyExpr::symbol(reg, "v1"), v2 = PolyExpr::symbol(reg, "v2");
    for (int convention : {1, -1}) {
        DiffOp transformed = boost_transform(g, s, v1, v2, convention);
        auto lambda = solve_left_factor(transformed, g);
        if (!lambda)
            continue;
        MatExpr at_zero(reg, 2);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                at_zero(a, b) = at_zero_velocity((*lambda)(a, b));
        DiffOp back = boost_transform(transformed, s, -v1, -v2, convention);
        std::string convention_text = std::string("G~ = S^-1 o exp(-i theta) o T^-1 G T o exp(i theta) o S = Lambda G; ") +
                                      "(T f)(x,t) = f(x - v t, t); v+ = v1 " + (convention == 1 ? "+" : "-") +
                                      " i s v2";
        return BoostCovariance{*lambda,
                               convention_text,
                               transformed,
                               at_zero == MatExpr::identity(reg, 2),
                               back == g,
                               degree_in_v(*lambda)};
    }
    throw CovarianceFailure("no constant Lambda(v) solves G~ = Lambda G for s = " + std::to_string(s));
}

RotationCovariance check_rotation_covariance(int s)
{
    RegistryPtr reg = physics_registry();
    DiffOp g = wave_operator(s, reg);
    ScalarDiffOp x1(PolyExpr::symbol(reg, "x1")), x2(PolyExpr::symbol(reg, "x2"));
    ScalarDiffOp orbital = -I * (compose(x1, ScalarDiffOp::partial(reg, Axis::X2)) -
                                 compose(x2, ScalarDiffOp::partial(reg, Axis::X1)));
    DiffOp j2(reg, 2);
    for (std::size_t a = 0; a < 2; ++a)
        j2(a, a) = orbital;
    j2 += DiffOp::from_matrix(Scalar::ratio(s, 2) * MatExpr::pauli(reg, 3));

    auto lambda = solve_left_factor(bracket(g, j2), g);
    if (!lambda)
        throw CovarianceFailure("no constant Lambda_J solves [G, J] = Lambda_J G for s = " + std::to_string(s));
    const MatExpr &l = *lambda;
    bool diagonal = l(0, 1).is_zero() && l(1, 0).is_zero();
    bool traceless = (l(0, 0) + l(1, 1)).is_zero();
    return RotationCovariance{l, j2, diagonal, traceless};
}

// ---------------------------------------------------------------------------

RegistryPtr symbol_registry()
{
    static const RegistryPtr reg = make_registry({{"E", false}, {"m", true}, {"pm", false}, {"pp", false}});
    return reg;
}

std::size_t polynomial_rank(const MatExpr &m)
{
    std::vector<std::vector<PolyExpr>> rows;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        rows.emplace_back();
        for (std::size_t c = 0; c < m.dim(); ++c)
            rows.back().push_back(m(r, c));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.dim() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero())
                continue;
            PolyExpr p = rows[rank][c], f = rows[r][c];
            for (std::size_t k = 0; k < m.dim(); ++k)
                rows[r][k] = p * rows[r][k] - f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

/// q with row = q * target for a nonzero real rational q, if one exists.
std::optional<Scalar> rational_scale(const std::vector<PolyExpr> &row, const std::vector<PolyExpr> &target)
{
    std::optional<Scalar> q;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (target[k].is_zero()) {
            if (!row[k].is_zero())
                return std::nullopt;
            continue;
        }
        if (!q) {
            if (row[k].is_zero())
                return std::nullopt;
            q = row[k].terms().begin()->second / target[k].terms().begin()->second;
        }
        if (!(row[k] == target[k] * *q))
            return std::nullopt;
    }
    if (!q || !q->is_real())
        return std::nullopt;
    return q;
}

Scalar binomial(std::size_t n, std::size_t k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Scalar(mpq_class(r));
}

} // namespace

MultispinorEquations multispinor_equations(int rank, int s)
{
    require_spin(s);
    if (rank < 1 || rank > 4)
        throw BadRank("multispinor rank must be in 1..4, got " + std::to_string(rank));
    RegistryPtr reg = symbol_registry();
    const auto n = static_cast<std::size_t>(rank);
    PolyExpr E = PolyExpr::symbol(reg, "E"), m = PolyExpr::symbol(reg, "m");
    PolyExpr pm = PolyExpr::symbol(reg, "pm"), pp = PolyExpr::symbol(reg, "pp");

    MatExpr g(reg, 2);
    g(0, 0) = E;
    g(0, 1) = pm;
    g(1, 0) = pp;
    g(1, 1) = m * Scalar(2);
    MatExpr gamma = MatExpr::gamma_projector(reg);

    MatExpr full(reg, std::size_t{1} << n);
    for (std::size_t slot = 1; slot <= n; ++slot)
        full += embed_factor(g, slot, n, gamma);
    full = Scalar::ratio(1, rank) * full;

    SymBasis basis(n);
    MatExpr restricted = restrict_symmetric(full, basis);
    MatExpr weighted(reg, basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            weighted(r, c) = restricted(r, c) * binomial(n, r);

    MultispinorEquations out{n, full, restricted, weighted, polynomial_rank(weighted), 0, Scalar(), Scalar(), {}};
    out.nullity = basis.size() - out.row_rank;
    if (out.row_rank != 2)
        throw RedundancyClaimFailure("expected 2 independent equations at rank " + std::to_string(rank) + ", found " +
                                     std::to_string(out.row_rank));

    std::vector<PolyExpr> phi_target(basis.size(), PolyExpr(reg)), chi_target(basis.size(), PolyExpr(reg));
    phi_target[0] = E;
    phi_target[1] = pm;
    chi_target[0] = pp;
    chi_target[1] = m * Scalar(2);

    std::vector<std::vector<PolyExpr>> nonzero;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        std::vector<PolyExpr> row;
        bool any = false;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            row.push_back(weighted(r, c));
            any = any || !row.back().is_zero();
        }
        if (any)
            nonzero.push_back(std::move(row));
    }
    if (nonzero.size() != 2)
        throw RedundancyClaimFailure("expected exactly two nonzero equation rows, found " +
                                     std::to_string(nonzero.size()));
    auto phi = rational_scale(nonzero[0], phi_target);
    auto chi = rational_scale(nonzero[1], chi_target);
    if (!phi || !chi)
        throw RedundancyClaimFailure("equation rows do not match E phi + p- chi and p+ phi + 2m chi");
    out.phi_scale = *phi;
    out.chi_scale = *chi;

    for (std::size_t c = 0; c < basis.size(); ++c) {
        bool used = false;
        for (std::size_t r = 0; r < basis.size(); ++r)
            used = used || !weighted(r, c).is_zero();
        if (!used)
            out.unconstrained.push_back(c);
    }
    return out;
}

} // namespace galext
