#include "galext/weylop.hpp"

#include <sstream>

namespace galext {

namespace {

std::array<std::size_t, 3> coordinate_indices(const RegistryPtr &registry)
{
    return {registry->index_of("x1"), registry->index_of("x2"), registry->index_of("t")};
}

long binomial(int n, int k)
{
    long r = 1;
    for (int j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

int total(const DerivIndex &a) { return a[0] + a[1] + a[2]; }

PolyExpr apply_derivatives(const PolyExpr &f, const DerivIndex &gamma, const std::array<std::size_t, 3> &coords)
{
    PolyExpr r = f;
    for (std::size_t axis = 0; axis < 3 && !r.is_zero(); ++axis)
        for (int k = 0; k < gamma[axis] && !r.is_zero(); ++k)
            r = r.derivative(coords[axis]);
    return r;
}

void check_bounds(const ScalarDiffOp &op)
{
    if (op.order() > kMaxDerivativeOrder)
        throw DegreeBoundExceeded("derivative order " + std::to_string(op.order()) + " exceeds bound");
    if (op.coordinate_degree() > kMaxCoordinateDegree)
        throw DegreeBoundExceeded("coefficient degree " + std::to_string(op.coordinate_degree()) +
                                  " exceeds bound");
}

} // namespace

ScalarDiffOp::ScalarDiffOp(RegistryPtr registry)
    : registry_(std::move(registry))
{
    coordinate_indices(registry_);
}

ScalarDiffOp::ScalarDiffOp(const PolyExpr &f)
    : ScalarDiffOp(f.registry())
{
    add_term({0, 0, 0}, f);
}

ScalarDiffOp ScalarDiffOp::partial(RegistryPtr registry, Axis axis, int order)
{
    DerivIndex index{0, 0, 0};
    index[static_cast<std::size_t>(axis)] = order;
    return term(PolyExpr(std::move(registry), Scalar(1)), index);
}

ScalarDiffOp ScalarDiffOp::term(const PolyExpr &coeff, DerivIndex index)
{
    for (int a : index)
        if (a < 0)
            throw std::invalid_argument("negative derivative order");
    ScalarDiffOp op(coeff.registry());
    op.add_term(index, coeff);
    return op;
}

void ScalarDiffOp::add_term(const DerivIndex &index, const PolyExpr &coeff)
{
    if (coeff.registry() != registry_)
        throw RegistryMismatch("operator coefficient over a different registry");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::optional<PolyExpr> ScalarDiffOp::as_multiplier() const
{
    if (terms_.empty())
        return PolyExpr(registry_);
    if (terms_.size() == 1 && terms_.begin()->first == DerivIndex{0, 0, 0})
        return terms_.begin()->second;
    return std::nullopt;
}

int ScalarDiffOp::order() const
{
    int best = 0;
    for (const auto &term : terms_)
        best = std::max(best, total(term.first));
    return best;
}

int ScalarDiffOp::coordinate_degree() const
{
    auto c = coordinate_indices(registry_);
    std::vector<std::size_t> idx(c.begin(), c.end());
    int best = 0;
    for (const auto &term : terms_)
        best = std::max(best, term.second.degree_in(idx));
    return best;
}

ScalarDiffOp ScalarDiffOp::operator-() const
{
    ScalarDiffOp r(registry_);
    for (const auto &[index, coeff] : terms_)
        r.terms_.emplace(index, -coeff);
    return r;
}

ScalarDiffOp &ScalarDiffOp::operator+=(const ScalarDiffOp &o)
{
    for (const auto &[index, coeff] : o.terms_)
        add_term(index, coeff);
    return *this;
}

ScalarDiffOp &ScalarDiffOp::operator-=(const ScalarDiffOp &o)
{
    for (const auto &[index, coeff] : o.terms_)
        add_term(index, -coeff);
    return *this;
}

ScalarDiffOp operator*(const PolyExpr &f, const ScalarDiffOp &a)
{
    ScalarDiffOp r(a.registry_);
    for (const auto &[index, coeff] : a.terms_)
        r.add_term(index, f * coeff);
    return r;
}

ScalarDiffOp operator*(const Scalar &c, const ScalarDiffOp &a)
{
    ScalarDiffOp r(a.registry_);
    for (const auto &[index, coeff] : a.terms_)
        r.add_term(index, coeff * c);
    return r;
}

bool operator==(const ScalarDiffOp &a, const ScalarDiffOp &b)
{
    if (a.registry_ != b.registry_)
        throw RegistryMismatch("operators over different registries");
    return a.terms_ == b.terms_;
}

std::string ScalarDiffOp::str() const
{
    if (terms_.empty())
        return "0";
    static constexpr const char *names[3] = {"d1", "d2", "dt"};
    std::ostringstream os;
    bool first = true;
    for (const auto &[index, coeff] : terms_) {
        std::string deriv;
        for (std::size_t axis = 0; axis < 3; ++axis) {
            if (index[axis] == 0)
                continue;
            deriv += deriv.empty() ? "" : "*";
            deriv += names[axis];
            if (index[axis] > 1)
                deriv += "^" + std::to_string(index[axis]);
        }
        std::string c = coeff.str();
        bool compound = coeff.terms().size() > 1;
        if (!first)
            os << " + ";
        if (deriv.empty())
            os << (compound ? "(" + c + ")" : c);
        else if (c == "1")
            os << deriv;
        else
            os << (compound ? "(" + c + ")" : c) << "*" << deriv;
        first = false;
    }
    return os.str();
}

ScalarDiffOp compose(const ScalarDiffOp &a, const ScalarDiffOp &b)
{
    if (a.registry() != b.registry())
        throw RegistryMismatch("operators over different registries");
    const auto coords = coordinate_indices(a.registry());
    ScalarDiffOp r(a.registry());
    for (const auto &[alpha, f] : a.terms()) {
        for (const auto &[beta, g] : b.terms()) {
            // d^alpha o g = sum_{gamma <= alpha} C(alpha, gamma) (d^gamma g) d^(alpha - gamma)
            for (int g0 = 0; g0 <= alpha[0]; ++g0)
                for (int g1 = 0; g1 <= alpha[1]; ++g1)
                    for (int g2 = 0; g2 <= alpha[2]; ++g2) {
                        DerivIndex gamma{g0, g1, g2};
                        PolyExpr dg = apply_derivatives(g, gamma, coords);
                        if (dg.is_zero())
                            continue;
                        long weight = binomial(alpha[0], g0) * binomial(alpha[1], g1) * binomial(alpha[2], g2);
                        DerivIndex rest{alpha[0] - g0 + beta[0], alpha[1] - g1 + beta[1], alpha[2] - g2 + beta[2]};
                        r += ScalarDiffOp::term(f * dg * Scalar(weight), rest);
                    }
        }
    }
    check_bounds(r);
    return r;
}

// ---------------------------------------------------------------------------

DiffOp::DiffOp(RegistryPtr registry, std::size_t dim)
    : registry_(std::move(registry))
    , dim_(dim)
    , entries_(dim * dim, ScalarDiffOp(registry_))
{
    if (dim == 0)
        throw ShapeError("operator dimension must be positive");
}

DiffOp::DiffOp(const ScalarDiffOp &op)
    : DiffOp(op.registry(), 1)
{
    entries_[0] = op;
}

DiffOp DiffOp::identity(RegistryPtr registry, std::size_t dim)
{
    return scalar(PolyExpr(std::move(registry), Scalar(1)), dim);
}

DiffOp DiffOp::scalar(const PolyExpr &f, std::size_t dim)
{
    DiffOp r(f.registry(), dim);
    for (std::size_t k = 0; k < dim; ++k)
        r(k, k) = ScalarDiffOp(f);
    return r;
}

DiffOp DiffOp::from_matrix(const MatExpr &m)
{
    DiffOp r(m.registry(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            r(i, j) = ScalarDiffOp(m(i, j));
    return r;
}

bool DiffOp::is_zero() const
{
    for (const auto &e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

std::optional<PolyExpr> DiffOp::as_identity_multiple() const
{
    auto q = (*this)(0, 0).as_multiplier();
    if (!q)
        return std::nullopt;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const ScalarDiffOp &e = (*this)(i, j);
            if (i == j ? !(e == ScalarDiffOp(*q)) : !e.is_zero())
                return std::nullopt;
        }
    return q;
}

DiffOp DiffOp::operator-() const
{
    DiffOp r = *this;
    for (auto &e : r.entries_)
        e = -e;
    return r;
}

DiffOp &DiffOp::operator+=(const DiffOp &o)
{
    if (dim_ != o.dim_)
        throw ShapeError("operator dimensions differ");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += o.entries_[k];
    return *this;
}

DiffOp &DiffOp::operator-=(const DiffOp &o)
{
    if (dim_ != o.dim_)
        throw ShapeError("operator dimensions differ");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= o.entries_[k];
    return *this;
}

DiffOp operator*(const PolyExpr &f, const DiffOp &a)
{
    DiffOp r = a;
    for (auto &e : r.entries_)
        e = f * e;
    return r;
}

DiffOp operator*(const Scalar &c, const DiffOp &a)
{
    DiffOp r = a;
    for (auto &e : r.entries_)
        e = c * e;
    return r;
}

bool operator==(const DiffOp &a, const DiffOp &b)
{
    if (a.dim_ != b.dim_)
        return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (!(a.entries_[k] == b.entries_[k]))
            return false;
    return true;
}

std::string DiffOp::str() const
{
    if (dim_ == 1)
        return entries_[0].str();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < dim_; ++j)
            os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

DiffOp compose(const DiffOp &a, const DiffOp &b)
{
    if (a.dim() != b.dim())
        throw ShapeError("operator dimensions differ");
    const std::size_t n = a.dim();
    DiffOp r(a.registry(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += compose(a(i, k), b(k, j));
        }
    return r;
}

DiffOp bracket(const DiffOp &a, const DiffOp &b) { return compose(a, b) - compose(b, a); }

namespace {

/// Rewrites every d^alpha of `a` as prod_axis D_axis^alpha_axis and
/// multiplies by the transformed coefficient.
template <typename CoeffMap>
DiffOp rewrite_derivatives(const DiffOp &a, const std::array<ScalarDiffOp, 3> &images, CoeffMap &&coeff_map)
{
    // Powers of each image, computed lazily.
    std::array<std::vector<ScalarDiffOp>, 3> powers;
    auto power = [&](std::size_t axis, int k) -> const ScalarDiffOp & {
        auto &list = powers[axis];
        if (list.empty())
            list.push_back(ScalarDiffOp(PolyExpr(a.registry(), Scalar(1))));
        while (static_cast<int>(list.size()) <= k)
            list.push_back(compose(list.back(), images[axis]));
        return list[static_cast<std::size_t>(k)];
    };

    DiffOp r(a.registry(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            ScalarDiffOp out(a.registry());
            for (const auto &[alpha, f] : a(i, j).terms()) {
                ScalarDiffOp d = compose(compose(power(0, alpha[0]), power(1, alpha[1])), power(2, alpha[2]));
                out += coeff_map(f) * d;
            }
            r(i, j) = out;
        }
    return r;
}

} // namespace

DiffOp conjugate_phase(const DiffOp &a, const PolyExpr &theta)
{
    if (theta.registry() != a.registry())
        throw RegistryMismatch("phase over a different registry");
    const auto coords = coordinate_indices(a.registry());
    const Scalar i = Scalar::imaginary_unit();
    std::array<ScalarDiffOp, 3> images{ScalarDiffOp(a.registry()), ScalarDiffOp(a.registry()),
                                       ScalarDiffOp(a.registry())};
    for (std::size_t axis = 0; axis < 3; ++axis)
        images[axis] = ScalarDiffOp::partial(a.registry(), static_cast<Axis>(axis)) +
                       ScalarDiffOp(theta.derivative(coords[axis]) * i);
    return rewrite_derivatives(a, images, [](const PolyExpr &f) { return f; });
}

DiffOp conjugate_phase(const DiffOp &a, const ScalarDiffOp &theta)
{
    auto f = theta.as_multiplier();
    if (!f)
        throw MalformedPhase("phase '" + theta.str() + "' contains derivatives");
    return conjugate_phase(a, *f);
}

DiffOp conjugate_shift(const DiffOp &a, const PolyExpr &v1, const PolyExpr &v2)
{
    const auto &reg = a.registry();
    const auto coords = coordinate_indices(reg);
    for (const PolyExpr *v : {&v1, &v2})
        for (auto idx : coords)
            if (v->depends_on(idx))
                throw BadParameter("shift velocity must not depend on coordinates");

    std::array<ScalarDiffOp, 3> images{ScalarDiffOp::partial(reg, Axis::X1), ScalarDiffOp::partial(reg, Axis::X2),
                                       ScalarDiffOp::partial(reg, Axis::T)};
    images[2] -= v1 * ScalarDiffOp::partial(reg, Axis::X1);
    images[2] -= v2 * ScalarDiffOp::partial(reg, Axis::X2);

    const PolyExpr t = PolyExpr::symbol(reg, "t");
    const PolyExpr x1_image = PolyExpr::symbol(reg, "x1") + v1 * t;
    const PolyExpr x2_image = PolyExpr::symbol(reg, "x2") + v2 * t;
    return rewrite_derivatives(a, images, [&](const PolyExpr &f) {
        return f.substitute(coords[0], x1_image).substitute(coords[1], x2_image);
    });
}

} // namespace galext
