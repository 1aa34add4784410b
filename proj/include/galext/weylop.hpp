#pragma once

#include "galext/matspin.hpp"
#include "galext/poly.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace galext {

enum class Axis : std::size_t { X1 = 0, X2 = 1, T = 2 };

/// Derivative orders (a1, a2, at) of d/dx1, d/dx2, d/dt.
using DerivIndex = std::array<int, 3>;

/// Limits that catch runaway expressions; every computation in the toolkit
/// stays far below them.
inline constexpr int kMaxCoordinateDegree = 8;
inline constexpr int kMaxDerivativeOrder = 6;

/**
 * Scalar differential operator sum_a f_a(x1, x2, t, params) d^a in normal
 * form: every derivative stands to the right of its coefficient.
 *
 * The registry must declare x1, x2 and t; those symbols are the coordinates.
 */
class ScalarDiffOp
{
public:
    explicit ScalarDiffOp(RegistryPtr registry);
    /// Multiplication operator by f.
    explicit ScalarDiffOp(const PolyExpr &f);

    static ScalarDiffOp partial(RegistryPtr registry, Axis axis, int order = 1);
    static ScalarDiffOp term(const PolyExpr &coeff, DerivIndex index);

    const RegistryPtr &registry() const { return registry_; }
    const std::map<DerivIndex, PolyExpr, std::greater<>> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// The coefficient when the operator has no derivative part.
    std::optional<PolyExpr> as_multiplier() const;
    /// Total derivative order.
    int order() const;
    /// Largest coefficient degree in x1, x2, t.
    int coordinate_degree() const;

    ScalarDiffOp operator-() const;
    ScalarDiffOp &operator+=(const ScalarDiffOp &o);
    ScalarDiffOp &operator-=(const ScalarDiffOp &o);
    friend ScalarDiffOp operator+(ScalarDiffOp a, const ScalarDiffOp &b) { return a += b; }
    friend ScalarDiffOp operator-(ScalarDiffOp a, const ScalarDiffOp &b) { return a -= b; }
    /// Left multiplication by a coefficient.
    friend ScalarDiffOp operator*(const PolyExpr &f, const ScalarDiffOp &a);
    friend ScalarDiffOp operator*(const Scalar &c, const ScalarDiffOp &a);
    friend bool operator==(const ScalarDiffOp &a, const ScalarDiffOp &b);

    /// "coeff*d1^2*dt" terms in canonical order; "0" when empty.
    std::string str() const;

private:
    void add_term(const DerivIndex &index, const PolyExpr &coeff);

    RegistryPtr registry_;
    std::map<DerivIndex, PolyExpr, std::greater<>> terms_;
};

/// Leibniz normal-form product a o b.
ScalarDiffOp compose(const ScalarDiffOp &a, const ScalarDiffOp &b);

/// Square matrix of scalar differential operators.
class DiffOp
{
public:
    DiffOp(RegistryPtr registry, std::size_t dim);
    /// 1x1 operator.
    explicit DiffOp(const ScalarDiffOp &op);

    static DiffOp identity(RegistryPtr registry, std::size_t dim);
    /// f * Id.
    static DiffOp scalar(const PolyExpr &f, std::size_t dim);
    /// Constant (coordinate-free) matrix lifted to an operator.
    static DiffOp from_matrix(const MatExpr &m);

    std::size_t dim() const { return dim_; }
    const RegistryPtr &registry() const { return registry_; }
    ScalarDiffOp &operator()(std::size_t row, std::size_t col) { return entries_.at(row * dim_ + col); }
    const ScalarDiffOp &operator()(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }

    bool is_zero() const;
    /// q when the operator equals q * Id with q free of derivatives.
    std::optional<PolyExpr> as_identity_multiple() const;

    DiffOp operator-() const;
    DiffOp &operator+=(const DiffOp &o);
    DiffOp &operator-=(const DiffOp &o);
    friend DiffOp operator+(DiffOp a, const DiffOp &b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp &b) { return a -= b; }
    friend DiffOp operator*(const PolyExpr &f, const DiffOp &a);
    friend DiffOp operator*(const Scalar &c, const DiffOp &a);
    friend bool operator==(const DiffOp &a, const DiffOp &b);

    std::string str() const;

private:
    RegistryPtr registry_;
    std::size_t dim_;
    std::vector<ScalarDiffOp> entries_;
};

DiffOp compose(const DiffOp &a, const DiffOp &b);
/// a o b - b o a.
DiffOp bracket(const DiffOp &a, const DiffOp &b);

/// exp(-i theta) o A o exp(i theta), using d_j -> d_j + i (d_j theta).
DiffOp conjugate_phase(const DiffOp &a, const PolyExpr &theta);
/// Same, with the phase given as an operator; throws MalformedPhase if it
/// carries derivatives.
DiffOp conjugate_phase(const DiffOp &a, const ScalarDiffOp &theta);

/**
 * Coordinate shift conjugation for (Tf)(x, t) = f(x - v t, t):
 * returns T^-1 o A o T, i.e. x_i -> x_i + v_i t, d_i -> d_i and
 * d_t -> d_t - v1 d_1 - v2 d_2. The velocity must be coordinate-free.
 */
DiffOp conjugate_shift(const DiffOp &a, const PolyExpr &v1, const PolyExpr &v2);

} // namespace galext
