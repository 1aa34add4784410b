#pragma once

#include "galext/errors.hpp"
#include "galext/scalar.hpp"

#include <initializer_list>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galext {

struct Symbol
{
    std::string name;
    bool invertible = false;
};

/**
 * Immutable, name-sorted set of declared symbols.
 *
 * Polynomials index exponents by position in this registry, so two
 * polynomials can only be combined when they share the same registry object.
 */
class SymbolRegistry
{
public:
    explicit SymbolRegistry(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Symbol &symbol(std::size_t index) const { return symbols_.at(index); }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownSymbol.
    std::size_t index_of(std::string_view name) const;

private:
    std::vector<Symbol> symbols_;
};

using RegistryPtr = std::shared_ptr<const SymbolRegistry>;

RegistryPtr make_registry(std::vector<Symbol> symbols);

/// Registry used for generator realizations and field checks:
/// c, d, lambda, m (invertible), t, v1, v2, x1, x2.
RegistryPtr physics_registry();

/// Exponent vector indexed by registry position.
using Monomial = std::vector<int>;

/**
 * Multivariate Laurent-capable polynomial with Gaussian-rational coefficients.
 *
 * Terms are kept in a map keyed by exponent vector, ordered descending
 * lexicographically over name-sorted symbols, with no zero coefficients.
 * The representation is therefore canonical.
 */
class PolyExpr
{
public:
    explicit PolyExpr(RegistryPtr registry);
    PolyExpr(RegistryPtr registry, const Scalar &constant);

    static PolyExpr symbol(RegistryPtr registry, std::string_view name, int exponent = 1);
    static PolyExpr monomial(RegistryPtr registry, const Monomial &exponents, const Scalar &coeff);

    const RegistryPtr &registry() const { return registry_; }
    const std::map<Monomial, Scalar, std::greater<>> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when the polynomial is a bare Scalar (possibly zero).
    bool is_constant() const;
    /// Constant term (zero if absent).
    Scalar constant_term() const;
    /// Coefficient times a single monomial whose symbols are all invertible.
    bool is_unit() const;
    /// True if any term has a nonzero exponent of the named symbol.
    bool depends_on(std::size_t symbol_index) const;
    /// Largest total degree over the given symbol indices.
    int degree_in(const std::vector<std::size_t> &symbol_indices) const;

    PolyExpr conj() const;
    PolyExpr operator-() const;
    PolyExpr &operator+=(const PolyExpr &o);
    PolyExpr &operator-=(const PolyExpr &o);
    PolyExpr &operator*=(const PolyExpr &o);
    PolyExpr &operator*=(const Scalar &c);

    friend PolyExpr operator+(PolyExpr a, const PolyExpr &b) { return a += b; }
    friend PolyExpr operator-(PolyExpr a, const PolyExpr &b) { return a -= b; }
    friend PolyExpr operator*(const PolyExpr &a, const PolyExpr &b);
    friend PolyExpr operator*(PolyExpr a, const Scalar &c) { return a *= c; }
    friend PolyExpr operator*(const Scalar &c, PolyExpr a) { return a *= c; }

    friend bool operator==(const PolyExpr &a, const PolyExpr &b);

    /// Divide by symbol^k; the symbol must be registered invertible.
    PolyExpr div_symbol(std::string_view name, int k = 1) const;
    /// Inverse of a unit (see is_unit); throws NotInvertible otherwise.
    PolyExpr unit_inverse() const;
    /// Partial derivative with respect to a registry symbol.
    PolyExpr derivative(std::size_t symbol_index) const;
    /// Replace a symbol by a polynomial; the symbol must occur with
    /// non-negative exponents only.
    PolyExpr substitute(std::size_t symbol_index, const PolyExpr &value) const;

    /// Deterministic rendering in canonical term order, e.g. "t + 3 - 1/2*i*m^-1*x1^2".
    std::string str() const;

private:
    void add_term(const Monomial &mono, const Scalar &coeff);
    void require_same(const PolyExpr &o) const;

    RegistryPtr registry_;
    std::map<Monomial, Scalar, std::greater<>> terms_;
};

inline std::ostream &operator<<(std::ostream &os, const PolyExpr &p) { return os << p.str(); }

/**
 * Parse a small polynomial literal such as "c", "-1/2*lambda", "3*m^-1 + i*c".
 * Terms are products of numeric literals, "i" and registry symbols with
 * optional integer exponents. Throws std::invalid_argument or UnknownSymbol.
 */
PolyExpr parse_poly(const RegistryPtr &registry, std::string_view text);

} // namespace galext
