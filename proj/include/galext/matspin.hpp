#pragma once

#include "galext/poly.hpp"

#include <vector>

namespace galext {

/// Square matrix with PolyExpr entries, stored dense row-major.
class MatExpr
{
public:
    MatExpr(RegistryPtr registry, std::size_t dim);

    static MatExpr identity(RegistryPtr registry, std::size_t dim);
    static MatExpr zero(RegistryPtr registry, std::size_t dim) { return MatExpr(std::move(registry), dim); }
    /// Pauli matrix sigma_k, k in {1,2,3}.
    static MatExpr pauli(RegistryPtr registry, int k);
    /// Gamma = (1 + sigma_3) / 2.
    static MatExpr gamma_projector(RegistryPtr registry);

    std::size_t dim() const { return dim_; }
    const RegistryPtr &registry() const { return registry_; }
    PolyExpr &operator()(std::size_t row, std::size_t col) { return entries_.at(row * dim_ + col); }
    const PolyExpr &operator()(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }

    bool is_zero() const;

    MatExpr &operator+=(const MatExpr &o);
    MatExpr &operator-=(const MatExpr &o);
    friend MatExpr operator+(MatExpr a, const MatExpr &b) { return a += b; }
    friend MatExpr operator-(MatExpr a, const MatExpr &b) { return a -= b; }
    friend MatExpr operator*(const MatExpr &a, const MatExpr &b);
    friend MatExpr operator*(const PolyExpr &c, const MatExpr &a);
    friend MatExpr operator*(const Scalar &c, const MatExpr &a);
    friend bool operator==(const MatExpr &a, const MatExpr &b);

    /// Conjugate transpose.
    MatExpr dagger() const;

    std::string str() const;

private:
    RegistryPtr registry_;
    std::size_t dim_;
    std::vector<PolyExpr> entries_;
};

MatExpr commutator(const MatExpr &a, const MatExpr &b);
/// Kronecker product a (x) b; a carries the more significant index.
MatExpr kron(const MatExpr &a, const MatExpr &b);

/**
 * Kronecker product over `rank` two-dimensional slots with `factor` in slot
 * `slot` (1-based) and `filler` in every other slot.
 */
MatExpr embed_factor(const MatExpr &factor, std::size_t slot, std::size_t rank, const MatExpr &filler);

/**
 * Unnormalized basis of the totally symmetric subspace of (C^2)^{(x)N}.
 *
 * Basis vector k is the sum of all product states with exactly k slots in
 * spinor state 2 (every weight is 1). Slot 1 is the most significant bit of
 * the 2^N index; bit value 0 is spinor component 1.
 */
class SymBasis
{
public:
    explicit SymBasis(std::size_t rank);

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return rank_ + 1; }
    std::size_t full_dim() const { return std::size_t{1} << rank_; }
    /// Number of component-2 slots of a product-state index.
    std::size_t lowered_count(std::size_t index) const;
    /// 0/1 embedding of basis vector k into the 2^N space.
    std::vector<int> embedding(std::size_t k) const;

private:
    std::size_t rank_;
};

/// Matrix of A in the symmetric basis (columns are images of basis vectors).
/// Throws NotSymmetricInvariant when A leaks out of the subspace.
MatExpr restrict_symmetric(const MatExpr &a, const SymBasis &basis);

} // namespace galext
