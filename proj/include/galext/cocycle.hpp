#pragma once

#include "galext/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace galext {

/// Dense matrix of Gaussian rationals, row-major rows.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

enum class EliminationOrder { Forward, Reverse };

/// Rank by fraction-free (Bareiss) elimination, scanning pivot columns in
/// the given order.
std::size_t bareiss_rank(ScalarMatrix m, EliminationOrder order = EliminationOrder::Forward);

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
struct RowEchelon
{
    ScalarMatrix rows;
    std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(ScalarMatrix m, std::size_t columns);

/// Basis of {x : m x = 0}.
ScalarMatrix nullspace(const ScalarMatrix &m, std::size_t columns);

/**
 * Finite-dimensional Lie algebra by structure constants
 * [X_i, X_j] = sum_k c^k_ij X_k, stored densely and kept antisymmetric.
 */
class LieAlgebraSpec
{
public:
    explicit LieAlgebraSpec(std::vector<std::string> names);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string> &names() const { return names_; }
    std::optional<std::size_t> find(const std::string &name) const;

    /// Sets [X_i, X_j] (and [X_j, X_i] = -[X_i, X_j]); i != j.
    void set_bracket(std::size_t i, std::size_t j, const std::vector<std::pair<std::size_t, Scalar>> &rhs);
    const Scalar &constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// True when [X_i, X_j] = 0.
    bool bracket_is_zero(std::size_t i, std::size_t j) const;

    /// Structure constants after X_i -> alpha_i X_i.
    LieAlgebraSpec rescaled(const std::vector<Scalar> &alpha) const;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim() + j) * dim() + k; }

    std::vector<std::string> names_;
    std::vector<Scalar> constants_;
};

struct JacobiResult
{
    bool ok = true;
    /// (i, j, k, l): the X_l component of the cyclic sum for X_i, X_j, X_k.
    std::optional<std::array<std::size_t, 4>> offending;
    Scalar value;
};

/// Checks sum_cyc [[X_i, X_j], X_k] = 0 for all i < j < k.
JacobiResult jacobi_check(const LieAlgebraSpec &algebra);

/**
 * Central-extension space H^2 of a Lie algebra.
 *
 * Representatives are antisymmetric n x n arrays beta(X_i, X_j), reduced
 * against the coboundary space and brought to row echelon form over the
 * pair ordering (i < j), so the output is canonical.
 */
struct ExtensionSpace
{
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    std::size_t h2 = 0;
    /// z - b recomputed with reverse-order Bareiss ranks.
    std::size_t h2_cross_check = 0;
    std::vector<ScalarMatrix> representatives;
};

/// Throws std::invalid_argument when the algebra fails the Jacobi check.
ExtensionSpace central_extensions(const LieAlgebraSpec &algebra);

/// Evaluates the cocycle condition for beta on all triples; true if exact zero.
bool is_cocycle(const LieAlgebraSpec &algebra, const ScalarMatrix &beta);

} // namespace galext
