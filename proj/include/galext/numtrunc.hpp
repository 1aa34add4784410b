#pragma once

#include "galext/galrealize.hpp"

#include <Eigen/SparseCore>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace galext {

using cplx = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

struct NumericModel
{
    /// schrodinger, levyleblond or multispinor.
    std::string name = "schrodinger";
    int s = 1;
    int rank = 1;
};

/// Truncated oscillator realization. Basis state (n1, n2) has index n1 * n_max + n2.
struct TruncatedOperators
{
    int n_max = 0;
    double m = 1.0;
    double t = 0.0;
    /// P1 P2 H J K1 K2 M plus the primitives x1 x2 p1 p2.
    std::map<std::string, SparseOp> ops;

    std::size_t dim() const { return static_cast<std::size_t>(n_max) * static_cast<std::size_t>(n_max); }
};

/// x = (a + a^+)/sqrt 2 and p = i(a^+ - a)/sqrt 2 on one axis, a|n> = sqrt(n)|n-1>.
SparseOp ladder_position(int n_max);
SparseOp ladder_momentum(int n_max);

/// K_i = m x_i - t p_i, H = (p1^2 + p2^2)/2m, J = x1 p2 - x2 p1 + spin, M = m.
/// Throws BadParameter for m <= 0, n_max < 4 or an unknown model.
TruncatedOperators build_numeric(const NumericModel &model, double m, double t, int n_max);

struct NumericRow
{
    std::string lhs_a;
    std::string lhs_b;
    /// Max |entry| of the residual restricted to low modes.
    double projected = 0.0;
    /// Max |entry| over the whole truncated space (reported only).
    double full = 0.0;
};

struct ResidualReport
{
    int n_max = 0;
    int low_cutoff = 0;
    std::vector<NumericRow> rows;
    double max_projected = 0.0;
};

/// Residual of every table row, projected onto states with n1, n2 <= low_cutoff.
/// kappa is instantiated as 0. Requires low_cutoff < n_max.
ResidualReport residual_report(const TruncatedOperators &ops, const StructureTable &table, int low_cutoff);

struct LadderDefect
{
    /// [x, p] - i Id at the top state (D-1, D-1); equals -i D.
    cplx top;
    /// Largest |entry| anywhere else.
    double elsewhere = 0.0;
};
LadderDefect ladder_defect(int n_max);

/// Max |A - A^+|.
double hermiticity_defect(const SparseOp &a);

} // namespace galext
