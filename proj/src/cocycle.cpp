#include "galext/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galext {

std::size_t bareiss_rank(ScalarMatrix m, EliminationOrder order)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::size_t> column_order(cols);
    std::iota(column_order.begin(), column_order.end(), 0);
    if (order == EliminationOrder::Reverse)
        std::reverse(column_order.begin(), column_order.end());

    Scalar previous(1);
    std::size_t rank = 0;
    for (std::size_t col : column_order) {
        if (rank == rows)
            break;
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        const Scalar &p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            Scalar factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                m[r][c] = (p * m[r][c] - factor * m[rank][c]) / previous;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

RowEchelon reduced_row_echelon(ScalarMatrix m, std::size_t columns)
{
    RowEchelon out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[rank]);
        Scalar inv = m[rank][col].inverse();
        for (auto &x : m[rank])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero())
                continue;
            Scalar factor = m[r][col];
            for (std::size_t c = 0; c < columns; ++c)
                m[r][c] -= factor * m[rank][c];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

ScalarMatrix nullspace(const ScalarMatrix &m, std::size_t columns)
{
    RowEchelon ech = reduced_row_echelon(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    ScalarMatrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(columns);
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = -ech.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> names)
    : names_(std::move(names))
    , constants_(names_.size() * names_.size() * names_.size())
{
    for (std::size_t a = 0; a < names_.size(); ++a)
        for (std::size_t b = a + 1; b < names_.size(); ++b)
            if (names_[a] == names_[b])
                throw std::invalid_argument("duplicate generator '" + names_[a] + "'");
}

std::optional<std::size_t> LieAlgebraSpec::find(const std::string &name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

void LieAlgebraSpec::set_bracket(std::size_t i, std::size_t j, const std::vector<std::pair<std::size_t, Scalar>> &rhs)
{
    if (i >= dim() || j >= dim())
        throw std::out_of_range("generator index out of range");
    if (i == j)
        throw std::invalid_argument("bracket of a generator with itself is zero");
    for (std::size_t k = 0; k < dim(); ++k) {
        constants_[index(i, j, k)] = Scalar();
        constants_[index(j, i, k)] = Scalar();
    }
    for (const auto &[k, c] : rhs) {
        if (k >= dim())
            throw std::out_of_range("generator index out of range");
        constants_[index(i, j, k)] += c;
        constants_[index(j, i, k)] -= c;
    }
}

const Scalar &LieAlgebraSpec::constant(std::size_t i, std::size_t j, std::size_t k) const
{
    return constants_.at(index(i, j, k));
}

bool LieAlgebraSpec::bracket_is_zero(std::size_t i, std::size_t j) const
{
    for (std::size_t k = 0; k < dim(); ++k)
        if (!constant(i, j, k).is_zero())
            return false;
    return true;
}

LieAlgebraSpec LieAlgebraSpec::rescaled(const std::vector<Scalar> &alpha) const
{
    if (alpha.size() != dim())
        throw std::invalid_argument("one scale factor per generator required");
    // [a_i X_i, a_j X_j] = a_i a_j c^k_ij X_k = (a_i a_j / a_k) c^k_ij (a_k X_k)
    LieAlgebraSpec out(names_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k)
                out.constants_[index(i, j, k)] = alpha[i] * alpha[j] * constant(i, j, k) / alpha[k];
    return out;
}

JacobiResult jacobi_check(const LieAlgebraSpec &a)
{
    const std::size_t n = a.dim();
    auto term = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        Scalar sum;
        for (std::size_t m = 0; m < n; ++m)
            if (!a.constant(i, j, m).is_zero())
                sum += a.constant(i, j, m) * a.constant(m, k, l);
        return sum;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar v = term(i, j, k, l) + term(j, k, i, l) + term(k, i, j, l);
                    if (!v.is_zero())
                        return {false, std::array<std::size_t, 4>{i, j, k, l}, v};
                }
    return {};
}

namespace {

/// Index of unknown beta(i, j), i < j, in the pair ordering.
class PairIndex
{
public:
    explicit PairIndex(std::size_t n)
        : n_(n)
    {}
    std::size_t count() const { return n_ * (n_ - 1) / 2; }
    std::size_t operator()(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

private:
    std::size_t n_;
};

/// Cocycle condition rows: for each i<j<k,
/// beta([X_i,X_j],X_k) + beta([X_j,X_k],X_i) + beta([X_k,X_i],X_j) = 0.
ScalarMatrix cocycle_system(const LieAlgebraSpec &a)
{
    const std::size_t n = a.dim();
    PairIndex pair(n);
    ScalarMatrix rows;
    auto accumulate = [&](std::vector<Scalar> &row, std::size_t i, std::size_t j, std::size_t k) {
        for (std::size_t m = 0; m < n; ++m) {
            const Scalar &c = a.constant(i, j, m);
            if (c.is_zero() || m == k)
                continue;
            if (m < k)
                row[pair(m, k)] += c;
            else
                row[pair(k, m)] -= c;
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<Scalar> row(pair.count());
                accumulate(row, i, j, k);
                accumulate(row, j, k, i);
                accumulate(row, k, i, j);
                if (std::any_of(row.begin(), row.end(), [](const Scalar &s) { return !s.is_zero(); }))
                    rows.push_back(std::move(row));
            }
    return rows;
}

/// Coboundaries beta_ij = f([X_i, X_j]); one row per functional basis vector f = e_k.
ScalarMatrix coboundary_vectors(const LieAlgebraSpec &a)
{
    const std::size_t n = a.dim();
    PairIndex pair(n);
    ScalarMatrix rows;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> row(pair.count());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                row[pair(i, j)] = a.constant(i, j, k);
        rows.push_back(std::move(row));
    }
    return rows;
}

ScalarMatrix to_form(const std::vector<Scalar> &v, std::size_t n)
{
    PairIndex pair(n);
    ScalarMatrix beta(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            beta[i][j] = v[pair(i, j)];
            beta[j][i] = -v[pair(i, j)];
        }
    return beta;
}

} // namespace

ExtensionSpace central_extensions(const LieAlgebraSpec &a)
{
    if (!jacobi_check(a).ok)
        throw std::invalid_argument("structure constants violate the Jacobi identity");
    const std::size_t n = a.dim();
    PairIndex pair(n);
    const std::size_t unknowns = pair.count();
    ExtensionSpace out;
    if (unknowns == 0)
        return out;

    ScalarMatrix system = cocycle_system(a);
    ScalarMatrix cocycles = nullspace(system, unknowns);
    RowEchelon coboundaries = reduced_row_echelon(coboundary_vectors(a), unknowns);
    out.cocycle_dim = cocycles.size();
    out.coboundary_dim = coboundaries.rows.size();
    out.h2 = out.cocycle_dim - out.coboundary_dim;

    std::size_t rank_system = bareiss_rank(system, EliminationOrder::Reverse);
    std::size_t rank_coboundary = bareiss_rank(coboundary_vectors(a), EliminationOrder::Reverse);
    out.h2_cross_check = unknowns - rank_system - rank_coboundary;

    // Reduce every cocycle against the coboundary pivots, then echelonize.
    for (auto &v : cocycles)
        for (std::size_t r = 0; r < coboundaries.pivots.size(); ++r) {
            Scalar factor = v[coboundaries.pivots[r]];
            if (factor.is_zero())
                continue;
            for (std::size_t c = 0; c < unknowns; ++c)
                v[c] -= factor * coboundaries.rows[r][c];
        }
    RowEchelon reps = reduced_row_echelon(std::move(cocycles), unknowns);
    if (reps.rows.size() != out.h2)
        throw std::logic_error("representative count disagrees with z - b");
    for (const auto &v : reps.rows)
        out.representatives.push_back(to_form(v, n));
    return out;
}

bool is_cocycle(const LieAlgebraSpec &a, const ScalarMatrix &beta)
{
    const std::size_t n = a.dim();
    auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
        Scalar sum;
        for (std::size_t m = 0; m < n; ++m)
            sum += a.constant(i, j, m) * beta[m][k];
        return sum;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!(term(i, j, k) + term(j, k, i) + term(k, i, j)).is_zero())
                    return false;
    return true;
}

} // namespace galext
