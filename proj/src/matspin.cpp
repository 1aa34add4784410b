#include "galext/matspin.hpp"

#include <bit>
#include <sstream>

namespace galext {

MatExpr::MatExpr(RegistryPtr registry, std::size_t dim)
    : registry_(std::move(registry))
    , dim_(dim)
    , entries_(dim * dim, PolyExpr(registry_))
{
    if (dim == 0)
        throw ShapeError("matrix dimension must be positive");
}

MatExpr MatExpr::identity(RegistryPtr registry, std::size_t dim)
{
    MatExpr m(std::move(registry), dim);
    for (std::size_t k = 0; k < dim; ++k)
        m(k, k) = PolyExpr(m.registry_, Scalar(1));
    return m;
}

MatExpr MatExpr::pauli(RegistryPtr registry, int k)
{
    MatExpr m(std::move(registry), 2);
    const auto &reg = m.registry_;
    const Scalar i = Scalar::imaginary_unit();
    switch (k) {
    case 1:
        m(0, 1) = PolyExpr(reg, Scalar(1));
        m(1, 0) = PolyExpr(reg, Scalar(1));
        break;
    case 2:
        m(0, 1) = PolyExpr(reg, -i);
        m(1, 0) = PolyExpr(reg, i);
        break;
    case 3:
        m(0, 0) = PolyExpr(reg, Scalar(1));
        m(1, 1) = PolyExpr(reg, Scalar(-1));
        break;
    default:
        throw IndexError("Pauli index must be 1, 2 or 3");
    }
    return m;
}

MatExpr MatExpr::gamma_projector(RegistryPtr registry)
{
    MatExpr m(std::move(registry), 2);
    m(0, 0) = PolyExpr(m.registry_, Scalar(1));
    return m;
}

bool MatExpr::is_zero() const
{
    for (const auto &e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

MatExpr &MatExpr::operator+=(const MatExpr &o)
{
    if (dim_ != o.dim_)
        throw ShapeError("matrix dimensions differ");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += o.entries_[k];
    return *this;
}

MatExpr &MatExpr::operator-=(const MatExpr &o)
{
    if (dim_ != o.dim_)
        throw ShapeError("matrix dimensions differ");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= o.entries_[k];
    return *this;
}

MatExpr operator*(const MatExpr &a, const MatExpr &b)
{
    if (a.dim_ != b.dim_)
        throw ShapeError("matrix dimensions differ");
    MatExpr r(a.registry_, a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            const PolyExpr &aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < a.dim_; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

MatExpr operator*(const PolyExpr &c, const MatExpr &a)
{
    MatExpr r = a;
    for (auto &e : r.entries_)
        e = c * e;
    return r;
}

MatExpr operator*(const Scalar &c, const MatExpr &a)
{
    MatExpr r = a;
    for (auto &e : r.entries_)
        e *= c;
    return r;
}

bool operator==(const MatExpr &a, const MatExpr &b)
{
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

MatExpr MatExpr::dagger() const
{
    MatExpr r(registry_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            r(j, i) = (*this)(i, j).conj();
    return r;
}

std::string MatExpr::str() const
{
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

MatExpr commutator(const MatExpr &a, const MatExpr &b) { return a * b - b * a; }

MatExpr kron(const MatExpr &a, const MatExpr &b)
{
    const std::size_t n = a.dim(), k = b.dim();
    MatExpr r(a.registry(), n * k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t q = 0; q < k; ++q)
                    r(i * k + p, j * k + q) = a(i, j) * b(p, q);
        }
    return r;
}

MatExpr embed_factor(const MatExpr &factor, std::size_t slot, std::size_t rank, const MatExpr &filler)
{
    if (rank == 0 || slot < 1 || slot > rank)
        throw IndexError("slot " + std::to_string(slot) + " outside 1.." + std::to_string(rank));
    if (factor.dim() != 2 || filler.dim() != 2)
        throw ShapeError("slot factors must be 2x2");
    MatExpr r = slot == 1 ? factor : filler;
    for (std::size_t s = 2; s <= rank; ++s)
        r = kron(r, s == slot ? factor : filler);
    return r;
}

// ---------------------------------------------------------------------------

SymBasis::SymBasis(std::size_t rank)
    : rank_(rank)
{
    if (rank == 0 || rank > 6)
        throw BadRank("multispinor rank must be in 1..6");
}

std::size_t SymBasis::lowered_count(std::size_t index) const
{
    return static_cast<std::size_t>(std::popcount(index));
}

std::vector<int> SymBasis::embedding(std::size_t k) const
{
    std::vector<int> v(full_dim(), 0);
    for (std::size_t idx = 0; idx < v.size(); ++idx)
        if (lowered_count(idx) == k)
            v[idx] = 1;
    return v;
}

MatExpr restrict_symmetric(const MatExpr &a, const SymBasis &basis)
{
    if (a.dim() != basis.full_dim())
        throw ShapeError("operator dimension does not match the multispinor rank");
    const std::size_t n = basis.size();
    const std::size_t full = basis.full_dim();
    // Representative index of basis vector j: the lowest j bits set.
    auto representative = [](std::size_t j) { return (std::size_t{1} << j) - 1; };

    MatExpr r(a.registry(), n);
    for (std::size_t k = 0; k < n; ++k) {
        // image = A * e_k
        std::vector<PolyExpr> image(full, PolyExpr(a.registry()));
        for (std::size_t row = 0; row < full; ++row)
            for (std::size_t col = 0; col < full; ++col)
                if (basis.lowered_count(col) == k && !a(row, col).is_zero())
                    image[row] += a(row, col);
        for (std::size_t j = 0; j < n; ++j)
            r(j, k) = image[representative(j)];
        for (std::size_t row = 0; row < full; ++row)
            if (!(image[row] == r(basis.lowered_count(row), k)))
                throw NotSymmetricInvariant("operator maps symmetric basis vector " + std::to_string(k) +
                                            " outside the symmetric subspace");
    }
    return r;
}

} // namespace galext
