#pragma once

// Seeded generators for property tests.

#include "galext/poly.hpp"
#include "galext/weylop.hpp"

#include <random>
#include <string>
#include <vector>

namespace galext::testing {

class ExprGen
{
public:
    explicit ExprGen(std::uint64_t seed, RegistryPtr registry = physics_registry())
        : rng_(seed)
        , registry_(std::move(registry))
    {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Scalar scalar()
    {
        return Scalar(mpq_class(uniform(-5, 5), uniform(1, 4)), mpq_class(uniform(-3, 3), uniform(1, 3)));
    }

    /// Polynomial with up to `terms` terms over `symbols`, exponents in
    /// [0, max_exp] (m may also appear with exponent -1).
    PolyExpr poly(const std::vector<std::string> &symbols, int terms, int max_exp)
    {
        PolyExpr p(registry_);
        int count = uniform(0, terms);
        for (int k = 0; k < count; ++k) {
            Monomial mono(registry_->size(), 0);
            for (const auto &name : symbols) {
                std::size_t idx = registry_->index_of(name);
                int lo = registry_->symbol(idx).invertible ? -1 : 0;
                mono[idx] = uniform(lo, max_exp);
            }
            p += PolyExpr::monomial(registry_, mono, scalar());
        }
        return p;
    }

    /// Random scalar differential operator with coordinate degree <= deg
    /// and derivative order <= order (per axis, spatial + time).
    ScalarDiffOp scalar_op(int terms, int deg, int order)
    {
        ScalarDiffOp op(registry_);
        int count = uniform(1, terms);
        for (int k = 0; k < count; ++k) {
            DerivIndex idx{0, 0, 0};
            int budget = order;
            for (auto &a : idx) {
                a = uniform(0, budget);
                budget -= a;
            }
            Monomial mono(registry_->size(), 0);
            int dbudget = deg;
            for (const char *name : {"x1", "x2", "t"}) {
                int e = uniform(0, dbudget);
                mono[registry_->index_of(name)] = e;
                dbudget -= e;
            }
            if (uniform(0, 2) == 0)
                mono[registry_->index_of("m")] = uniform(-1, 1);
            op += ScalarDiffOp::term(PolyExpr::monomial(registry_, mono, scalar()), idx);
        }
        return op;
    }

    DiffOp op(std::size_t dim, int terms, int deg, int order)
    {
        DiffOp r(registry_, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                r(i, j) = scalar_op(terms, deg, order);
        return r;
    }

    const RegistryPtr &registry() const { return registry_; }
    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    RegistryPtr registry_;
};

} // namespace galext::testing
