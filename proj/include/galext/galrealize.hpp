#pragma once

#include "galext/cocycle.hpp"
#include "galext/weylop.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace galext {

struct GeneratorMeta
{
    std::string model;
    std::optional<int> spin;
    int rank = 1;
    PolyExpr lambda;
    /// Accumulated boost shift parameter (sum of every kappa_shift applied).
    PolyExpr shift;
};

/**
 * The seven planar Galilei generators P1 P2 H J K1 K2 M as differential
 * operators of a common dimension. M must be a coordinate-free multiple
 * of the identity (BadMass otherwise).
 */
class GeneratorSet
{
public:
    static const std::array<std::string, 7> kNames;

    GeneratorSet(std::map<std::string, DiffOp> gens, GeneratorMeta meta);

    const DiffOp &operator[](const std::string &name) const;
    const std::map<std::string, DiffOp> &gens() const { return gens_; }
    const GeneratorMeta &meta() const { return meta_; }
    const RegistryPtr &registry() const { return gens_.begin()->second.registry(); }
    std::size_t dim() const { return gens_.begin()->second.dim(); }
    /// q with M = q * Id.
    PolyExpr mass() const;

    /// Copy with one generator replaced (revalidated).
    GeneratorSet with(const std::string &name, DiffOp op) const;
    GeneratorSet with_meta(GeneratorMeta meta) const;

    friend bool operator==(const GeneratorSet &a, const GeneratorSet &b) { return a.gens_ == b.gens_; }

private:
    std::map<std::string, DiffOp> gens_;
    GeneratorMeta meta_;
};

/// P_i = -i d_i, H = -(d1^2 + d2^2)/2m, J = -i(x1 d2 - x2 d1), K_i = m x_i + i t d_i, M = m.
/// The registry must declare m (invertible), x1, x2, t.
GeneratorSet realize_schrodinger(RegistryPtr registry = physics_registry());
/// Upper component of the two-component spin s/2 field, on shell: J gains s/2.
GeneratorSet realize_levyleblond(int s, RegistryPtr registry = physics_registry());
/// Totally symmetric rank-N spinor, all-ones component: J gains N s/2. N in 1..4.
GeneratorSet realize_multispinor(int s, int rank, RegistryPtr registry = physics_registry());

/// J -> J + lambda M/m. Requires M = m Id.
GeneratorSet extend_lambda(const GeneratorSet &g, const PolyExpr &lambda);
/// K1 -> K1 + (c/2) M^-1 P2, K2 -> K2 - (c/2) M^-1 P1.
GeneratorSet kappa_shift(const GeneratorSet &g, const PolyExpr &c);

/// kappa with [K1, K2] = i kappa Id; NotCentral if the bracket is not a
/// coordinate-free multiple of the identity.
PolyExpr extract_kappa(const GeneratorSet &g);

/// Right-hand-side term: coefficient times a generator name or "kappa".
struct TableTerm
{
    Scalar coeff;
    std::string name;
};

struct TableRow
{
    std::string lhs_a;
    std::string lhs_b;
    std::vector<TableTerm> rhs;
    /// Set on rows that deviate from the corrected relations.
    std::string note;
};

/// Brackets among P1 P2 H J K1 K2 M plus the central kappa; one row per unordered pair.
class StructureTable
{
public:
    StructureTable(std::string name, std::vector<TableRow> rows);

    const std::string &name() const { return name_; }
    const std::vector<TableRow> &rows() const { return rows_; }
    /// Abstract algebra on P1 P2 H J K1 K2 M kappa.
    LieAlgebraSpec to_algebra() const;

private:
    std::string name_;
    std::vector<TableRow> rows_;
};

/// [K_i,H] = i P_i, [J,K_i] = i eps_ij K_j, [K1,K2] = i kappa.
StructureTable corrected_table();
/// The relations exactly as originally printed: [K_i,H] = 0, the J-K rows
/// read with a free index. Deviating rows carry a note.
StructureTable literal_table();

std::string render_rhs(const std::vector<TableTerm> &rhs);

struct RowResult
{
    std::string lhs_a;
    std::string lhs_b;
    std::string expected_text;
    DiffOp computed;
    DiffOp expected;
    DiffOp residual;
    bool pass = false;
    std::string note;
};

struct StructureReport
{
    std::string table;
    std::vector<RowResult> rows;
    std::optional<PolyExpr> kappa;
    std::optional<PolyExpr> mass;
    bool pass = false;
};

/// Evaluates every table row on the realization. kappa is instantiated with
/// the extracted value; a non-central [K1,K2] fails that row instead of throwing.
/// Throws BadParameter if the table fails the Jacobi check.
StructureReport verify_structure(const GeneratorSet &g, const StructureTable &table);

/// Cyclic-sum check over all 35 generator triples; lists the failing ones.
struct TripleJacobiResult
{
    std::size_t triples_checked = 0;
    std::vector<std::array<std::string, 3>> failures;
};
TripleJacobiResult triple_jacobi(const GeneratorSet &g);

} // namespace galext
