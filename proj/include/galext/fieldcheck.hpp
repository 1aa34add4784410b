#pragma once

#include "galext/matspin.hpp"
#include "galext/weylop.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace galext {

enum class Component { Phi = 0, Chi = 1 };

/// d^alpha applied to one field component.
struct FieldFactor
{
    Component comp = Component::Phi;
    DerivIndex deriv{0, 0, 0};

    friend auto operator<=>(const FieldFactor &, const FieldFactor &) = default;
};

/**
 * Sum of bilinears coeff * (d^a psi_c)^dagger (d^b psi_d) in the two field
 * components phi, chi. Coefficients may depend on x1, x2, t and parameters.
 */
class FieldPoly
{
public:
    using Key = std::pair<FieldFactor, FieldFactor>;

    explicit FieldPoly(RegistryPtr registry);
    static FieldPoly bilinear(const PolyExpr &coeff, FieldFactor left, FieldFactor right);

    const RegistryPtr &registry() const { return registry_; }
    const std::map<Key, PolyExpr> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// No chi factor and no time derivative anywhere.
    bool is_reduced() const;

    FieldPoly &operator+=(const FieldPoly &o);
    FieldPoly &operator-=(const FieldPoly &o);
    friend FieldPoly operator+(FieldPoly a, const FieldPoly &b) { return a += b; }
    friend FieldPoly operator-(FieldPoly a, const FieldPoly &b) { return a -= b; }
    friend FieldPoly operator*(const PolyExpr &c, const FieldPoly &f);
    friend bool operator==(const FieldPoly &a, const FieldPoly &b) { return a.terms_ == b.terms_; }

    /// Total derivative along one axis (Leibniz over coefficient and both factors).
    FieldPoly derivative(Axis axis) const;

    /// e.g. "1/4*m^-2*[d1 phi]^+[d1 phi] + ..."; "0" when empty.
    std::string str() const;

private:
    void add_term(const Key &key, const PolyExpr &coeff);

    RegistryPtr registry_;
    std::map<Key, PolyExpr> terms_;
};

/**
 * On-shell rewrite rules for spin label s:
 *   chi        -> (i/2m)(d1 + i s d2) phi
 *   chi^+      -> -(i/2m)(d1 - i s d2) phi^+
 *   dt phi     -> (i/2m)(d1^2 + d2^2) phi
 *   dt phi^+   -> -(i/2m)(d1^2 + d2^2) phi^+
 */
struct EomRules
{
    int s = 1;
    RegistryPtr registry;

    explicit EomRules(int s, RegistryPtr registry = physics_registry());
};

/// Applies the rules to a fixpoint; the result satisfies is_reduced().
FieldPoly reduce_on_shell(const FieldPoly &f, const EomRules &rules);

/// One line of the conservation-law data file.
struct LawTerm
{
    std::string label;
    /// "all" or a variant name such as "corrected" / "literal".
    std::string variant;
    /// "d{j}" (summed over j) or "dt".
    std::string outer;
    std::string coefficient;
    std::string left;
    std::string matrix;
    std::string right;
};

struct ConservationLaw
{
    std::vector<LawTerm> terms;
};

ConservationLaw parse_conservation_law(const std::string &text);
ConservationLaw load_conservation_law(const std::filesystem::path &path);
/// The bundled law (conservation-law.txt in the data directory).
ConservationLaw default_conservation_law();
/// Data directory: $GALEXT_DATA_DIR if set, else the source-tree data/.
std::filesystem::path data_directory();

enum class LawVariant { Corrected, Literal };

/// Assembles the divergence for free index i and spin label s, optionally
/// dropping the terms with the given labels.
FieldPoly build_conservation_expression(const ConservationLaw &law, int i, int s, LawVariant variant,
                                        const std::vector<std::string> &omit = {});
/// Residual after on-shell reduction; the law holds when it is zero.
FieldPoly check_conservation(int i, int s, LawVariant variant = LawVariant::Corrected,
                             const std::vector<std::string> &omit = {});
FieldPoly check_conservation(const ConservationLaw &law, int i, int s, LawVariant variant,
                             const std::vector<std::string> &omit = {});

/// G = Gamma E + sigma.p + m(1 - sigma3) with E = i dt, p = -i grad, sigma = (sigma1, s sigma2).
DiffOp wave_operator(int s, RegistryPtr registry = physics_registry());

/// Constant matrix L with target = L o g, if one exists.
std::optional<MatExpr> solve_left_factor(const DiffOp &target, const DiffOp &g);

struct BoostCovariance
{
    MatExpr lambda;
    std::string convention;
    /// S^-1 o phase(shift(G)) o S.
    DiffOp transformed;
    bool identity_at_zero = false;
    /// Transforming with v and then -v returns G exactly.
    bool round_trip = false;
    int degree_in_v = 0;
};

/// Finite boost with symbolic v1, v2. Throws CovarianceFailure if neither
/// sign reading of v+ yields a constant Lambda.
BoostCovariance check_boost_covariance(int s);

/// S^-1 o conjugate_phase(conjugate_shift(a, v), theta) o S for velocity (v1, v2).
DiffOp boost_transform(const DiffOp &a, int s, const PolyExpr &v1, const PolyExpr &v2, int sign_convention = 1);

struct RotationCovariance
{
    MatExpr lambda;
    DiffOp generator;
    bool diagonal = false;
    bool traceless = false;
};

/// Solves [G, J2] = Lambda_J G with J2 = -i(x1 d2 - x2 d1) Id + (s/2) sigma3.
RotationCovariance check_rotation_covariance(int s);

/// Registry {E, m, pm, pp} for momentum-space symbols.
RegistryPtr symbol_registry();

struct MultispinorEquations
{
    std::size_t rank_n = 1;
    /// (1/N) sum_i Gamma (x) .. G .. (x) Gamma on the full 2^N space.
    MatExpr full;
    /// Restriction to the symmetric basis.
    MatExpr restricted;
    /// Rows weighted by the symmetric-basis multiplicities binom(N, k).
    MatExpr weighted;
    std::size_t row_rank = 0;
    std::size_t nullity = 0;
    /// Nonzero rows of `weighted` and their scale against (E, p-) and (p+, 2m).
    Scalar phi_scale;
    Scalar chi_scale;
    /// Symmetric components (number of lowered indices) absent from every equation.
    std::vector<std::size_t> unconstrained;
};

/// Throws RedundancyClaimFailure if the rank is not 2 or the rows do not match.
MultispinorEquations multispinor_equations(int rank, int s);

/// Rank over the fraction field by fraction-free cross-multiplication.
std::size_t polynomial_rank(const MatExpr &m);

} // namespace galext
