#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Which compatibility identity failed, on which basis pair (i, j):
///   LeftCompat:  lambda_{e_i e_j} = lambda_i lambda_j - lambda_j lambda_i
///   MixedCompat: rho_{e_i e_j}    = lambda_i rho_j    - rho_j lambda_i
///   RightCompat: rho_j rho_i      = -rho_j lambda_i
struct BimoduleViolation {
    enum class Axiom { LeftCompat, MixedCompat, RightCompat };
    Axiom axiom;
    std::size_t i, j;
    std::string to_string() const;
};

/// Leibniz bimodule over a fixed algebra, given by the representation pair
/// (lambda, rho) of square matrices per algebra basis element. Immutable.
class Bimodule {
public:
    Bimodule() = default;

    static Bimodule unchecked(std::shared_ptr<const LeibnizAlgebra> algebra, std::size_t dim_m,
                              std::vector<ExactMatrix> lambda, std::vector<ExactMatrix> rho);
    static Bimodule checked(std::shared_ptr<const LeibnizAlgebra> algebra, std::size_t dim_m,
                            std::vector<ExactMatrix> lambda, std::vector<ExactMatrix> rho);

    const LeibnizAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const LeibnizAlgebra> algebra_ptr() const { return algebra_; }
    const FieldSpec& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_m_; }

    std::optional<BimoduleViolation> validate() const;

    const ExactMatrix& lambda(std::size_t i) const { return lambda_[i]; }
    const ExactMatrix& rho(std::size_t i) const { return rho_[i]; }
    ExactMatrix lambda_of(const Vec& x) const;
    ExactMatrix rho_of(const Vec& x) const;

    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_trivial() const;

    /// M^S = {m : m.s = 0 for all s in S}; a sub-bimodule whenever S is a
    /// left ideal (asserted in that case).
    Subspace right_invariants(const Subspace& s) const;

    /// M_0 = sum of Im(lambda_i + rho_i); anti-symmetric sub-bimodule with
    /// symmetric quotient (both asserted).
    Subspace antisymmetric_kernel() const;

    struct Annihilators {
        Subspace left, right, both;
        bool right_faithful() const { return right.is_zero(); }
    };
    Annihilators annihilators() const;

    bool is_sub_bimodule(const Subspace& w) const;
    /// Smallest sub-bimodule containing the given vectors (spinning closure).
    Subspace sub_bimodule_generated(const std::vector<Vec>& vectors) const;

    /// Bimodule structure induced on an invariant subspace, in its echelon
    /// coordinates.
    Bimodule sub_bimodule(const Subspace& w) const;
    /// Quotient bimodule modulo an invariant subspace.
    std::pair<Bimodule, QuotientMap> quotient_bimodule(const Subspace& w) const;

    /// Same underlying space viewed over the subalgebra on a
    /// multiplication-closed subspace of the algebra.
    Bimodule restrict_to_subalgebra(const Subspace& closed) const;

    /// Conjugated module basis: lambda' = P^-1 lambda P.
    Bimodule conjugate(const ExactMatrix& p) const;

    /// Dimension of the space of matrices commuting with every lambda_i and
    /// rho_i; equals 1 for an absolutely irreducible bimodule.
    std::size_t endomorphism_dim() const;

private:
    std::shared_ptr<const LeibnizAlgebra> algebra_;
    std::size_t dim_m_ = 0;
    std::vector<ExactMatrix> lambda_, rho_;
};

Bimodule trivial_bimodule(std::shared_ptr<const LeibnizAlgebra> a, std::size_t dim_m);
Bimodule adjoint_bimodule(std::shared_ptr<const LeibnizAlgebra> a);
/// Unique symmetric structure on a left module: rho := -lambda.
Bimodule symmetrized(std::shared_ptr<const LeibnizAlgebra> a, std::vector<ExactMatrix> lambda);
/// Anti-symmetric structure on a left module: rho := 0.
Bimodule antisymmetrized(std::shared_ptr<const LeibnizAlgebra> a, std::vector<ExactMatrix> lambda);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

/// Symmetrized left-module structure on Hom(L, M) with
/// (x.f)(y) = x.f(y) - f(xy); coordinates are laid out per algebra basis
/// element, a block of dim(M) each.
Bimodule hom_from_adjoint_symmetrized(const Bimodule& m);

struct IrreducibilityReport {
    bool irreducible = false;
    bool exhaustive = false;  // certified over every nonzero vector
    std::optional<Vec> proper_generator;
};

/// Certifies that every candidate vector generates the whole module;
/// exhaustive over small prime fields, spinning + rational-eigenvector
/// candidates otherwise.
IrreducibilityReport certify_irreducible(const Bimodule& m, std::uint64_t vector_budget = 100000);

struct CompositionFactor {
    Bimodule factor;
    std::size_t dim = 0;
    bool trivial = false;
    bool exhaustive_certified = false;
    bool absolutely_irreducible = false;
};

struct CompositionSeries {
    std::vector<Subspace> chain;  // 0 = W_0 < W_1 < ... < W_k = M
    std::vector<CompositionFactor> factors;
};

CompositionSeries composition_series(const Bimodule& m, std::uint64_t vector_budget = 100000);

namespace fixtures {

/// 3-dim bimodule over the one-dimensional Lie algebra: lambda the nilpotent
/// Jordan shift, rho the corner matrix E_13.
Bimodule shift_corner_bimodule(const FieldSpec& f);

/// Abelian 2-dim algebra acting on F^2 by the matrices E_12 and the identity;
/// returned as the algebra together with the left action matrices.
std::pair<LeibnizAlgebra, std::vector<ExactMatrix>> upper_identity_pair(const FieldSpec& f);

}  // namespace fixtures

}  // namespace leibniz
