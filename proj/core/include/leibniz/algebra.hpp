#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// First basis triple (i, j, k) violating the left Leibniz identity
/// e_i (e_j e_k) = (e_i e_j) e_k + e_j (e_i e_k), with both sides.
struct LeibnizViolation {
    std::size_t i, j, k;
    Vec lhs, rhs;
    std::string to_string() const;
};

enum class SeriesKind { LeftDescendingCentral, Derived };

/// A descending chain of subspaces, each an ideal (or left ideal) of the
/// enclosing algebra; consecutive codimensions are recorded.
struct IdealChain {
    enum class TermKind { Ideal, LeftIdeal };
    TermKind term_kind = TermKind::Ideal;
    std::vector<Subspace> terms;
    std::vector<std::size_t> codims;
};

struct IdealInfo {
    bool left = false;
    bool right = false;
    bool two_sided() const { return left && right; }
};

struct SupersolvableResult {
    enum class Status { Yes, No, Unknown };
    Status status = Status::Unknown;
    std::optional<IdealChain> chain;  // present iff Yes: full algebra down to 0, codims all 1
};

/// Finite-dimensional left Leibniz algebra given by structure constants.
/// Immutable after construction; checked() validates the left Leibniz
/// identity on all basis triples.
class LeibnizAlgebra {
public:
    LeibnizAlgebra() : field_(FieldSpec::rationals()) {}

    /// Builds without validating (for the validate command and error paths).
    static LeibnizAlgebra unchecked(FieldSpec field, std::size_t dim,
                                    std::vector<std::vector<Vec>> constants);
    /// Builds and validates; throws ValidationError on an identity violation.
    static LeibnizAlgebra checked(FieldSpec field, std::size_t dim,
                                  std::vector<std::vector<Vec>> constants);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    bool operator==(const LeibnizAlgebra&) const = default;

    /// nullopt when the left Leibniz identity holds on all dim^3 triples.
    std::optional<LeibnizViolation> validate() const;

    const Vec& basis_product(std::size_t i, std::size_t j) const { return c_[i][j]; }
    Vec product(const Vec& u, const Vec& v) const;

    ExactMatrix left_mult(std::size_t i) const;
    ExactMatrix right_mult(std::size_t i) const;
    ExactMatrix left_mult(const Vec& u) const;
    ExactMatrix right_mult(const Vec& u) const;

    /// span{x^2}: generated by e_i e_i and e_i e_j + e_j e_i; an abelian ideal.
    Subspace leibniz_kernel() const;
    bool is_lie() const { return leibniz_kernel().is_zero(); }

    /// Quotient by the Leibniz kernel plus the projection onto it.
    std::pair<LeibnizAlgebra, QuotientMap> canonical_lie() const;

    Subspace derived_subalgebra() const;
    /// span{a b : a in A, b in B}.
    Subspace subspace_product(const Subspace& a, const Subspace& b) const;

    /// Terms until the first repeat; a chain that reaches 0 stops there.
    IdealChain series(SeriesKind kind) const;
    bool is_nilpotent() const;
    bool is_solvable() const;

    /// {c : c x = 0 for all x}.
    Subspace left_center() const;
    /// {x : s x = 0 for all s in S}.
    Subspace right_centralizer(const Subspace& s) const;

    IdealInfo ideal_info(const Subspace& v) const;
    /// Smallest two-sided ideal containing v.
    Subspace ideal_closure(const Subspace& v) const;

    /// Quotient algebra by a two-sided ideal; validates the result.
    std::pair<LeibnizAlgebra, QuotientMap> quotient(const Subspace& ideal) const;

    /// Exact over GF(p) (line enumeration); three-valued over Q, where the
    /// one-dimensional-ideal search uses rational eigenvalues only.
    SupersolvableResult is_supersolvable(std::uint64_t line_budget = 1000000) const;

    /// Subalgebra on a multiplication-closed subspace, in its echelon basis.
    std::pair<LeibnizAlgebra, std::vector<Vec>> restrict_to(const Subspace& closed) const;

    /// Structure constants in the basis given by the columns of new_basis.
    LeibnizAlgebra change_basis(const ExactMatrix& new_basis) const;

    /// All multiplication-closed subspaces (finite fields; budget-guarded).
    std::vector<Subspace> all_subalgebras(std::uint64_t budget = 1000000) const;
    std::vector<Subspace> maximal_subalgebras(std::uint64_t budget = 1000000) const;
    /// Intersection of the maximal subalgebras.
    Subspace frattini(std::uint64_t budget = 1000000) const;

    /// exp(L_x) as a matrix; requires L_x^2 = 0, or characteristic zero with
    /// L_x nilpotent. Verified to be an algebra automorphism.
    ExactMatrix exp_left_automorphism(const Vec& x) const;
    Subspace exp_conjugate(const Vec& x, const Subspace& k) const;

private:
    FieldSpec field_;
    std::size_t dim_ = 0;
    std::vector<std::vector<Vec>> c_;  // c_[i][j] = coordinates of e_i e_j
};

/// Leibniz algebra structure on g + V from a Lie algebra g and a left
/// g-module V: (a, u)(b, v) = (ab, a.v). Validates its inputs and output.
LeibnizAlgebra hemi_semidirect(const LeibnizAlgebra& lie, const std::vector<ExactMatrix>& action);

namespace fixtures {

/// One-dimensional (abelian) Lie algebra F e.
LeibnizAlgebra one_dim_lie(const FieldSpec& f);
/// Abelian algebra of the given dimension.
LeibnizAlgebra abelian(const FieldSpec& f, std::size_t dim);
/// Basis (e, f) with f f = e; nilpotent and non-Lie.
LeibnizAlgebra two_dim_nilpotent(const FieldSpec& f);
/// Basis (h, e) with h e = e; supersolvable, non-nilpotent, non-Lie.
LeibnizAlgebra two_dim_supersolvable(const FieldSpec& f);
/// Basis (h, e) with h e = e, e h = -e; the non-abelian solvable Lie algebra.
LeibnizAlgebra two_dim_solvable_lie(const FieldSpec& f);
/// Basis (x, y, h) with x y = h, h x = 2x, h y = -2y; simple for char > 3.
LeibnizAlgebra sl2(const FieldSpec& f);

}  // namespace fixtures

}  // namespace leibniz
