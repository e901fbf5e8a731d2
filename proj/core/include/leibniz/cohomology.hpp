#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/bimodule.hpp"

namespace leibniz {

/// Memory guard for degree-indexed matrix assembly. The limit comes from
/// LEIBNIZ_COH_MEMORY_MB when set (default 512); exceeding it raises
/// BudgetError with a size estimate instead of truncating silently.
struct DegreeGuard {
    std::size_t limit_bytes = 512ull << 20;
    static DegreeGuard from_env();
    /// Estimated dense working set for the degree-n coboundary of m.
    static std::size_t estimate_bytes(const Bimodule& m, unsigned n);
    void check(const Bimodule& m, unsigned n) const;
};

/// dim_l^n with overflow detection.
std::size_t tensor_count(std::size_t dim_l, unsigned n);
std::size_t cochain_dim(const Bimodule& m, unsigned n);

/// Tensor indices enumerate lexicographically with the first component most
/// significant; a cochain stores one block of dim(M) coefficients per index.
std::size_t tensor_rank(std::size_t dim_l, const std::vector<std::uint32_t>& idx);
std::vector<std::uint32_t> tensor_unrank(std::size_t dim_l, unsigned n, std::size_t rank);

/// The coboundary CL^n -> CL^{n+1}: alternating left actions, the sign-toggled
/// right action of the last argument, and the pairwise product insertions.
ExactMatrix coboundary_matrix(const Bimodule& m, unsigned n);

/// theta_a on CL^n: left action by a minus insertions of a-products.
ExactMatrix theta_matrix(const Bimodule& m, const Vec& a, unsigned n);
/// iota_a: CL^n -> CL^{n-1}, insertion of a into the first slot (n >= 1).
ExactMatrix iota_matrix(const Bimodule& m, const Vec& a, unsigned n);
/// tau_a on the n-th tensor power of the algebra: sum of a-products per slot.
ExactMatrix tau_matrix(const LeibnizAlgebra& alg, const Vec& a, unsigned n);

struct CartanFailure {
    enum class Which { HomotopyIdentity, CommutesWithCoboundary };
    Which which;
    unsigned degree;
    std::string to_string() const;
};

/// Exact matrix checks of the two Cartan identities up to degree n_max:
/// d iota + iota d = theta (n >= 1) and theta d = d theta (n >= 0).
std::optional<CartanFailure> verify_cartan(const Bimodule& m, const Vec& a, unsigned n_max,
                                           const DegreeGuard& guard = DegreeGuard::from_env());

struct CohomologyResult {
    unsigned degree = 0;
    std::size_t dim_z = 0, dim_b = 0, dim_h = 0;
    std::vector<Vec> representatives;  // cocycles spanning a complement of the coboundaries
};

CohomologyResult hl(const Bimodule& m, unsigned n, const DegreeGuard& guard = DegreeGuard::from_env());

// --- generic finite cochain complexes ---------------------------------------

/// A complex presented by coboundary matrices d[k]: C^k -> C^{k+1}.
struct MatrixComplex {
    std::vector<ExactMatrix> d;
    std::size_t space_dim(unsigned k) const;
    unsigned top() const { return static_cast<unsigned>(d.size()) - 1; }
};

MatrixComplex cochain_complex(const Bimodule& m, unsigned top,
                              const DegreeGuard& guard = DegreeGuard::from_env());

struct CohomologySpace {
    unsigned degree = 0;
    Subspace cocycles, coboundaries;
    std::vector<Vec> representatives;
    std::size_t dim() const { return representatives.size(); }
    /// Coordinates of a cocycle's class in the representative basis.
    Vec class_coordinates(const Vec& cocycle) const;
};

/// Cohomology at degree k (requires k < d.size(); uses d[k-1] and d[k]).
CohomologySpace cohomology_at(const MatrixComplex& c, unsigned k);

/// Matrix of the map induced on cohomology by a chain map in one degree.
ExactMatrix induced_on_cohomology(const CohomologySpace& src, const CohomologySpace& dst,
                                  const ExactMatrix& chain_map);

// --- short exact sequences of complexes and the long exact sequence ---------

struct ComplexSes {
    MatrixComplex sub, mid, quot;
    std::vector<ExactMatrix> incl;  // incl[k]: sub C^k -> mid C^k
    std::vector<ExactMatrix> proj;  // proj[k]: mid C^k -> quot C^k
};

struct LesNode {
    unsigned degree = 0;
    char position = 'A';  // 'A' sub, 'B' mid, 'C' quot
    bool exact = false;
};

struct LesReport {
    bool levelwise_exact = true;
    bool chain_maps_commute = true;
    std::vector<LesNode> nodes;
    bool all_exact() const;
};

/// Checks levelwise exactness, the chain-map squares, and exactness of the
/// long exact cohomology sequence at every node of degree <= n_max.
LesReport verify_les(const ComplexSes& ses, unsigned n_max);

/// The levelwise sequence 0 -> CL(L,N) -> CL(L,M) -> CL(L,M/N) -> 0 for an
/// invariant subspace N, built to internal degree `top`.
ComplexSes bimodule_ses(const Bimodule& m, const Subspace& sub, unsigned top,
                        const DegreeGuard& guard = DegreeGuard::from_env());

LesReport les_of_bimodule_ses(const Bimodule& m, const Subspace& sub, unsigned n_max,
                              const DegreeGuard& guard = DegreeGuard::from_env());

// --- restriction to an ideal of codimension one ------------------------------

/// Data of the restriction sequence for a codimension-one ideal: the algebra
/// rebased to (ideal basis, x), the restriction maps, the kernel complex DL,
/// its distinguished first-slot summand, and the comparison map phi.
struct DixmierSequence {
    Bimodule adapted;     // over the rebased algebra; x is the last basis vector
    Bimodule restricted;  // over the ideal subalgebra
    std::vector<ExactMatrix> res;                       // res[k]: CL^k(L,M) -> CL^k(I,M)
    std::vector<std::vector<std::uint32_t>> dl;         // DL^k coordinates inside CL^k(L,M)
    std::vector<std::vector<std::uint32_t>> dl1;        // Hom(F x (x) I^(k-1), M) coordinates
    std::vector<ExactMatrix> phi;                       // phi[k]: DL^k_1 -> CL^{k-1}(I,M), k >= 1
    ComplexSes ses;                                     // DL -> CL(L,M) -> CL(I,M)
};

struct DixmierReport {
    bool ses_exact_levelwise = false;
    bool phi_anticommutes = false;
    bool connecting_factors = false;
    LesReport les;
    bool all_ok() const;
};

std::pair<DixmierSequence, DixmierReport> dixmier_sequence(
    const Bimodule& m, const Subspace& ideal, const Vec& x, unsigned n_max,
    const DegreeGuard& guard = DegreeGuard::from_env());

}  // namespace leibniz
