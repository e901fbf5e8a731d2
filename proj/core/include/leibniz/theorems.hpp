#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/cohomology.hpp"
#include "leibniz/fitting.hpp"

namespace leibniz {

/// Identifiers of the verified statements; the strings double as the CLI ids.
enum class TheoremId {
    Inv,        // right invariants of a left ideal form a sub-bimodule
    Sym,        // no right S-invariants forces symmetry
    Triv,       // no right invariants iff symmetric without trivial subs
    OneDim,     // derived-subalgebra invariants vs one-dim subs (closed field)
    Nontriv,    // non-trivial composition factors force M^L = M_0
    NonOneDim,  // closed-field variant via one-dim factors
    Fitting,    // Fitting pair of a nilpotent set: parts, actions, splitting
    Identities, // operator identities for powers of left actions
    VanHH,      // invertible left action of a nilpotent element kills HL
    FittingHH,  // HL of M agrees with HL of the Fitting zero part
    CohFitting, // same, for a nilpotent right ideal
    Van,        // nilpotent right ideal with no right invariants kills HL
    CohNonSemisim,
    Whitehead,
    Farnsteiner,
    VanNilp,
    Dixmier,
    Ab,         // periodicity over the one-dimensional Lie algebra
    NonVanNilp,
    NonVanTriv,
    Adj,
    AdjLie,
    VanSupSolv,
    Barnes,
    VanSolv,
    Frattini,
    MaxCodim,
    MaxChain,
    SplitSolv,
    HomShift,   // degree shift through the symmetrized Hom module
};

const char* theorem_id_string(TheoremId id);
std::optional<TheoremId> theorem_id_from_string(const std::string& s);
/// Anchor used in machine-readable reports.
const char* theorem_anchor(TheoremId id);
std::vector<TheoremId> all_theorem_ids();

struct HypothesisCheck {
    std::string name;
    enum class State { Satisfied, Failed, NotCheckable };
    State state = State::Failed;
    std::string note;
};

struct TheoremReport {
    TheoremId id{};
    enum class Verdict { Pass, Fail, VacuouslyTrue, NotApplicable };
    Verdict verdict = Verdict::VacuouslyTrue;
    std::vector<HypothesisCheck> hypotheses;
    int conclusion_verified_up_to = -1;  // top degree checked, -1 if none
    std::string detail;
    bool hypotheses_satisfied() const;
};

/// Instance check of one statement on a validated algebra (and bimodule when
/// the statement needs one; sensible defaults are built otherwise).
TheoremReport check_theorem(TheoremId id, const LeibnizAlgebra& algebra,
                            const std::optional<Bimodule>& bimodule, unsigned n_max,
                            const DegreeGuard& guard = DegreeGuard::from_env());

/// Degree-shift check dim HL^n(L, M) = dim HL^{n-1}(L, Hom(L, M)_s) for
/// anti-symmetric M, 1 <= n <= n_max.
TheoremReport hom_shift_check(const Bimodule& m, unsigned n_max,
                              const DegreeGuard& guard = DegreeGuard::from_env());

// --- random instances --------------------------------------------------------

struct RandomAlgebraSpec {
    FieldSpec field = FieldSpec::prime_field(5);
    std::size_t dim = 2;
    enum class Class { Nilpotent, Solvable, Supersolvable, Any };
    Class cls = Class::Any;
    std::uint64_t seed = 0;
};

/// Deterministic per seed; throws BudgetError when rejection sampling
/// exhausts its attempt budget.
LeibnizAlgebra random_algebra(const RandomAlgebraSpec& spec);
Bimodule random_bimodule(std::shared_ptr<const LeibnizAlgebra> a, std::size_t dim_m,
                         std::uint64_t seed);

// --- randomized sweeps -------------------------------------------------------

struct SweepOptions {
    std::size_t instances = 100;
    std::uint64_t seed = 1;
    unsigned n_max = 3;
};

struct SweepSummary {
    TheoremId id{};
    std::size_t pass = 0, fail = 0, vacuous = 0, not_applicable = 0;
    std::vector<TheoremReport> failures;
    std::size_t total() const { return pass + fail + vacuous + not_applicable; }
};

/// Runs the statement over seeded instance families (named fixtures plus
/// random algebras/bimodules over GF(2), GF(3), GF(5)).
SweepSummary sweep_theorem(TheoremId id, const SweepOptions& options);

/// Heuristic scan for two-periodic cohomology: random algebras whose trivial
/// and adjoint HL dimensions satisfy dim HL^n = dim HL^{n+2} for all computed
/// degrees. Reporting only.
struct PeriodicityRecord {
    std::string description;
    std::vector<std::size_t> trivial_dims, adjoint_dims;
    bool periodic = false;
};
std::vector<PeriodicityRecord> periodicity_scan(std::size_t instances, std::uint64_t seed,
                                                unsigned n_max);

/// Conjecture-mode sweep, reporting only: adjoint cohomology dimensions of
/// hemi-semidirect products of an abelian Lie algebra acting diagonally
/// (semisimply) on a module. No verdicts are attached.
struct HemiScanRecord {
    std::string description;
    std::vector<std::size_t> adjoint_dims;
    bool vanishes_in_positive_degrees = false;
};
std::vector<HemiScanRecord> hemi_semidirect_scan(std::size_t instances, std::uint64_t seed,
                                                 unsigned n_max);

/// All HL dimensions 0..n_max in one pass (one rank per coboundary degree).
std::vector<std::size_t> hl_dims(const Bimodule& m, unsigned n_max,
                                 const DegreeGuard& guard = DegreeGuard::from_env());

}  // namespace leibniz
