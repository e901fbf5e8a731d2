// Acceptance suite: the release gate. Each criterion prints exactly one
// PASS/FAIL line; the binary exits nonzero if any criterion fails.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "leibniz/cohomology.hpp"
#include "leibniz/io.hpp"
#include "leibniz/theorems.hpp"

using namespace leibniz;

namespace {

int failures = 0;

double run_criterion(int number, const std::string& label, double time_limit_s,
                     const std::function<bool(std::string&)>& body) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && seconds > time_limit_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("exceeded ") +
                std::to_string(time_limit_s) + " s";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << number << ": " << label
              << "  [" << std::fixed << std::setprecision(2) << seconds << " s]";
    if (!note.empty()) std::cout << "  -- " << note;
    std::cout << "\n";
    return seconds;
}

Vec unit(const FieldSpec& f, std::size_t dim, std::size_t i) {
    Vec v = vec_zero(f, dim);
    v[i] = Scalar::one(f);
    return v;
}

std::shared_ptr<const LeibnizAlgebra> make_ptr(LeibnizAlgebra a) {
    return std::make_shared<const LeibnizAlgebra>(std::move(a));
}

bool all_ones(const std::vector<std::size_t>& dims) {
    for (auto d : dims)
        if (d != 1) return false;
    return true;
}

FieldSpec small_field(std::uint64_t salt) {
    switch (salt % 3) {
        case 0: return FieldSpec::prime_field(2);
        case 1: return FieldSpec::prime_field(3);
        default: return FieldSpec::prime_field(5);
    }
}

}  // namespace

int main() {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f5 = FieldSpec::prime_field(5);

    run_criterion(1, "trivial cohomology of the 2-dim nilpotent model, degrees 0-6, Q and GF(5)",
                  30.0, [&](std::string& note) {
                      bool ok = true;
                      for (const auto& f : {q, f5}) {
                          const auto low_start = std::chrono::steady_clock::now();
                          const Bimodule t = trivial_bimodule(make_ptr(fixtures::two_dim_nilpotent(f)), 1);
                          ok = ok && all_ones(hl_dims(t, 3));
                          const double low_s = std::chrono::duration<double>(
                                                   std::chrono::steady_clock::now() - low_start)
                                                   .count();
                          if (low_s > 1.0) {
                              ok = false;
                              note += "degrees 0-3 over " + f.to_string() + " exceeded 1 s; ";
                          }
                          ok = ok && all_ones(hl_dims(t, 6));
                      }
                      return ok;
                  });

    run_criterion(2, "explicit degree 1-3 representatives of the nilpotent model", 0, [&](std::string&) {
        bool ok = true;
        for (const auto& f : {q, f5}) {
            const Bimodule t = trivial_bimodule(make_ptr(fixtures::two_dim_nilpotent(f)), 1);
            const CohomologyResult h1 = hl(t, 1);
            const CohomologyResult h2 = hl(t, 2);
            const CohomologyResult h3 = hl(t, 3);
            Vec f_star = unit(f, 2, 1);
            Vec fe = vec_zero(f, 4);
            fe[tensor_rank(2, {1, 0})] = Scalar::one(f);
            Vec fef = vec_zero(f, 8);
            fef[tensor_rank(2, {1, 0, 1})] = Scalar::one(f);
            ok = ok && Subspace::span(f, 2, h1.representatives) == Subspace::span(f, 2, {f_star});
            ok = ok && Subspace::span(f, 4, h2.representatives) == Subspace::span(f, 4, {fe});
            ok = ok && Subspace::span(f, 8, h3.representatives) == Subspace::span(f, 8, {fef});
        }
        return ok;
    });

    run_criterion(3, "adjoint cohomology of the nilpotent model, degrees 0-2 (3-5 reported)", 0,
                  [&](std::string& note) {
                      bool ok = true;
                      for (const auto& f : {q, f5}) {
                          const Bimodule adj = adjoint_bimodule(make_ptr(fixtures::two_dim_nilpotent(f)));
                          ok = ok && all_ones(hl_dims(adj, 2));
                      }
                      const auto high = hl_dims(
                          adjoint_bimodule(make_ptr(fixtures::two_dim_nilpotent(q))), 5);
                      std::ostringstream os;
                      os << "conjecture data, degrees 3-5 over Q:";
                      for (unsigned n = 3; n <= 5; ++n) os << " " << high[n];
                      note = os.str();
                      return ok;
                  });

    run_criterion(4, "supersolvable model: trivial degrees 0-5 and adjoint vanishing", 5.0,
                  [&](std::string&) {
                      bool ok = true;
                      for (const auto& f : {q, f5}) {
                          auto a = make_ptr(fixtures::two_dim_supersolvable(f));
                          ok = ok && all_ones(hl_dims(trivial_bimodule(a, 1), 5));
                          const auto adj_dims = hl_dims(adjoint_bimodule(a), 2);
                          ok = ok && adj_dims == std::vector<std::size_t>{1, 0, 0};
                          const CohomologyResult h0 = hl(adjoint_bimodule(a), 0);
                          ok = ok && Subspace::span(f, 2, h0.representatives) ==
                                         Subspace::span(f, 2, {unit(f, 2, 1)});
                      }
                      return ok;
                  });

    run_criterion(5, "3-dim bimodule over the line: invariants, trivial sub, vanishing", 0,
                  [&](std::string&) {
                      const Bimodule m = fixtures::shift_corner_bimodule(q);
                      const Subspace expected =
                          Subspace::span(q, 3, {unit(q, 3, 0), unit(q, 3, 1)});
                      const Subspace inv = m.right_invariants(Subspace::full(q, 1));
                      const Subspace m0 = m.antisymmetric_kernel();
                      bool ok = inv == m0 && inv == expected;
                      // the trivial sub-bimodule spanned by the first basis vector
                      Subspace trivial_part = Subspace::full(q, 3);
                      trivial_part = trivial_part.intersect(rank_kernel_image(m.lambda(0)).kernel);
                      trivial_part = trivial_part.intersect(rank_kernel_image(m.rho(0)).kernel);
                      ok = ok && trivial_part == Subspace::span(q, 3, {unit(q, 3, 0)});
                      ok = ok && m.sub_bimodule_generated({unit(q, 3, 0)}) ==
                                     Subspace::span(q, 3, {unit(q, 3, 0)});
                      // vanishing via the complex and via the closed formulas
                      const auto dims = hl_dims(m, 5);
                      for (unsigned n = 1; n <= 5; ++n) ok = ok && dims[n] == 0;
                      const TheoremReport ab =
                          check_theorem(TheoremId::Ab, m.algebra(), m, 5);
                      ok = ok && ab.verdict == TheoremReport::Verdict::Pass;
                      return ok;
                  });

    run_criterion(6, "Fitting pair of the upper/identity action pair", 0, [&](std::string&) {
        auto [alg, action] = fixtures::upper_identity_pair(q);
        auto a = make_ptr(std::move(alg));
        const FittingPair pair = fitting_set(symmetrized(a, action), Subspace::full(q, 2));
        return pair.zero_part.is_zero() && pair.one_part.is_full();
    });

    run_criterion(7, "periodicity property suite: 240 random bimodules over the line, degrees 0-5",
                  60.0, [&](std::string& note) {
                      std::size_t checked = 0, mismatches = 0;
                      for (std::uint64_t k = 0; k < 240; ++k) {
                          const FieldSpec f = small_field(k);
                          auto a = make_ptr(fixtures::one_dim_lie(f));
                          std::optional<Bimodule> m;
                          try {
                              m = random_bimodule(a, 1 + k % 4, 977 + k);
                          } catch (const BudgetError&) {
                              continue;
                          }
                          const TheoremReport r = check_theorem(TheoremId::Ab, *a, m, 5);
                          ++checked;
                          if (r.verdict != TheoremReport::Verdict::Pass) ++mismatches;
                      }
                      note = std::to_string(checked) + " instances, " +
                             std::to_string(mismatches) + " mismatches";
                      return checked >= 200 && mismatches == 0;
                  });

    run_criterion(8, "coboundary squares to zero and Cartan identities, 200 random pairs", 0,
                  [&](std::string& note) {
                      std::size_t checked = 0;
                      bool ok = true;
                      for (std::uint64_t k = 0; k < 200 && ok; ++k) {
                          RandomAlgebraSpec spec;
                          spec.field = small_field(k);
                          spec.dim = 1 + k % 3;
                          spec.cls = RandomAlgebraSpec::Class::Any;
                          spec.seed = 31337 + k;
                          auto a = make_ptr(random_algebra(spec));
                          const Bimodule m = random_bimodule(a, 1 + (k / 3) % 3, 777 + k);
                          for (unsigned n = 0; n + 1 <= 4 && ok; ++n) {
                              ok = (coboundary_matrix(m, n + 1) * coboundary_matrix(m, n)).is_zero();
                          }
                          Vec x = vec_zero(spec.field, a->dim());
                          for (std::size_t i = 0; i < a->dim(); ++i)
                              x[i] = Scalar::of(spec.field, static_cast<long long>((k + i) % 4));
                          ok = ok && !verify_cartan(m, x, 4).has_value();
                          ++checked;
                      }
                      note = std::to_string(checked) + " pairs";
                      return ok && checked >= 200;
                  });

    run_criterion(9, "theorem harness sweeps: 100 instances per family, zero failures", 600.0,
                  [&](std::string& note) {
                      const std::vector<TheoremId> families{
                          TheoremId::VanNilp, TheoremId::Dixmier, TheoremId::VanHH,
                          TheoremId::FittingHH, TheoremId::Van, TheoremId::VanSupSolv,
                          TheoremId::VanSolv, TheoremId::NonVanNilp, TheoremId::NonVanTriv,
                          TheoremId::Adj, TheoremId::AdjLie, TheoremId::Nontriv, TheoremId::Inv,
                          TheoremId::Sym, TheoremId::Triv, TheoremId::Fitting,
                          TheoremId::Identities};
                      bool ok = true;
                      std::size_t total_fail = 0;
                      std::ostringstream os;
                      for (TheoremId id : families) {
                          SweepOptions opts;
                          opts.instances = 100;
                          opts.seed = 424242;
                          opts.n_max = 4;
                          const SweepSummary s = sweep_theorem(id, opts);
                          total_fail += s.fail;
                          if (s.pass == 0) {
                              ok = false;
                              os << theorem_id_string(id) << " had no satisfied instances; ";
                          }
                      }
                      ok = ok && total_fail == 0;
                      os << "1700 instances, " << total_fail << " failures";
                      note = os.str();
                      return ok;
                  });

    run_criterion(10, "restriction-sequence machinery on the three named instances", 0,
                  [&](std::string&) {
                      bool ok = true;
                      {
                          auto n_alg = make_ptr(fixtures::two_dim_nilpotent(q));
                          const Subspace ideal = Subspace::span(q, 2, {unit(q, 2, 0)});
                          const Vec x = unit(q, 2, 1);
                          const auto [s1, r1] =
                              dixmier_sequence(trivial_bimodule(n_alg, 1), ideal, x, 3);
                          ok = ok && r1.all_ok();
                          const auto [s2, r2] = dixmier_sequence(adjoint_bimodule(n_alg), ideal, x, 3);
                          ok = ok && r2.all_ok();
                      }
                      {
                          auto d_alg = make_ptr(fixtures::two_dim_supersolvable(q));
                          const Subspace ideal = Subspace::span(q, 2, {unit(q, 2, 1)});
                          const auto [s3, r3] =
                              dixmier_sequence(trivial_bimodule(d_alg, 1), ideal, unit(q, 2, 0), 3);
                          ok = ok && r3.all_ok();
                      }
                      return ok;
                  });

    run_criterion(11, "subalgebra-lattice applications over GF(2)/GF(3) and split conjugacy", 0,
                  [&](std::string& note) {
                      bool ok = true;
                      std::size_t caveats = 0, checked = 0;
                      for (std::uint64_t k = 0; k < 60; ++k) {
                          RandomAlgebraSpec spec;
                          spec.field = k % 2 ? FieldSpec::prime_field(2) : FieldSpec::prime_field(3);
                          spec.dim = 1 + k % 3;
                          spec.cls = RandomAlgebraSpec::Class::Solvable;
                          spec.seed = 5150 + k;
                          const LeibnizAlgebra a = random_algebra(spec);
                          for (TheoremId id :
                               {TheoremId::Frattini, TheoremId::MaxCodim, TheoremId::MaxChain}) {
                              const TheoremReport r = check_theorem(id, a, std::nullopt, 2);
                              ok = ok && r.verdict != TheoremReport::Verdict::Fail;
                              if (r.verdict == TheoremReport::Verdict::NotApplicable) ++caveats;
                              ++checked;
                          }
                      }
                      // split instance with an explicit conjugating exponential
                      const FieldSpec f5loc = FieldSpec::prime_field(5);
                      const LeibnizAlgebra lie = fixtures::two_dim_solvable_lie(f5loc);
                      const TheoremReport split =
                          check_theorem(TheoremId::SplitSolv, lie, std::nullopt, 2);
                      ok = ok && split.verdict == TheoremReport::Verdict::Pass;
                      const Subspace k1 = Subspace::span(f5loc, 2, {unit(f5loc, 2, 0)});
                      Vec shifted = unit(f5loc, 2, 0);
                      shifted[1] = Scalar::of(f5loc, 2);
                      const Subspace k2 = Subspace::span(f5loc, 2, {shifted});
                      std::optional<long long> witness;
                      for (long long s = 0; s < 5 && !witness; ++s) {
                          Vec a_elt = vec_zero(f5loc, 2);
                          a_elt[1] = Scalar::of(f5loc, s);
                          if (lie.exp_conjugate(a_elt, k1) == k2) witness = s;
                      }
                      ok = ok && witness.has_value();
                      std::ostringstream os;
                      os << checked << " lattice checks, " << caveats
                         << " closed-field caveats recorded";
                      if (witness) os << "; conjugating witness a = " << *witness << " e";
                      note = os.str();
                      return ok;
                  });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
