// Command-line front end: validation, cohomology tables, randomized theorem
// verification, and the built-in example suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "leibniz/cohomology.hpp"
#include "leibniz/io.hpp"
#include "leibniz/theorems.hpp"

using namespace leibniz;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;

FieldSpec parse_field_flag(const std::string& value) {
    if (value == "Q" || value == "q") return FieldSpec::rationals();
    try {
        return FieldSpec::prime_field(static_cast<std::uint32_t>(std::stoul(value)));
    } catch (const std::exception&) {
        throw ParseError("--field expects Q or a prime < 2^31, got '" + value + "'");
    }
}

struct AlgebraChoice {
    std::string file;
    std::string example;
    std::string field = "Q";
};

std::shared_ptr<const LeibnizAlgebra> resolve_algebra(const AlgebraChoice& choice) {
    if (!choice.file.empty() && !choice.example.empty())
        throw ParseError("give either an algebra file or a built-in example, not both");
    if (choice.file.empty() && choice.example.empty())
        throw ParseError("an algebra is required (--algebra FILE or --example NAME)");
    LeibnizAlgebra a = choice.file.empty()
                           ? io::builtin_algebra(choice.example, parse_field_flag(choice.field))
                           : io::load_algebra_file(choice.file);
    return std::make_shared<const LeibnizAlgebra>(std::move(a));
}

Bimodule resolve_coefficients(const std::string& coeffs, const std::string& bimodule_file,
                              std::shared_ptr<const LeibnizAlgebra> a) {
    if (!bimodule_file.empty() && !coeffs.empty())
        throw ParseError("give either --coeffs or --bimodule, not both");
    if (!bimodule_file.empty()) return io::load_bimodule_file(bimodule_file, std::move(a));
    return io::builtin_coefficients(coeffs.empty() ? "trivial" : coeffs, std::move(a));
}

const char* verdict_name(TheoremReport::Verdict v) {
    switch (v) {
        case TheoremReport::Verdict::Pass: return "Pass";
        case TheoremReport::Verdict::Fail: return "Fail";
        case TheoremReport::Verdict::VacuouslyTrue: return "VacuouslyTrue";
        default: return "NotApplicable";
    }
}

json theorem_report_json(const TheoremReport& r) {
    json hyps = json::array();
    for (const auto& h : r.hypotheses) {
        const char* state = h.state == HypothesisCheck::State::Satisfied ? "satisfied"
                            : h.state == HypothesisCheck::State::Failed  ? "failed"
                                                                         : "not-checkable";
        hyps.push_back(json{{"name", h.name}, {"state", state}, {"note", h.note}});
    }
    return json{{"theorem", theorem_id_string(r.id)},
                {"paper_anchor", theorem_anchor(r.id)},
                {"verdict", verdict_name(r.verdict)},
                {"hypotheses", hyps},
                {"conclusion_verified_up_to", r.conclusion_verified_up_to},
                {"detail", r.detail}};
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(const AlgebraChoice& choice, const std::string& bimodule_file) {
    auto algebra = resolve_algebra(choice);
    if (const auto violation = algebra->validate()) {
        std::cout << "INVALID algebra: " << violation->to_string() << "\n";
        return kExitViolation;
    }
    std::cout << "algebra: " << algebra->dim() << "-dimensional over "
              << algebra->field().to_string() << ", left Leibniz identity holds\n";
    if (!bimodule_file.empty()) {
        const Bimodule m = io::load_bimodule_file(bimodule_file, algebra);
        if (const auto violation = m.validate()) {
            std::cout << "INVALID bimodule: " << violation->to_string() << "\n";
            return kExitViolation;
        }
        std::cout << "bimodule: dimension " << m.dim() << ", compatibility identities hold\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cohomology
// ---------------------------------------------------------------------------

int run_cohomology(const AlgebraChoice& choice, const std::string& coeffs,
                   const std::string& bimodule_file, unsigned max_degree, const std::string& format,
                   bool representatives) {
    auto algebra = resolve_algebra(choice);
    if (const auto violation = algebra->validate())
        throw ValidationError(violation->to_string());
    const Bimodule m = resolve_coefficients(coeffs, bimodule_file, algebra);
    if (const auto violation = m.validate()) throw ValidationError(violation->to_string());

    json records = json::array();
    for (unsigned n = 0; n <= max_degree; ++n) {
        const CohomologyResult h = hl(m, n);
        json rec{{"degree", n}, {"dim_z", h.dim_z}, {"dim_b", h.dim_b}, {"dim_h", h.dim_h}};
        if (representatives) {
            json reps = json::array();
            for (const auto& rep : h.representatives) {
                json coeffs_json = json::array();
                for (const auto& s : rep) coeffs_json.push_back(s.to_string());
                reps.push_back(std::move(coeffs_json));
            }
            rec["representatives"] = std::move(reps);
        }
        records.push_back(std::move(rec));
    }
    if (format == "json") {
        json doc{{"command", "cohomology"},
                 {"field", algebra->field().to_string()},
                 {"algebra_dim", algebra->dim()},
                 {"bimodule_dim", m.dim()},
                 {"degrees", records}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n   dim ZL   dim BL   dim HL\n";
        for (const auto& rec : records) {
            std::cout << rec["degree"].get<unsigned>() << "   " << rec["dim_z"].get<std::size_t>()
                      << "        " << rec["dim_b"].get<std::size_t>() << "        "
                      << rec["dim_h"].get<std::size_t>() << "\n";
            if (representatives && rec.contains("representatives")) {
                for (const auto& rep : rec["representatives"]) {
                    std::cout << "      [";
                    for (std::size_t i = 0; i < rep.size(); ++i)
                        std::cout << (i ? ", " : "") << rep[i].get<std::string>();
                    std::cout << "]\n";
                }
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(std::vector<std::string> theorem_names, bool all, bool all_builtin,
               std::size_t instances, std::uint64_t seed, unsigned max_degree,
               const std::string& format) {
    std::vector<TheoremId> ids;
    if (all) {
        ids = all_theorem_ids();
    } else {
        for (const auto& name : theorem_names) {
            const auto id = theorem_id_from_string(name);
            if (!id) throw ParseError("unknown theorem id '" + name + "'");
            ids.push_back(*id);
        }
    }
    if (ids.empty()) throw ParseError("verify needs --theorem IDs or --all");

    bool any_fail = false;
    json out = json::array();
    for (TheoremId id : ids) {
        if (all_builtin) {
            struct Named {
                std::string label;
                std::shared_ptr<const LeibnizAlgebra> algebra;
                std::optional<Bimodule> coeffs;
            };
            std::vector<Named> named;
            for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
                for (const std::string alg_name : {"N", "D", "one-dim"}) {
                    auto a = std::make_shared<const LeibnizAlgebra>(
                        io::builtin_algebra(alg_name, field));
                    named.push_back({alg_name + "/trivial", a,
                                     io::builtin_coefficients("trivial", a)});
                    named.push_back({alg_name + "/adjoint", a,
                                     io::builtin_coefficients("adjoint", a)});
                    if (alg_name == "one-dim")
                        named.push_back({alg_name + "/A-mod", a,
                                         io::builtin_coefficients("A-mod", a)});
                }
            }
            for (const auto& inst : named) {
                const TheoremReport r = check_theorem(id, *inst.algebra, inst.coeffs, max_degree);
                any_fail = any_fail || r.verdict == TheoremReport::Verdict::Fail;
                json rec = theorem_report_json(r);
                rec["instance"] = inst.label + " over " + inst.algebra->field().to_string();
                out.push_back(std::move(rec));
            }
        } else {
            SweepOptions opts;
            opts.instances = instances;
            opts.seed = seed;
            opts.n_max = max_degree;
            const SweepSummary s = sweep_theorem(id, opts);
            any_fail = any_fail || s.fail > 0;
            json rec{{"theorem", theorem_id_string(s.id)},
                     {"paper_anchor", theorem_anchor(s.id)},
                     {"instances", s.total()},
                     {"pass", s.pass},
                     {"fail", s.fail},
                     {"vacuously_true", s.vacuous},
                     {"not_applicable", s.not_applicable}};
            json failures = json::array();
            for (const auto& f : s.failures) failures.push_back(theorem_report_json(f));
            rec["failures"] = std::move(failures);
            out.push_back(std::move(rec));
        }
    }
    if (format == "json") {
        std::cout << json{{"command", "verify"}, {"records", out}, {"ok", !any_fail}}.dump(2)
                  << "\n";
    } else {
        for (const auto& rec : out) {
            if (rec.contains("instances")) {
                std::cout << rec["theorem"].get<std::string>() << ": " << rec["pass"] << " pass, "
                          << rec["fail"] << " fail, " << rec["vacuously_true"] << " vacuous, "
                          << rec["not_applicable"] << " n/a (" << rec["instances"]
                          << " instances)\n";
            } else {
                std::cout << rec["theorem"].get<std::string>() << " ["
                          << rec["instance"].get<std::string>()
                          << "]: " << rec["verdict"].get<std::string>() << "\n";
            }
        }
    }
    return any_fail ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// paper-suite
// ---------------------------------------------------------------------------

json dims_json(const std::vector<std::size_t>& dims) {
    json arr = json::array();
    for (auto d : dims) arr.push_back(d);
    return arr;
}

Vec unit_vec(const FieldSpec& f, std::size_t dim, std::size_t i) {
    Vec v = vec_zero(f, dim);
    v[i] = Scalar::one(f);
    return v;
}

int run_paper_suite(const std::string& conjecture, unsigned degree, const std::string& format,
                    bool scan_periodicity, std::size_t instances, std::uint64_t seed) {
    if (scan_periodicity) {
        const auto records = periodicity_scan(instances, seed, degree);
        json out = json::array();
        for (const auto& rec : records) {
            out.push_back(json{{"algebra", rec.description},
                               {"trivial_dims", dims_json(rec.trivial_dims)},
                               {"adjoint_dims", dims_json(rec.adjoint_dims)}});
        }
        if (format == "json") {
            std::cout << json{{"command", "scan-periodicity"}, {"records", out}}.dump(2) << "\n";
        } else {
            std::cout << "algebras with two-periodic computed dimensions (heuristic scan, no "
                         "verdicts):\n";
            for (const auto& rec : out)
                std::cout << "  " << rec["algebra"].get<std::string>() << "\n";
        }
        return kExitOk;
    }

    if (conjecture == "hemi") {
        // reporting-only sweep over hemi-semidirect products
        const auto records = hemi_semidirect_scan(instances, seed, degree);
        json out = json::array();
        std::size_t vanishing = 0;
        for (const auto& rec : records) {
            vanishing += rec.vanishes_in_positive_degrees ? 1 : 0;
            out.push_back(json{{"instance", rec.description},
                               {"adjoint_dims", dims_json(rec.adjoint_dims)},
                               {"vanishes_in_positive_degrees", rec.vanishes_in_positive_degrees}});
        }
        if (format == "json") {
            std::cout << json{{"command", "conjecture"}, {"example", "hemi"}, {"records", out}}.dump(2)
                      << "\n";
        } else {
            std::cout << "adjoint dimensions of hemi-semidirect products (reported, not asserted):\n";
            for (const auto& rec : out) {
                std::cout << "  " << rec["instance"].get<std::string>() << ":";
                for (const auto& d : rec["adjoint_dims"]) std::cout << " " << d;
                std::cout << "\n";
            }
            std::cout << vanishing << "/" << records.size()
                      << " instances vanish in every positive degree up to " << degree << "\n";
        }
        return kExitOk;
    }

    if (!conjecture.empty()) {
        if (conjecture != "C" && conjecture != "D")
            throw ParseError("--conjecture expects C, D or hemi");
        const FieldSpec q = FieldSpec::rationals();
        auto a = std::make_shared<const LeibnizAlgebra>(
            io::builtin_algebra(conjecture == "C" ? "N" : "D", q));
        const auto dims = hl_dims(adjoint_bimodule(a), degree);
        if (format == "json") {
            std::cout << json{{"command", "conjecture"},
                              {"example", conjecture},
                              {"adjoint_dims", dims_json(dims)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "adjoint cohomology dimensions (reported, not asserted):\n";
            for (unsigned n = 0; n < dims.size(); ++n)
                std::cout << "  n=" << n << ": " << dims[n] << "\n";
        }
        return kExitOk;
    }

    json records = json::array();
    auto check = [&](const std::string& anchor, const std::string& name, const json& expected,
                     const json& computed) {
        records.push_back(io::report_record(anchor, name, expected, computed, expected == computed));
    };

    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        const std::string tag = " over " + field.to_string();
        auto n_alg = std::make_shared<const LeibnizAlgebra>(io::builtin_algebra("N", field));
        check("Example C", "nilpotent model validates" + tag, true, !n_alg->validate().has_value());
        const Bimodule triv = io::builtin_coefficients("trivial", n_alg);
        check("Example C", "trivial coefficient dimensions, degrees 0-6" + tag,
              dims_json({1, 1, 1, 1, 1, 1, 1}), dims_json(hl_dims(triv, 6)));

        const CohomologyResult h1 = hl(triv, 1);
        const CohomologyResult h2 = hl(triv, 2);
        const CohomologyResult h3 = hl(triv, 3);
        Vec f_star = unit_vec(field, 2, 1);
        Vec fe = vec_zero(field, 4);
        fe[tensor_rank(2, {1, 0})] = Scalar::one(field);
        Vec fef = vec_zero(field, 8);
        fef[tensor_rank(2, {1, 0, 1})] = Scalar::one(field);
        check("Example C", "degree-1 representative spans the dual of f" + tag, true,
              Subspace::span(field, 2, h1.representatives) == Subspace::span(field, 2, {f_star}));
        check("Example C", "degree-2 representative spans f* (x) e*" + tag, true,
              Subspace::span(field, 4, h2.representatives) == Subspace::span(field, 4, {fe}));
        check("Example C", "degree-3 representative spans f* (x) e* (x) f*" + tag, true,
              Subspace::span(field, 8, h3.representatives) == Subspace::span(field, 8, {fef}));

        const Bimodule adj = io::builtin_coefficients("adjoint", n_alg);
        check("Example C", "adjoint dimensions, degrees 0-2" + tag, dims_json({1, 1, 1}),
              dims_json(hl_dims(adj, 2)));
        const CohomologyResult h0 = hl(adj, 0);
        check("Example C", "degree-0 adjoint cohomology is the left center" + tag, true,
              Subspace::span(field, 2, h0.representatives) ==
                  Subspace::span(field, 2, {unit_vec(field, 2, 0)}));
    }

    {
        const FieldSpec q = FieldSpec::rationals();
        auto line = std::make_shared<const LeibnizAlgebra>(io::builtin_algebra("one-dim", q));
        check("one-dimensional Lie algebra", "trivial dimensions are 1 in degrees 0-6",
              dims_json({1, 1, 1, 1, 1, 1, 1}),
              dims_json(hl_dims(io::builtin_coefficients("trivial", line), 6)));

        const Bimodule m = io::builtin_coefficients("A-mod", line);
        check("Example A", "bimodule validates", true, !m.validate().has_value());
        const Subspace inv = m.right_invariants(Subspace::full(q, 1));
        const Subspace m0 = m.antisymmetric_kernel();
        const Subspace expected = Subspace::span(q, 3, {unit_vec(q, 3, 0), unit_vec(q, 3, 1)});
        check("Example A", "right invariants equal the anti-symmetric kernel", true,
              inv == m0 && inv == expected);
        check("Example A", "trivial sub-bimodule spanned by the first basis vector", true,
              m.sub_bimodule_generated({unit_vec(q, 3, 0)}) ==
                  Subspace::span(q, 3, {unit_vec(q, 3, 0)}));
        check("Example A", "cohomology vanishes in degrees 1-5 (complex)",
              dims_json({2, 0, 0, 0, 0, 0}), dims_json(hl_dims(m, 5)));
        const TheoremReport ab = check_theorem(TheoremId::Ab, *line, m, 5);
        check("Example A", "closed periodicity formulas agree with the complex",
              std::string("Pass"), std::string(verdict_name(ab.verdict)));

        auto [b_alg, b_action] = fixtures::upper_identity_pair(q);
        auto b_ptr = std::make_shared<const LeibnizAlgebra>(std::move(b_alg));
        const Bimodule b_mod = symmetrized(b_ptr, b_action);
        const FittingPair pair = fitting_set(b_mod, Subspace::full(q, 2));
        check("Example B", "Fitting zero part vanishes", true, pair.zero_part.is_zero());
        check("Example B", "Fitting one part is everything", true, pair.one_part.is_full());

        auto d_alg = std::make_shared<const LeibnizAlgebra>(io::builtin_algebra("D", q));
        check("Example D", "trivial coefficient dimensions, degrees 0-5",
              dims_json({1, 1, 1, 1, 1, 1}),
              dims_json(hl_dims(io::builtin_coefficients("trivial", d_alg), 5)));
        const Bimodule d_adj = io::builtin_coefficients("adjoint", d_alg);
        check("Example D", "adjoint dimensions, degrees 0-2", dims_json({1, 0, 0}),
              dims_json(hl_dims(d_adj, 2)));
        const CohomologyResult d0 = hl(d_adj, 0);
        check("Example D", "degree-0 adjoint cohomology is spanned by e", true,
              Subspace::span(q, 2, d0.representatives) ==
                  Subspace::span(q, 2, {unit_vec(q, 2, 1)}));
    }

    bool all_pass = true;
    for (const auto& rec : records) all_pass = all_pass && rec["pass"].get<bool>();
    if (format == "json") {
        std::cout << json{{"command", "paper-suite"}, {"records", records}, {"ok", all_pass}}.dump(2)
                  << "\n";
    } else {
        for (const auto& rec : records) {
            std::cout << (rec["pass"].get<bool>() ? "PASS" : "FAIL") << "  ["
                      << rec["paper_anchor"].get<std::string>() << "] "
                      << rec["check"].get<std::string>() << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Leibniz algebra cohomology engine"};
    app.require_subcommand(1);

    AlgebraChoice val_choice;
    std::string val_bimodule;
    auto* validate = app.add_subcommand("validate", "check the defining identities of documents");
    validate->add_option("algebra", val_choice.file, "algebra document (JSON)");
    validate->add_option("bimodule", val_bimodule, "bimodule document (JSON)");
    validate->add_option("--example", val_choice.example, "built-in algebra name");
    validate->add_option("--field", val_choice.field, "field for built-ins: Q or a prime");

    AlgebraChoice coh_choice;
    std::string coh_coeffs, coh_bimodule, coh_format = "table";
    unsigned coh_degree = 6;
    bool coh_reps = false;
    auto* cohomology = app.add_subcommand("cohomology", "dimensions of HL^n and representatives");
    cohomology->add_option("--algebra", coh_choice.file, "algebra document (JSON)");
    cohomology->add_option("--example", coh_choice.example, "built-in algebra name");
    cohomology->add_option("--field", coh_choice.field, "field for built-ins: Q or a prime");
    cohomology->add_option("--coeffs", coh_coeffs, "trivial | adjoint | A-mod | B");
    cohomology->add_option("--bimodule", coh_bimodule, "bimodule document (JSON)");
    cohomology->add_option("--max-degree", coh_degree, "top degree (default 6)");
    cohomology->add_option("--format", coh_format, "table | json");
    cohomology->add_flag("--representatives", coh_reps, "print representative cocycles");

    std::vector<std::string> verify_ids;
    bool verify_all = false, verify_builtin = false;
    std::size_t verify_instances = 100;
    std::uint64_t verify_seed = 1;
    unsigned verify_degree = 3;
    std::string verify_format = "table";
    auto* verify = app.add_subcommand("verify", "randomized and named theorem verification");
    verify->add_option("--theorem", verify_ids, "theorem ids (see README)");
    verify->add_flag("--all", verify_all, "verify every statement");
    verify->add_flag("--all-builtin", verify_builtin, "run on the built-in instances");
    verify->add_option("--instances", verify_instances, "random instances per statement");
    verify->add_option("--seed", verify_seed, "sweep seed");
    verify->add_option("--max-degree", verify_degree, "top cohomology degree");
    verify->add_option("--format", verify_format, "table | json");

    std::string suite_conjecture, suite_format = "table";
    unsigned suite_degree = 5;
    bool suite_scan = false;
    std::size_t suite_instances = 50;
    std::uint64_t suite_seed = 1;
    auto* suite = app.add_subcommand("paper-suite", "run every built-in example check");
    suite->add_option("--conjecture", suite_conjecture,
                      "C | D | hemi: report adjoint dimensions only");
    suite->add_option("--max-degree", suite_degree, "top degree for conjecture/scan modes");
    suite->add_option("--format", suite_format, "table | json");
    suite->add_flag("--scan-periodicity", suite_scan,
                    "list random algebras with two-periodic computed dimensions");
    suite->add_option("--instances", suite_instances, "instances for the scan modes");
    suite->add_option("--seed", suite_seed, "seed for the periodicity scan");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(val_choice, val_bimodule);
        if (cohomology->parsed())
            return run_cohomology(coh_choice, coh_coeffs, coh_bimodule, coh_degree, coh_format,
                                  coh_reps);
        if (verify->parsed())
            return run_verify(verify_ids, verify_all, verify_builtin, verify_instances, verify_seed,
                              verify_degree, verify_format);
        if (suite->parsed())
            return run_paper_suite(suite_conjecture, suite_degree, suite_format, suite_scan,
                                   suite_instances, suite_seed);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ValidationError& e) {
        std::cerr << "mathematical violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitInput;
}
