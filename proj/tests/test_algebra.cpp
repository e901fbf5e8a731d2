#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/algebra.hpp"
#include "leibniz/theorems.hpp"
#include "support/oracles.hpp"

using namespace leibniz;

namespace {

Vec vec_of(const FieldSpec& f, std::initializer_list<long long> entries) {
    Vec v;
    for (auto e : entries) v.push_back(Scalar::of(f, e));
    return v;
}

Subspace line(const FieldSpec& f, std::initializer_list<long long> entries) {
    return Subspace::span(f, entries.size(), {vec_of(f, entries)});
}

/// Basis (e, f) with f f = e and e f = f: violates the left Leibniz identity.
LeibnizAlgebra broken_two_dim(const FieldSpec& f) {
    std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, vec_zero(f, 2)));
    c[1][1][0] = Scalar::one(f);  // f f = e
    c[0][1][1] = Scalar::one(f);  // e f = f
    return LeibnizAlgebra::unchecked(f, 2, std::move(c));
}

}  // namespace

TEST_CASE("validation accepts the two-dimensional model algebras") {
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        CHECK_FALSE(fixtures::two_dim_nilpotent(f).validate().has_value());
        CHECK_FALSE(fixtures::two_dim_supersolvable(f).validate().has_value());
        CHECK_FALSE(fixtures::two_dim_solvable_lie(f).validate().has_value());
        CHECK_FALSE(fixtures::sl2(f).validate().has_value());
    }
}

TEST_CASE("validation pinpoints a violation") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra bad = broken_two_dim(q);
    const auto violation = bad.validate();
    REQUIRE(violation.has_value());
    // the identity in particular fails on the triple (f, f, f):
    // f (f f) = f e = 0 while (f f) f + f (f f) = e f = f
    const Vec ff = bad.basis_product(1, 1);
    const Vec lhs = bad.product(vec_of(q, {0, 1}), ff);
    Vec rhs = bad.product(ff, vec_of(q, {0, 1}));
    rhs = vec_add(rhs, lhs);
    CHECK(vec_is_zero(bad.product(vec_of(q, {0, 1}), ff)));
    CHECK_FALSE(vec_is_zero(bad.product(ff, vec_of(q, {0, 1}))));
    CHECK_THROWS_AS(LeibnizAlgebra::checked(q, 2, {{vec_of(q, {0, 0}), vec_of(q, {0, 1})},
                                                   {vec_of(q, {0, 0}), vec_of(q, {1, 0})}}),
                    ValidationError);
}

TEST_CASE("Leibniz kernel") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(fixtures::sl2(q).leibniz_kernel().is_zero());
    CHECK(fixtures::two_dim_solvable_lie(q).leibniz_kernel().is_zero());
    CHECK(fixtures::two_dim_nilpotent(q).leibniz_kernel() == line(q, {1, 0}));
    CHECK(fixtures::two_dim_supersolvable(q).leibniz_kernel() == line(q, {0, 1}));

    SUBCASE("agrees with the exhaustive square span over small fields") {
        const FieldSpec f3 = FieldSpec::prime_field(3);
        CHECK(fixtures::two_dim_nilpotent(f3).leibniz_kernel() ==
              oracles::brute_force_square_span(fixtures::two_dim_nilpotent(f3)));
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            RandomAlgebraSpec spec;
            spec.field = seed % 2 ? FieldSpec::prime_field(2) : f3;
            spec.dim = 1 + seed % 3;
            spec.cls = RandomAlgebraSpec::Class::Any;
            spec.seed = seed;
            const LeibnizAlgebra a = random_algebra(spec);
            CHECK(a.leibniz_kernel() == oracles::brute_force_square_span(a));
        }
    }
}

TEST_CASE("canonical Lie quotient") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(fixtures::sl2(q).canonical_lie().first.dim() == 3);
    const auto [nq, nqm] = fixtures::two_dim_nilpotent(q).canonical_lie();
    CHECK(nq.dim() == 1);
    CHECK(vec_is_zero(nq.basis_product(0, 0)));
    const auto [aq, aqm] = fixtures::two_dim_supersolvable(q).canonical_lie();
    CHECK(aq.dim() == 1);
    CHECK(vec_is_zero(aq.basis_product(0, 0)));
}

TEST_CASE("series, nilpotency and solvability") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra n = fixtures::two_dim_nilpotent(q);
    const LeibnizAlgebra a = fixtures::two_dim_supersolvable(q);

    const IdealChain n_series = n.series(SeriesKind::LeftDescendingCentral);
    REQUIRE(n_series.terms.size() == 3);
    CHECK(n_series.terms[0].is_full());
    CHECK(n_series.terms[1] == line(q, {1, 0}));
    CHECK(n_series.terms[2].is_zero());

    const IdealChain a_series = a.series(SeriesKind::LeftDescendingCentral);
    REQUIRE(a_series.terms.size() == 3);
    CHECK(a_series.terms[1] == line(q, {0, 1}));
    CHECK(a_series.terms[2] == line(q, {0, 1}));  // stabilizes away from zero

    const IdealChain ab = fixtures::abelian(q, 2).series(SeriesKind::Derived);
    REQUIRE(ab.terms.size() == 2);
    CHECK(ab.terms[1].is_zero());

    CHECK(n.is_nilpotent());
    CHECK(n.is_solvable());
    CHECK_FALSE(a.is_nilpotent());
    CHECK(a.is_solvable());
    CHECK(fixtures::one_dim_lie(q).is_nilpotent());
    CHECK(fixtures::one_dim_lie(q).is_solvable());
    CHECK_FALSE(fixtures::sl2(q).is_solvable());
}

TEST_CASE("left center and right centralizer") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra n = fixtures::two_dim_nilpotent(q);
    const LeibnizAlgebra a = fixtures::two_dim_supersolvable(q);
    CHECK(n.left_center() == line(q, {1, 0}));
    CHECK(a.left_center() == line(q, {0, 1}));
    CHECK(fixtures::abelian(q, 3).left_center().is_full());

    CHECK(a.right_centralizer(Subspace::zero(q, 2)).is_full());
    CHECK(a.right_centralizer(line(q, {0, 1})).is_full());   // e h = e e = 0
    CHECK(a.right_centralizer(line(q, {1, 0})) == line(q, {1, 0}));  // h e = e
}

TEST_CASE("ideal predicates and closure") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra n = fixtures::two_dim_nilpotent(q);
    const LeibnizAlgebra a = fixtures::two_dim_supersolvable(q);
    CHECK(n.ideal_info(n.leibniz_kernel()).two_sided());
    CHECK_FALSE(a.ideal_info(line(q, {1, 0})).two_sided());  // h e = e leaves span{h}
    CHECK(a.ideal_info(Subspace::zero(q, 2)).two_sided());
    CHECK(a.ideal_info(Subspace::full(q, 2)).two_sided());
    CHECK(a.ideal_closure(line(q, {1, 0})).is_full());
    CHECK(a.ideal_closure(line(q, {0, 1})) == line(q, {0, 1}));
}

TEST_CASE("quotients") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra n = fixtures::two_dim_nilpotent(q);
    const auto [same, qm0] = n.quotient(Subspace::zero(q, 2));
    CHECK(same.dim() == 2);
    CHECK(same == n);
    const auto [nq, qm1] = n.quotient(line(q, {1, 0}));
    CHECK(nq.dim() == 1);
    CHECK(vec_is_zero(nq.basis_product(0, 0)));
    CHECK_THROWS_AS(fixtures::two_dim_supersolvable(q).quotient(line(q, {1, 0})), ValidationError);
}

TEST_CASE("supersolvability") {
    const FieldSpec f5 = FieldSpec::prime_field(5);
    SUBCASE("supersolvable two-dimensional algebra over GF(5)") {
        const auto res = fixtures::two_dim_supersolvable(f5).is_supersolvable();
        REQUIRE(res.status == SupersolvableResult::Status::Yes);
        REQUIRE(res.chain.has_value());
        REQUIRE(res.chain->terms.size() == 3);
        CHECK(res.chain->terms[0].is_full());
        CHECK(res.chain->terms[1] == line(f5, {0, 1}));
        CHECK(res.chain->terms[2].is_zero());
    }
    SUBCASE("nilpotent implies supersolvable") {
        CHECK(fixtures::two_dim_nilpotent(f5).is_supersolvable().status ==
              SupersolvableResult::Status::Yes);
    }
    SUBCASE("simple three-dimensional Lie algebra is not supersolvable over GF(7)") {
        CHECK(fixtures::sl2(FieldSpec::prime_field(7)).is_supersolvable().status ==
              SupersolvableResult::Status::No);
    }
    SUBCASE("rational eigenvalue search handles the model algebras over Q") {
        const FieldSpec q = FieldSpec::rationals();
        CHECK(fixtures::two_dim_supersolvable(q).is_supersolvable().status ==
              SupersolvableResult::Status::Yes);
        CHECK(fixtures::two_dim_nilpotent(q).is_supersolvable().status ==
              SupersolvableResult::Status::Yes);
        // over Q a failed search is reported as Unknown, never No
        CHECK(fixtures::sl2(q).is_supersolvable().status == SupersolvableResult::Status::Unknown);
    }
}

TEST_CASE("maximal subalgebras and the Frattini subalgebra") {
    SUBCASE("one-dimensional algebra") {
        const FieldSpec f2 = FieldSpec::prime_field(2);
        const auto maximal = fixtures::one_dim_lie(f2).maximal_subalgebras();
        REQUIRE(maximal.size() == 1);
        CHECK(maximal[0].is_zero());
        CHECK(fixtures::one_dim_lie(f2).frattini().is_zero());
    }
    SUBCASE("nilpotent model over GF(2): the closed lines") {
        const FieldSpec f2 = FieldSpec::prime_field(2);
        const LeibnizAlgebra n = fixtures::two_dim_nilpotent(f2);
        // oracle: test closure of each of the three lines directly
        std::vector<Subspace> closed;
        for (const auto& v : oracles::all_vectors(f2, 2)) {
            if (vec_is_zero(v)) continue;
            const Subspace l = Subspace::span(f2, 2, {v});
            if (l.contains(n.product(v, v))) closed.push_back(l);
        }
        REQUIRE(closed.size() == 1);
        const auto maximal = n.maximal_subalgebras();
        REQUIRE(maximal.size() == 1);
        CHECK(maximal[0] == closed[0]);
    }
    SUBCASE("supersolvable model over GF(2): maximal subalgebras have codimension one") {
        const FieldSpec f2 = FieldSpec::prime_field(2);
        for (const auto& m : fixtures::two_dim_supersolvable(f2).maximal_subalgebras())
            CHECK(m.dim() == 1);
    }
    SUBCASE("Frattini subalgebra of the nilpotent model over GF(3) is its nilpotent ideal") {
        const FieldSpec f3 = FieldSpec::prime_field(3);
        const LeibnizAlgebra n = fixtures::two_dim_nilpotent(f3);
        const Subspace fr = n.frattini();
        CHECK(fr == line(f3, {1, 0}));
        CHECK(n.ideal_info(fr).two_sided());
        CHECK(n.restrict_to(fr).first.is_nilpotent());
    }
    SUBCASE("split abelian sum has trivial Frattini subalgebra") {
        const FieldSpec f2 = FieldSpec::prime_field(2);
        CHECK(fixtures::abelian(f2, 2).frattini().is_zero());
    }
    SUBCASE("budget refusal") {
        const FieldSpec f2 = FieldSpec::prime_field(2);
        CHECK_THROWS_AS(fixtures::abelian(f2, 5).all_subalgebras(10), BudgetError);
    }
}

TEST_CASE("exponentials of left multiplications") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra a = fixtures::two_dim_supersolvable(q);
    SUBCASE("zero element acts as the identity") {
        const Subspace k = line(q, {1, 0});
        CHECK(a.exp_conjugate(vec_of(q, {0, 0}), k) == k);
    }
    SUBCASE("the square-zero generator acts trivially") {
        // e h = e e = 0, so exp(L_e) = id
        CHECK(a.exp_left_automorphism(vec_of(q, {0, 1})) == ExactMatrix::identity(q, 2));
    }
    SUBCASE("conjugating complements in the solvable Lie model over GF(5)") {
        const FieldSpec f5 = FieldSpec::prime_field(5);
        const LeibnizAlgebra lie = fixtures::two_dim_solvable_lie(f5);
        const Subspace k = line(f5, {1, 0});             // span{h}
        const Subspace k2 = Subspace::span(f5, 2, {vec_of(f5, {1, 2})});  // span{h + 2e}
        bool found = false;
        for (long long s = 0; s < 5 && !found; ++s) {
            const Subspace image = lie.exp_conjugate(vec_of(f5, {0, s}), k);
            if (image == k2) found = true;
        }
        CHECK(found);
    }
    SUBCASE("image of a subalgebra is multiplication-closed") {
        const FieldSpec f5 = FieldSpec::prime_field(5);
        const LeibnizAlgebra lie = fixtures::two_dim_solvable_lie(f5);
        const Subspace image = lie.exp_conjugate(vec_of(f5, {0, 3}), line(f5, {1, 0}));
        for (const auto& u : image.basis())
            for (const auto& v : image.basis()) CHECK(image.contains(lie.product(u, v)));
    }
}

TEST_CASE("hemi-semidirect products") {
    const FieldSpec q = FieldSpec::rationals();
    const LeibnizAlgebra h = fixtures::one_dim_lie(q);
    SUBCASE("recovers the supersolvable model") {
        ExactMatrix act(q, 1, 1);
        act.set(0, 0, Scalar::one(q));
        const LeibnizAlgebra prod = hemi_semidirect(h, {act});
        CHECK(prod == fixtures::two_dim_supersolvable(q));
    }
    SUBCASE("zero action gives the abelian algebra") {
        const LeibnizAlgebra prod = hemi_semidirect(h, {ExactMatrix(q, 1, 1)});
        CHECK(prod == fixtures::abelian(q, 2));
    }
    SUBCASE("nilpotent two-step action gives a 3-dim nilpotent non-Lie algebra") {
        ExactMatrix act(q, 2, 2);
        act.set(1, 0, Scalar::one(q));  // h e1 = e2, h e2 = 0
        const LeibnizAlgebra prod = hemi_semidirect(h, {act});
        CHECK(prod.dim() == 3);
        CHECK_FALSE(prod.validate().has_value());
        CHECK(prod.is_nilpotent());
        CHECK_FALSE(prod.leibniz_kernel().is_zero());
    }
    SUBCASE("rejects non-Lie left factors and non-module actions") {
        CHECK_THROWS_AS(hemi_semidirect(fixtures::two_dim_nilpotent(q),
                                        {ExactMatrix(q, 1, 1), ExactMatrix(q, 1, 1)}),
                        ValidationError);
        ExactMatrix bad(q, 2, 2);
        bad.set(0, 0, Scalar::one(q));
        // sl2 action must satisfy the bracket relation; a single projection fails
        ExactMatrix z(q, 2, 2);
        CHECK_THROWS_AS(hemi_semidirect(fixtures::sl2(q), {bad, z, z}), ValidationError);
    }
}

TEST_CASE("structural invariants on random algebras") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        RandomAlgebraSpec spec;
        spec.field = seed % 3 == 0   ? FieldSpec::prime_field(2)
                     : seed % 3 == 1 ? FieldSpec::prime_field(3)
                                     : FieldSpec::prime_field(5);
        spec.dim = 1 + seed % 3;
        spec.cls = seed % 2 ? RandomAlgebraSpec::Class::Nilpotent : RandomAlgebraSpec::Class::Any;
        spec.seed = 1000 + seed;
        const LeibnizAlgebra a = random_algebra(spec);

        const Subspace leib = a.leibniz_kernel();
        CHECK(a.ideal_info(leib).two_sided());
        CHECK(a.subspace_product(leib, leib).is_zero());
        if (a.dim() > 0) CHECK(leib.dim() < a.dim());
        CHECK(a.canonical_lie().first.leibniz_kernel().is_zero());
        CHECK(a.left_center().contains(leib));

        if (a.is_nilpotent()) {
            const auto ss = a.is_supersolvable();
            CHECK(ss.status == SupersolvableResult::Status::Yes);
            CHECK(a.is_solvable());
        }
        const auto ss = a.is_supersolvable();
        if (ss.status == SupersolvableResult::Status::Yes) {
            CHECK(a.is_solvable());
            // the derived subalgebra of a supersolvable algebra is nilpotent
            const Subspace derived = a.derived_subalgebra();
            CHECK(a.restrict_to(derived).first.is_nilpotent());
            // chain terms are ideals with one-dimensional quotients
            const auto& chain = *ss.chain;
            for (std::size_t t = 0; t + 1 < chain.terms.size(); ++t)
                CHECK(chain.terms[t].dim() == chain.terms[t + 1].dim() + 1);
        }
    }
}
