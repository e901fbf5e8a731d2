#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/fitting.hpp"
#include "leibniz/theorems.hpp"
#include "support/oracles.hpp"

using namespace leibniz;

namespace {

Vec vec_of(const FieldSpec& f, std::initializer_list<long long> entries) {
    Vec v;
    for (auto e : entries) v.push_back(Scalar::of(f, e));
    return v;
}

}  // namespace

TEST_CASE("Fitting decomposition of a single operator") {
    const FieldSpec q = FieldSpec::rationals();
    SUBCASE("nilpotent operator") {
        ExactMatrix n(q, 2, 2);
        n.set(0, 1, Scalar::one(q));
        const FittingPair pair = fitting_operator(n);
        CHECK(pair.zero_part.is_full());
        CHECK(pair.one_part.is_zero());
    }
    SUBCASE("invertible operator") {
        const FittingPair pair = fitting_operator(ExactMatrix::identity(q, 3).scaled(Scalar::of(q, 2)));
        CHECK(pair.zero_part.is_zero());
        CHECK(pair.one_part.is_full());
    }
    SUBCASE("mixed block operator splits 2 + 1") {
        ExactMatrix t(q, 3, 3);
        t.set(0, 1, Scalar::one(q));          // nilpotent Jordan block on e1, e2
        t.set(2, 2, Scalar::of(q, 3));        // scalar 3 on e3
        const FittingPair pair = fitting_operator(t);
        CHECK(pair.zero_part.dim() == 2);
        CHECK(pair.one_part.dim() == 1);
        CHECK(pair.one_part == Subspace::span(q, 3, {vec_of(q, {0, 0, 1})}));
    }
}

TEST_CASE("Fitting pair of a set of elements") {
    const FieldSpec q = FieldSpec::rationals();
    SUBCASE("the upper/identity pair splits fully into the one part") {
        auto [alg, action] = fixtures::upper_identity_pair(q);
        auto a = std::make_shared<const LeibnizAlgebra>(std::move(alg));
        const Bimodule m = symmetrized(a, action);
        const FittingPair pair = fitting_set(m, Subspace::full(q, 2));
        CHECK(pair.zero_part.is_zero());
        CHECK(pair.one_part.is_full());
    }
    SUBCASE("trivial coefficients are all zero part") {
        auto a = std::make_shared<const LeibnizAlgebra>(fixtures::two_dim_nilpotent(q));
        const Bimodule t = trivial_bimodule(a, 2);
        const FittingPair pair = fitting_set(t, Subspace::full(q, 2));
        CHECK(pair.zero_part.is_full());
        CHECK(pair.one_part.is_zero());
    }
    SUBCASE("adjoint module of the nilpotent model is all zero part") {
        auto a = std::make_shared<const LeibnizAlgebra>(fixtures::two_dim_nilpotent(q));
        const FittingPair pair = fitting_set(adjoint_bimodule(a), Subspace::full(q, 2));
        CHECK(pair.zero_part.is_full());
        CHECK(pair.one_part.is_zero());
    }
    SUBCASE("the precondition names a non-nilpotent element") {
        auto a = std::make_shared<const LeibnizAlgebra>(fixtures::two_dim_supersolvable(q));
        const Bimodule adj = adjoint_bimodule(a);
        const Subspace h_line = Subspace::span(q, 2, {vec_of(q, {1, 0})});
        CHECK_THROWS_WITH_AS(fitting_set(adj, h_line),
                             doctest::Contains("not nilpotent"), ValidationError);
    }
}

TEST_CASE("operator identities for powers of left actions") {
    const FieldSpec q = FieldSpec::rationals();
    SUBCASE("exponent one on any validated bimodule") {
        auto a = std::make_shared<const LeibnizAlgebra>(fixtures::two_dim_supersolvable(q));
        const Bimodule adj = adjoint_bimodule(a);
        CHECK_FALSE(verify_nilpotency_identities(adj, vec_of(q, {1, 0}), 1).has_value());
        CHECK_FALSE(verify_nilpotency_identities(adj, vec_of(q, {1, 1}), 1).has_value());
    }
    SUBCASE("the shift/corner bimodule at exponent two") {
        const Bimodule m = fixtures::shift_corner_bimodule(q);
        CHECK_FALSE(verify_nilpotency_identities(m, vec_of(q, {1}), 2).has_value());
    }
    SUBCASE("adjoint module of the nilpotent model at exponent three") {
        auto a = std::make_shared<const LeibnizAlgebra>(fixtures::two_dim_nilpotent(q));
        CHECK_FALSE(
            verify_nilpotency_identities(adjoint_bimodule(a), vec_of(q, {0, 1}), 3).has_value());
    }
    SUBCASE("random instances over small prime fields up to exponent four") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            RandomAlgebraSpec spec;
            spec.field = seed % 2 ? FieldSpec::prime_field(3) : FieldSpec::prime_field(5);
            spec.dim = 1 + seed % 3;
            spec.cls = RandomAlgebraSpec::Class::Any;
            spec.seed = 80 + seed;
            auto a = std::make_shared<const LeibnizAlgebra>(random_algebra(spec));
            const Bimodule m = random_bimodule(a, 1 + seed % 3, seed);
            for (unsigned n = 1; n <= 4; ++n) {
                for (std::size_t i = 0; i < a->dim(); ++i) {
                    Vec e = vec_zero(a->field(), a->dim());
                    e[i] = Scalar::one(a->field());
                    CHECK_FALSE(verify_nilpotency_identities(m, e, n).has_value());
                }
            }
        }
    }
}

TEST_CASE("Fitting theorem claims on random nilpotent instances") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        RandomAlgebraSpec spec;
        spec.field = seed % 3 == 0   ? FieldSpec::prime_field(2)
                     : seed % 3 == 1 ? FieldSpec::prime_field(3)
                                     : FieldSpec::prime_field(5);
        spec.dim = 1 + seed % 3;
        spec.cls = RandomAlgebraSpec::Class::Nilpotent;
        spec.seed = 300 + seed;
        auto a = std::make_shared<const LeibnizAlgebra>(random_algebra(spec));
        const Bimodule m = random_bimodule(a, 1 + seed % 3, seed * 13);
        const Subspace s = Subspace::full(a->field(), a->dim());
        // in a nilpotent algebra every left multiplication is nilpotent
        const FittingPair pair = fitting_set(m, s);
        CHECK(m.is_sub_bimodule(pair.zero_part));
        CHECK(m.is_sub_bimodule(pair.one_part));
        CHECK(pair.zero_part.dim() + pair.one_part.dim() == m.dim());
        CHECK(pair.zero_part.intersect(pair.one_part).is_zero());
        if (!pair.zero_part.is_zero()) {
            const Bimodule induced = m.sub_bimodule(pair.zero_part);
            for (const auto& v : s.basis()) {
                const unsigned bound = static_cast<unsigned>(induced.dim()) + 1;
                CHECK(induced.lambda_of(v).pow(bound).is_zero());
                CHECK(induced.rho_of(v).pow(bound).is_zero());
            }
        }
    }
}

TEST_CASE("operator Fitting parts decompose and restrict invertibly") {
    std::mt19937_64 rng(4242);
    const FieldSpec f5 = FieldSpec::prime_field(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const ExactMatrix t = oracles::random_matrix(f5, n, n, rng);
        const FittingPair pair = fitting_operator(t);
        CHECK(pair.zero_part.dim() + pair.one_part.dim() == n);
        CHECK(pair.zero_part.intersect(pair.one_part).is_zero());
        // t has trivial kernel on the one part
        for (const auto& b : pair.one_part.basis())
            if (vec_is_zero(t.apply(b))) CHECK(vec_is_zero(b));
    }
}
