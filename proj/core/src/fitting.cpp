#include "leibniz/fitting.hpp"

#include <sstream>

namespace leibniz {

namespace {

void ensure(bool cond, const char* msg) {
    if (!cond) throw Error(std::string("internal invariant violated: ") + msg);
}

std::string element_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
    os << ")";
    return os.str();
}

bool nilpotent_on(const Bimodule& induced, const ExactMatrix& op) {
    return op.pow(static_cast<unsigned>(induced.dim()) + 1).is_zero();
}

}  // namespace

FittingPair fitting_operator(const ExactMatrix& t) {
    if (!t.is_square()) throw ValidationError("Fitting decomposition needs a square matrix");
    const std::size_t d = t.rows();
    const ExactMatrix td = t.pow(static_cast<unsigned>(d));
    const RankResult rr = rank_kernel_image(td);
    FittingPair pair{rr.kernel, rr.image};
    ensure(pair.zero_part.dim() + pair.one_part.dim() == d, "Fitting parts decompose the space");
    ensure(pair.zero_part.intersect(pair.one_part).is_zero(), "Fitting parts intersect trivially");
    // invertible on the one part: t maps it bijectively onto itself
    for (const auto& b : pair.one_part.basis())
        ensure(pair.one_part.contains(t.apply(b)), "one part is invariant");
    std::vector<Vec> images;
    for (const auto& b : pair.one_part.basis()) images.push_back(t.apply(b));
    ensure(Subspace::span(t.field(), d, images).dim() == pair.one_part.dim(),
           "operator is invertible on the one part");
    for (const auto& b : pair.zero_part.basis())
        ensure(vec_is_zero(td.apply(b)), "operator is nilpotent on the zero part");
    return pair;
}

FittingPair fitting_set(const Bimodule& m, const Subspace& s) {
    const LeibnizAlgebra& a = m.algebra();
    if (s.ambient_dim() != a.dim()) throw ValidationError("set has wrong ambient dimension");
    for (const auto& v : s.basis()) {
        const ExactMatrix lv = a.left_mult(v);
        if (!lv.pow(static_cast<unsigned>(a.dim())).is_zero())
            throw ValidationError("left multiplication by " + element_to_string(v) +
                                  " is not nilpotent on the algebra");
    }
    const std::size_t dm = m.dim();
    FittingPair pair{Subspace::full(m.field(), dm), Subspace::zero(m.field(), dm)};
    for (const auto& v : s.basis()) {
        const ExactMatrix power = m.lambda_of(v).pow(static_cast<unsigned>(dm));
        const RankResult rr = rank_kernel_image(power);
        pair.zero_part = pair.zero_part.intersect(rr.kernel);
        pair.one_part = pair.one_part.sum(rr.image);
    }
    ensure(m.is_sub_bimodule(pair.zero_part), "Fitting zero part is a sub-bimodule");
    ensure(m.is_sub_bimodule(pair.one_part), "Fitting one part is a sub-bimodule");
    ensure(pair.zero_part.dim() + pair.one_part.dim() == dm, "Fitting parts decompose the module");
    ensure(pair.zero_part.intersect(pair.one_part).is_zero(), "Fitting parts intersect trivially");
    if (!pair.zero_part.is_zero()) {
        const Bimodule induced = m.sub_bimodule(pair.zero_part);
        for (const auto& v : s.basis()) {
            ensure(nilpotent_on(induced, induced.lambda_of(v)),
                   "set acts nilpotently on the zero part from the left");
            ensure(nilpotent_on(induced, induced.rho_of(v)),
                   "set acts nilpotently on the zero part from the right");
        }
    }
    return pair;
}

std::string NilpotencyIdentityFailure::to_string() const {
    const char* name = nullptr;
    switch (which) {
        case Which::PowLeftThenLeft: name = "lambda_x^n composed after lambda_y"; break;
        case Which::PowLeftThenRight: name = "lambda_x^n composed after rho_y"; break;
        case Which::LeftThenPowLeft: name = "lambda_y composed after lambda_x^n"; break;
        case Which::RightThenPowLeft: name = "rho_y composed after lambda_x^n"; break;
    }
    std::ostringstream os;
    os << "operator identity '" << name << "' fails for basis element " << y_index + 1;
    return os.str();
}

std::optional<NilpotencyIdentityFailure> verify_nilpotency_identities(const Bimodule& m, const Vec& x,
                                                                      unsigned n) {
    if (n < 1) throw ValidationError("identity exponent must be positive");
    const LeibnizAlgebra& a = m.algebra();
    const FieldSpec f = m.field();
    const std::size_t d = a.dim();

    const ExactMatrix lam_x = m.lambda_of(x);
    std::vector<ExactMatrix> lam_x_pow{ExactMatrix::identity(f, m.dim())};
    for (unsigned k = 1; k <= n; ++k) lam_x_pow.push_back(lam_x_pow.back() * lam_x);

    for (std::size_t j = 0; j < d; ++j) {
        // orbit L_x^k(e_j) in the algebra
        std::vector<Vec> orbit;
        Vec y = vec_zero(f, d);
        y[j] = Scalar::one(f);
        orbit.push_back(y);
        for (unsigned k = 1; k <= n; ++k) orbit.push_back(a.product(x, orbit.back()));

        using W = NilpotencyIdentityFailure::Which;
        const std::size_t dm = m.dim();
        ExactMatrix sum1(f, dm, dm), sum2(f, dm, dm), sum3(f, dm, dm), sum4(f, dm, dm);
        for (unsigned k = 0; k <= n; ++k) {
            const Scalar binom = binomial_scalar(f, n, k);
            const Scalar sign = (n - k) % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
            sum1 = sum1 + (m.lambda_of(orbit[k]) * lam_x_pow[n - k]).scaled(binom);
            sum2 = sum2 + (m.rho_of(orbit[k]) * lam_x_pow[n - k]).scaled(binom);
            sum3 = sum3 + (lam_x_pow[k] * m.lambda_of(orbit[n - k])).scaled(binom * sign);
            sum4 = sum4 + (lam_x_pow[k] * m.rho_of(orbit[n - k])).scaled(binom * sign);
        }
        const ExactMatrix lam_y = m.lambda_of(orbit[0]);
        const ExactMatrix rho_y = m.rho_of(orbit[0]);
        if (!(lam_x_pow[n] * lam_y == sum1)) return NilpotencyIdentityFailure{W::PowLeftThenLeft, j};
        if (!(lam_x_pow[n] * rho_y == sum2)) return NilpotencyIdentityFailure{W::PowLeftThenRight, j};
        if (!(lam_y * lam_x_pow[n] == sum3)) return NilpotencyIdentityFailure{W::LeftThenPowLeft, j};
        if (!(rho_y * lam_x_pow[n] == sum4)) return NilpotencyIdentityFailure{W::RightThenPowLeft, j};
    }
    return std::nullopt;
}

}  // namespace leibniz
