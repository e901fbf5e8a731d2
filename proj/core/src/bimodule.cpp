#include "leibniz/bimodule.hpp"

#include <algorithm>
#include <sstream>

namespace leibniz {

namespace {

void ensure(bool cond, const char* msg) {
    if (!cond) throw Error(std::string("internal invariant violated: ") + msg);
}

Vec matrix_column(const ExactMatrix& m, std::size_t j) {
    Vec unit = vec_zero(m.field(), m.cols());
    unit[j] = Scalar::one(m.field());
    return m.apply(unit);
}

}  // namespace

std::string BimoduleViolation::to_string() const {
    const char* name = axiom == Axiom::LeftCompat    ? "left actions"
                       : axiom == Axiom::MixedCompat ? "mixed actions"
                                                     : "right actions";
    std::ostringstream os;
    os << "bimodule compatibility fails for " << name << " at basis pair (" << i + 1 << ", " << j + 1
       << ")";
    return os.str();
}

Bimodule Bimodule::unchecked(std::shared_ptr<const LeibnizAlgebra> algebra, std::size_t dim_m,
                             std::vector<ExactMatrix> lambda, std::vector<ExactMatrix> rho) {
    if (!algebra) throw ValidationError("bimodule needs an algebra");
    const std::size_t d = algebra->dim();
    if (lambda.size() != d || rho.size() != d)
        throw ValidationError("bimodule needs one lambda and one rho matrix per algebra basis element");
    for (const auto& m : lambda)
        if (m.rows() != dim_m || m.cols() != dim_m)
            throw ValidationError("lambda matrix has wrong shape");
    for (const auto& m : rho)
        if (m.rows() != dim_m || m.cols() != dim_m)
            throw ValidationError("rho matrix has wrong shape");
    Bimodule b;
    b.algebra_ = std::move(algebra);
    b.dim_m_ = dim_m;
    b.lambda_ = std::move(lambda);
    b.rho_ = std::move(rho);
    return b;
}

Bimodule Bimodule::checked(std::shared_ptr<const LeibnizAlgebra> algebra, std::size_t dim_m,
                           std::vector<ExactMatrix> lambda, std::vector<ExactMatrix> rho) {
    Bimodule b = unchecked(std::move(algebra), dim_m, std::move(lambda), std::move(rho));
    if (auto bad = b.validate()) throw ValidationError(bad->to_string());
    return b;
}

std::optional<BimoduleViolation> Bimodule::validate() const {
    const std::size_t d = algebra_->dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& cij = algebra_->basis_product(i, j);
            ExactMatrix lam_ij(field(), dim_m_, dim_m_);
            ExactMatrix rho_ij(field(), dim_m_, dim_m_);
            for (std::size_t t = 0; t < d; ++t) {
                if (cij[t].is_zero()) continue;
                lam_ij = lam_ij + lambda_[t].scaled(cij[t]);
                rho_ij = rho_ij + rho_[t].scaled(cij[t]);
            }
            if (!(lam_ij == lambda_[i] * lambda_[j] - lambda_[j] * lambda_[i]))
                return BimoduleViolation{BimoduleViolation::Axiom::LeftCompat, i, j};
            if (!(rho_ij == lambda_[i] * rho_[j] - rho_[j] * lambda_[i]))
                return BimoduleViolation{BimoduleViolation::Axiom::MixedCompat, i, j};
            if (!(rho_[j] * rho_[i] == -(rho_[j] * lambda_[i])))
                return BimoduleViolation{BimoduleViolation::Axiom::RightCompat, i, j};
        }
    }
    return std::nullopt;
}

ExactMatrix Bimodule::lambda_of(const Vec& x) const {
    ExactMatrix m(field(), dim_m_, dim_m_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = m + lambda_[i].scaled(x[i]);
    return m;
}

ExactMatrix Bimodule::rho_of(const Vec& x) const {
    ExactMatrix m(field(), dim_m_, dim_m_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = m + rho_[i].scaled(x[i]);
    return m;
}

bool Bimodule::is_symmetric() const {
    for (std::size_t i = 0; i < algebra_->dim(); ++i)
        if (!(rho_[i] == -lambda_[i])) return false;
    return true;
}

bool Bimodule::is_antisymmetric() const {
    return std::all_of(rho_.begin(), rho_.end(), [](const ExactMatrix& m) { return m.is_zero(); });
}

bool Bimodule::is_trivial() const {
    return is_antisymmetric() &&
           std::all_of(lambda_.begin(), lambda_.end(), [](const ExactMatrix& m) { return m.is_zero(); });
}

Subspace Bimodule::right_invariants(const Subspace& s) const {
    if (s.ambient_dim() != algebra_->dim()) throw ValidationError("subset has wrong ambient dimension");
    Subspace inv = Subspace::full(field(), dim_m_);
    for (const auto& v : s.basis()) inv = inv.intersect(rank_kernel_image(rho_of(v)).kernel);
    if (algebra_->ideal_info(s).left)
        ensure(is_sub_bimodule(inv), "right invariants of a left ideal form a sub-bimodule");
    return inv;
}

Subspace Bimodule::antisymmetric_kernel() const {
    Subspace m0 = Subspace::zero(field(), dim_m_);
    for (std::size_t i = 0; i < algebra_->dim(); ++i)
        m0 = m0.sum(rank_kernel_image(lambda_[i] + rho_[i]).image);
    ensure(is_sub_bimodule(m0), "anti-symmetric kernel is a sub-bimodule");
    if (!m0.is_zero()) ensure(sub_bimodule(m0).is_antisymmetric(), "anti-symmetric kernel is anti-symmetric");
    if (m0.dim() < dim_m_)
        ensure(quotient_bimodule(m0).first.is_symmetric(), "quotient by the anti-symmetric kernel is symmetric");
    return m0;
}

Bimodule::Annihilators Bimodule::annihilators() const {
    const std::size_t d = algebra_->dim();
    auto kernel_of_family = [&](const std::vector<ExactMatrix>& mats) {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> trips;
        std::uint32_t row = 0;
        for (std::size_t s1 = 0; s1 < dim_m_; ++s1) {
            for (std::size_t s2 = 0; s2 < dim_m_; ++s2) {
                for (std::size_t i = 0; i < d; ++i) {
                    const Scalar v = mats[i].at(s1, s2);
                    if (!v.is_zero()) trips.emplace_back(row, static_cast<std::uint32_t>(i), v);
                }
                ++row;
            }
        }
        ExactMatrix m = ExactMatrix::from_triplets(field(), row, d, std::move(trips));
        return rank_kernel_image(m).kernel;
    };
    Annihilators ann;
    ann.left = kernel_of_family(lambda_);
    ann.right = kernel_of_family(rho_);
    ann.both = ann.left.intersect(ann.right);
    return ann;
}

bool Bimodule::is_sub_bimodule(const Subspace& w) const {
    if (w.ambient_dim() != dim_m_) throw ValidationError("subspace has wrong ambient dimension");
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        for (const auto& b : w.basis()) {
            if (!w.contains(lambda_[i].apply(b))) return false;
            if (!w.contains(rho_[i].apply(b))) return false;
        }
    }
    return true;
}

Subspace Bimodule::sub_bimodule_generated(const std::vector<Vec>& vectors) const {
    Subspace w = Subspace::span(field(), dim_m_, vectors);
    while (true) {
        std::vector<Vec> gens = w.basis();
        for (std::size_t i = 0; i < algebra_->dim(); ++i) {
            for (const auto& b : w.basis()) {
                gens.push_back(lambda_[i].apply(b));
                gens.push_back(rho_[i].apply(b));
            }
        }
        Subspace next = Subspace::span(field(), dim_m_, gens);
        if (next == w) return w;
        w = std::move(next);
    }
}

Bimodule Bimodule::sub_bimodule(const Subspace& w) const {
    if (!is_sub_bimodule(w)) throw ValidationError("subspace is not invariant under the actions");
    const std::size_t k = w.dim();
    std::vector<ExactMatrix> lam, rho;
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        std::vector<Vec> lcols, rcols;
        for (const auto& b : w.basis()) {
            lcols.push_back(w.coordinates(lambda_[i].apply(b)));
            rcols.push_back(w.coordinates(rho_[i].apply(b)));
        }
        lam.push_back(matrix_with_columns(field(), k, lcols));
        rho.push_back(matrix_with_columns(field(), k, rcols));
    }
    return checked(algebra_, k, std::move(lam), std::move(rho));
}

std::pair<Bimodule, QuotientMap> Bimodule::quotient_bimodule(const Subspace& w) const {
    if (!is_sub_bimodule(w)) throw ValidationError("subspace is not invariant under the actions");
    QuotientMap qm = quotient_map(w);
    const std::size_t k = dim_m_ - w.dim();
    std::vector<ExactMatrix> lam, rho;
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        lam.push_back(qm.projection * lambda_[i] * qm.section);
        rho.push_back(qm.projection * rho_[i] * qm.section);
    }
    return {checked(algebra_, k, std::move(lam), std::move(rho)), std::move(qm)};
}

Bimodule Bimodule::restrict_to_subalgebra(const Subspace& closed) const {
    auto [sub_algebra, basis] = algebra_->restrict_to(closed);
    std::vector<ExactMatrix> lam, rho;
    for (const auto& b : basis) {
        lam.push_back(lambda_of(b));
        rho.push_back(rho_of(b));
    }
    auto ptr = std::make_shared<const LeibnizAlgebra>(std::move(sub_algebra));
    return checked(std::move(ptr), dim_m_, std::move(lam), std::move(rho));
}

Bimodule Bimodule::conjugate(const ExactMatrix& p) const {
    if (p.rows() != dim_m_ || p.cols() != dim_m_) throw ValidationError("conjugation matrix has wrong shape");
    // inverse via linear solves against the identity
    std::vector<Vec> inv_cols;
    for (std::size_t j = 0; j < dim_m_; ++j) {
        Vec e = vec_zero(field(), dim_m_);
        e[j] = Scalar::one(field());
        auto sol = solve_linear(p, e);
        if (!sol) throw ValidationError("conjugation matrix is singular");
        inv_cols.push_back(*sol);
    }
    ExactMatrix pinv = matrix_with_columns(field(), dim_m_, inv_cols);
    std::vector<ExactMatrix> lam, rho;
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        lam.push_back(pinv * lambda_[i] * p);
        rho.push_back(pinv * rho_[i] * p);
    }
    return checked(algebra_, dim_m_, std::move(lam), std::move(rho));
}

std::size_t Bimodule::endomorphism_dim() const {
    // X with X lambda_i = lambda_i X and X rho_i = rho_i X for all i;
    // unknowns X_(a,b) flattened row-major.
    const std::size_t n = dim_m_;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> trips;
    std::uint32_t row = 0;
    auto add_commutator_rows = [&](const ExactMatrix& t) {
        // (X t - t X)_(a,c) = sum_b X_(a,b) t_(b,c) - t_(a,b) X_(b,c)
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar tbc = t.at(b, c);
                    if (!tbc.is_zero())
                        trips.emplace_back(row, static_cast<std::uint32_t>(a * n + b), tbc);
                    const Scalar tab = t.at(a, b);
                    if (!tab.is_zero())
                        trips.emplace_back(row, static_cast<std::uint32_t>(b * n + c), -tab);
                }
                ++row;
            }
        }
    };
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        add_commutator_rows(lambda_[i]);
        add_commutator_rows(rho_[i]);
    }
    ExactMatrix sys = ExactMatrix::from_triplets(field(), row, n * n, std::move(trips));
    return rank_kernel_image(sys).kernel.dim();
}

Bimodule trivial_bimodule(std::shared_ptr<const LeibnizAlgebra> a, std::size_t dim_m) {
    const FieldSpec f = a->field();
    const std::size_t d = a->dim();
    std::vector<ExactMatrix> lam(d, ExactMatrix(f, dim_m, dim_m));
    std::vector<ExactMatrix> rho(d, ExactMatrix(f, dim_m, dim_m));
    return Bimodule::checked(std::move(a), dim_m, std::move(lam), std::move(rho));
}

Bimodule adjoint_bimodule(std::shared_ptr<const LeibnizAlgebra> a) {
    std::vector<ExactMatrix> lam, rho;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        lam.push_back(a->left_mult(i));
        rho.push_back(a->right_mult(i));
    }
    const std::size_t d = a->dim();
    return Bimodule::checked(std::move(a), d, std::move(lam), std::move(rho));
}

Bimodule symmetrized(std::shared_ptr<const LeibnizAlgebra> a, std::vector<ExactMatrix> lambda) {
    std::vector<ExactMatrix> rho;
    rho.reserve(lambda.size());
    for (const auto& l : lambda) rho.push_back(-l);
    const std::size_t dim_m = lambda.empty() ? 0 : lambda.front().rows();
    return Bimodule::checked(std::move(a), dim_m, std::move(lambda), std::move(rho));
}

Bimodule antisymmetrized(std::shared_ptr<const LeibnizAlgebra> a, std::vector<ExactMatrix> lambda) {
    const std::size_t dim_m = lambda.empty() ? 0 : lambda.front().rows();
    const FieldSpec f = a->field();
    std::vector<ExactMatrix> rho(a->dim(), ExactMatrix(f, dim_m, dim_m));
    return Bimodule::checked(std::move(a), dim_m, std::move(lambda), std::move(rho));
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    if (a.algebra_ptr().get() != b.algebra_ptr().get() && !(a.algebra() == b.algebra()))
        throw ValidationError("direct sum requires bimodules over the same algebra");
    const std::size_t n = a.dim() + b.dim();
    const FieldSpec f = a.field();
    std::vector<ExactMatrix> lam, rho;
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
        ExactMatrix l(f, n, n), r(f, n, n);
        for (std::size_t s = 0; s < a.dim(); ++s) {
            for (const auto& [c, v] : a.lambda(i).row(s)) l.add_at(s, c, v);
            for (const auto& [c, v] : a.rho(i).row(s)) r.add_at(s, c, v);
        }
        for (std::size_t s = 0; s < b.dim(); ++s) {
            for (const auto& [c, v] : b.lambda(i).row(s)) l.add_at(a.dim() + s, a.dim() + c, v);
            for (const auto& [c, v] : b.rho(i).row(s)) r.add_at(a.dim() + s, a.dim() + c, v);
        }
        lam.push_back(std::move(l));
        rho.push_back(std::move(r));
    }
    return Bimodule::checked(a.algebra_ptr(), n, std::move(lam), std::move(rho));
}

Bimodule hom_from_adjoint_symmetrized(const Bimodule& m) {
    const LeibnizAlgebra& a = m.algebra();
    const FieldSpec f = m.field();
    const std::size_t d = a.dim();
    const std::size_t dm = m.dim();
    const std::size_t n = d * dm;  // block of dm coordinates per algebra basis element
    std::vector<ExactMatrix> lam;
    for (std::size_t i = 0; i < d; ++i) {
        ExactMatrix h(f, n, n);
        for (std::size_t j = 0; j < d; ++j) {
            // (x.f)(e_j) = lambda_x f(e_j) - f(e_i e_j)
            for (std::size_t s1 = 0; s1 < dm; ++s1)
                for (const auto& [s2, v] : m.lambda(i).row(s1)) h.add_at(j * dm + s1, j * dm + s2, v);
            const Vec& cij = a.basis_product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                if (cij[k].is_zero()) continue;
                for (std::size_t s = 0; s < dm; ++s) h.add_at(j * dm + s, k * dm + s, -cij[k]);
            }
        }
        lam.push_back(std::move(h));
    }
    return symmetrized(m.algebra_ptr(), std::move(lam));
}

namespace {

/// Candidate vectors for the irreducibility certificate: echelon basis
/// vectors, their one-step action images, and over Q (or a large prime
/// field) rational eigenvectors of each action matrix.
std::vector<Vec> irreducibility_candidates(const Bimodule& m, const Subspace& w) {
    std::vector<Vec> cands;
    for (const auto& b : w.basis()) cands.push_back(b);
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        for (const auto& b : w.basis()) {
            for (Vec img : {m.lambda(i).apply(b), m.rho(i).apply(b)})
                if (!vec_is_zero(img)) cands.push_back(std::move(img));
        }
    }
    return cands;
}

}  // namespace

IrreducibilityReport certify_irreducible(const Bimodule& m, std::uint64_t vector_budget) {
    IrreducibilityReport rep;
    const std::size_t n = m.dim();
    const FieldSpec f = m.field();
    if (n == 0) return rep;  // the zero module is not irreducible
    const Subspace full = Subspace::full(f, n);

    auto generates_all = [&](const Vec& v) { return m.sub_bimodule_generated({v}).is_full(); };

    if (f.is_prime_field()) {
        const std::uint64_t p = f.prime();
        std::uint64_t lines = 0, power = 1;
        bool small = true;
        for (std::size_t i = 0; i < n; ++i) {
            lines += power;
            if (power > vector_budget / p) {
                small = false;
                break;
            }
            power *= p;
        }
        if (small && lines <= vector_budget) {
            // exhaustive over canonical line representatives
            for (std::size_t first = 0; first < n; ++first) {
                const std::size_t tail = n - first - 1;
                std::vector<std::uint32_t> digits(tail, 0);
                while (true) {
                    Vec v = vec_zero(f, n);
                    v[first] = Scalar::one(f);
                    for (std::size_t t = 0; t < tail; ++t) v[first + 1 + t] = Scalar::of(f, digits[t]);
                    if (!generates_all(v)) {
                        rep.proper_generator = v;
                        rep.exhaustive = true;
                        return rep;
                    }
                    std::size_t pos = 0;
                    while (pos < tail) {
                        if (++digits[pos] < p) break;
                        digits[pos] = 0;
                        ++pos;
                    }
                    if (pos == tail) break;
                }
            }
            rep.irreducible = true;
            rep.exhaustive = true;
            return rep;
        }
    }

    for (const auto& v : irreducibility_candidates(m, full)) {
        if (!generates_all(v)) {
            rep.proper_generator = v;
            return rep;
        }
    }
    rep.irreducible = true;  // rational-form / sampled certificate only
    return rep;
}

namespace {

/// Descends through generated sub-bimodules until every candidate vector
/// generates everything.
Subspace find_irreducible_sub(const Bimodule& m, std::uint64_t vector_budget) {
    Subspace w = Subspace::full(m.field(), m.dim());
    while (true) {
        bool descended = false;
        for (const auto& b : w.basis()) {
            Subspace g = m.sub_bimodule_generated({b});
            if (g.dim() < w.dim() && !g.is_zero()) {
                w = std::move(g);
                descended = true;
                break;
            }
        }
        if (descended) continue;
        // every basis vector of w generates at least w; certify on the
        // induced module and descend through any counterexample found there
        Bimodule induced = m.sub_bimodule(w);
        IrreducibilityReport rep = certify_irreducible(induced, vector_budget);
        if (rep.irreducible) return w;
        Vec witness = vec_zero(m.field(), m.dim());
        for (std::size_t t = 0; t < rep.proper_generator->size(); ++t)
            vec_add_scaled(witness, w.basis()[t], (*rep.proper_generator)[t]);
        Subspace g = m.sub_bimodule_generated({witness});
        ensure(g.dim() < w.dim() && !g.is_zero(), "irreducibility witness generates a proper submodule");
        w = std::move(g);
    }
}

}  // namespace

CompositionSeries composition_series(const Bimodule& m, std::uint64_t vector_budget) {
    CompositionSeries series;
    series.chain.push_back(Subspace::zero(m.field(), m.dim()));
    if (m.dim() == 0) return series;

    Subspace w1 = find_irreducible_sub(m, vector_budget);
    Bimodule factor = m.sub_bimodule(w1);
    IrreducibilityReport rep = certify_irreducible(factor, vector_budget);
    ensure(rep.irreducible, "composition factor is irreducible");
    CompositionFactor cf;
    cf.dim = factor.dim();
    cf.trivial = factor.is_trivial();
    cf.exhaustive_certified = rep.exhaustive;
    cf.absolutely_irreducible = factor.endomorphism_dim() == 1;
    cf.factor = std::move(factor);
    series.factors.push_back(std::move(cf));
    series.chain.push_back(w1);

    if (w1.dim() == m.dim()) return series;

    auto [q, qm] = m.quotient_bimodule(w1);
    CompositionSeries rest = composition_series(q, vector_budget);
    for (std::size_t t = 1; t < rest.chain.size(); ++t) {
        std::vector<Vec> gens = w1.basis();
        for (const auto& row : rest.chain[t].basis()) gens.push_back(qm.section.apply(row));
        series.chain.push_back(Subspace::span(m.field(), m.dim(), gens));
    }
    for (auto& cf2 : rest.factors) series.factors.push_back(std::move(cf2));
    return series;
}

namespace fixtures {

Bimodule shift_corner_bimodule(const FieldSpec& f) {
    auto alg = std::make_shared<const LeibnizAlgebra>(one_dim_lie(f));
    ExactMatrix shift(f, 3, 3), corner(f, 3, 3);
    shift.set(0, 1, Scalar::one(f));
    shift.set(1, 2, Scalar::one(f));
    corner.set(0, 2, Scalar::one(f));
    return Bimodule::checked(std::move(alg), 3, {shift}, {corner});
}

std::pair<LeibnizAlgebra, std::vector<ExactMatrix>> upper_identity_pair(const FieldSpec& f) {
    LeibnizAlgebra alg = abelian(f, 2);
    ExactMatrix e(f, 2, 2);
    e.set(0, 1, Scalar::one(f));
    ExactMatrix id = ExactMatrix::identity(f, 2);
    return {std::move(alg), {e, id}};
}

}  // namespace fixtures

}  // namespace leibniz
