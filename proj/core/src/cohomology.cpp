#include "leibniz/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace leibniz {

namespace {

void ensure(bool cond, const char* msg) {
    if (!cond) throw Error(std::string("internal invariant violated: ") + msg);
}

using Triplets = std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>;

void advance_tuple(std::vector<std::uint32_t>& idx, std::size_t base, bool& done) {
    std::size_t pos = idx.size();
    while (pos > 0) {
        --pos;
        if (++idx[pos] < base) return;
        idx[pos] = 0;
    }
    done = true;
}

}  // namespace

DegreeGuard DegreeGuard::from_env() {
    DegreeGuard g;
    if (const char* env = std::getenv("LEIBNIZ_COH_MEMORY_MB")) {
        char* end = nullptr;
        const unsigned long long mb = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && mb > 0) g.limit_bytes = static_cast<std::size_t>(mb) << 20;
    }
    return g;
}

std::size_t DegreeGuard::estimate_bytes(const Bimodule& m, unsigned n) {
    const std::size_t rows = cochain_dim(m, n + 1);
    const std::size_t cols = cochain_dim(m, n);
    const std::size_t cell = m.field().is_prime_field() ? 8 : 48;
    if (cols != 0 && rows > SIZE_MAX / (cols ? cols : 1) / cell) return SIZE_MAX;
    return rows * cols * cell;
}

void DegreeGuard::check(const Bimodule& m, unsigned n) const {
    const std::size_t est = estimate_bytes(m, n);
    if (est > limit_bytes) {
        std::ostringstream os;
        os << "degree " << n << " needs an estimated " << (est >> 20) << " MB ("
           << cochain_dim(m, n + 1) << " x " << cochain_dim(m, n)
           << " coboundary), guard is " << (limit_bytes >> 20)
           << " MB; set LEIBNIZ_COH_MEMORY_MB to raise it";
        throw BudgetError(os.str());
    }
}

std::size_t tensor_count(std::size_t dim_l, unsigned n) {
    std::size_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (dim_l != 0 && v > (SIZE_MAX >> 8) / dim_l)
            throw BudgetError("tensor power overflows the index space");
        v *= dim_l;
    }
    return v;
}

std::size_t cochain_dim(const Bimodule& m, unsigned n) {
    return m.dim() * tensor_count(m.algebra().dim(), n);
}

std::size_t tensor_rank(std::size_t dim_l, const std::vector<std::uint32_t>& idx) {
    std::size_t r = 0;
    for (auto i : idx) r = r * dim_l + i;
    return r;
}

std::vector<std::uint32_t> tensor_unrank(std::size_t dim_l, unsigned n, std::size_t rank) {
    std::vector<std::uint32_t> idx(n, 0);
    for (unsigned t = n; t-- > 0;) {
        idx[t] = static_cast<std::uint32_t>(rank % dim_l);
        rank /= dim_l;
    }
    return idx;
}

ExactMatrix coboundary_matrix(const Bimodule& m, unsigned n) {
    const LeibnizAlgebra& a = m.algebra();
    const FieldSpec f = m.field();
    const std::size_t d = a.dim();
    const std::size_t dm = m.dim();
    const std::size_t rows = cochain_dim(m, n + 1);
    const std::size_t cols = cochain_dim(m, n);
    Triplets trips;
    if (d == 0 || dm == 0) return ExactMatrix(f, rows, cols);

    const Scalar one = Scalar::one(f);
    const Scalar minus = -one;
    std::vector<std::uint32_t> tup(n + 1, 0);
    bool done = false;
    std::size_t rt = 0;
    std::vector<std::uint32_t> sub(n, 0);
    while (!done) {
        const std::size_t row_base = rt * dm;
        // left actions of x_1 .. x_n (the last argument contributes no left term)
        for (unsigned j = 0; j < n; ++j) {
            sub.clear();
            for (unsigned t = 0; t <= n; ++t)
                if (t != j) sub.push_back(tup[t]);
            const std::size_t cu = tensor_rank(d, sub) * dm;
            const Scalar sign = (j % 2 == 0) ? one : minus;
            const ExactMatrix& lam = m.lambda(tup[j]);
            for (std::size_t s1 = 0; s1 < dm; ++s1)
                for (const auto& [s2, v] : lam.row(s1))
                    trips.emplace_back(static_cast<std::uint32_t>(row_base + s1),
                                       static_cast<std::uint32_t>(cu + s2), sign * v);
        }
        // right action of the last argument
        {
            sub.assign(tup.begin(), tup.end() - 1);
            const std::size_t cu = tensor_rank(d, sub) * dm;
            const Scalar sign = (n % 2 == 0) ? minus : one;  // (-1)^{n+1}
            const ExactMatrix& rho = m.rho(tup[n]);
            for (std::size_t s1 = 0; s1 < dm; ++s1)
                for (const auto& [s2, v] : rho.row(s1))
                    trips.emplace_back(static_cast<std::uint32_t>(row_base + s1),
                                       static_cast<std::uint32_t>(cu + s2), sign * v);
        }
        // insertions of x_i x_j in place of x_j, removing slot i
        for (unsigned i = 0; i + 1 <= n; ++i) {
            for (unsigned j = i + 1; j <= n; ++j) {
                const Vec& w = a.basis_product(tup[i], tup[j]);
                const Scalar sign = (i % 2 == 0) ? minus : one;  // (-1)^{i+1}, i one-based
                for (std::uint32_t k = 0; k < d; ++k) {
                    if (w[k].is_zero()) continue;
                    sub.clear();
                    for (unsigned t = 0; t <= n; ++t) {
                        if (t == i) continue;
                        sub.push_back(t == j ? k : tup[t]);
                    }
                    const std::size_t cu = tensor_rank(d, sub) * dm;
                    const Scalar coef = sign * w[k];
                    for (std::size_t s = 0; s < dm; ++s)
                        trips.emplace_back(static_cast<std::uint32_t>(row_base + s),
                                           static_cast<std::uint32_t>(cu + s), coef);
                }
            }
        }
        advance_tuple(tup, d, done);
        ++rt;
    }
    return ExactMatrix::from_triplets(f, rows, cols, std::move(trips));
}

ExactMatrix theta_matrix(const Bimodule& m, const Vec& a_elt, unsigned n) {
    const LeibnizAlgebra& a = m.algebra();
    const FieldSpec f = m.field();
    const std::size_t d = a.dim();
    const std::size_t dm = m.dim();
    const std::size_t dim = cochain_dim(m, n);
    Triplets trips;
    if (dim == 0) return ExactMatrix(f, dim, dim);
    const ExactMatrix lam_a = m.lambda_of(a_elt);

    std::vector<std::uint32_t> tup(n, 0);
    bool done = false;
    std::size_t rt = 0;
    std::vector<std::uint32_t> sub(n, 0);
    while (!done) {
        const std::size_t base = rt * dm;
        for (std::size_t s1 = 0; s1 < dm; ++s1)
            for (const auto& [s2, v] : lam_a.row(s1))
                trips.emplace_back(static_cast<std::uint32_t>(base + s1),
                                   static_cast<std::uint32_t>(base + s2), v);
        for (unsigned j = 0; j < n; ++j) {
            Vec ej = vec_zero(f, d);
            ej[tup[j]] = Scalar::one(f);
            const Vec w = a.product(a_elt, ej);
            for (std::uint32_t k = 0; k < d; ++k) {
                if (w[k].is_zero()) continue;
                sub = tup;
                sub[j] = k;
                const std::size_t cu = tensor_rank(d, sub) * dm;
                for (std::size_t s = 0; s < dm; ++s)
                    trips.emplace_back(static_cast<std::uint32_t>(base + s),
                                       static_cast<std::uint32_t>(cu + s), -w[k]);
            }
        }
        advance_tuple(tup, d, done);
        ++rt;
    }
    return ExactMatrix::from_triplets(f, dim, dim, std::move(trips));
}

ExactMatrix iota_matrix(const Bimodule& m, const Vec& a_elt, unsigned n) {
    if (n < 1) throw ValidationError("insertion operator needs degree >= 1");
    const std::size_t d = m.algebra().dim();
    const std::size_t dm = m.dim();
    const FieldSpec f = m.field();
    const std::size_t rows = cochain_dim(m, n - 1);
    const std::size_t cols = cochain_dim(m, n);
    Triplets trips;
    const std::size_t tail = tensor_count(d, n - 1);
    for (std::size_t rt = 0; rt < tail; ++rt) {
        for (std::uint32_t k = 0; k < d; ++k) {
            if (a_elt[k].is_zero()) continue;
            const std::size_t full = (static_cast<std::size_t>(k) * tail + rt) * dm;
            for (std::size_t s = 0; s < dm; ++s)
                trips.emplace_back(static_cast<std::uint32_t>(rt * dm + s),
                                   static_cast<std::uint32_t>(full + s), a_elt[k]);
        }
    }
    return ExactMatrix::from_triplets(f, rows, cols, std::move(trips));
}

ExactMatrix tau_matrix(const LeibnizAlgebra& alg, const Vec& a_elt, unsigned n) {
    const std::size_t d = alg.dim();
    const FieldSpec f = alg.field();
    const std::size_t dim = tensor_count(d, n);
    Triplets trips;
    if (d == 0) return ExactMatrix(f, dim, dim);
    std::vector<std::uint32_t> tup(n, 0);
    bool done = false;
    std::size_t ct = 0;
    std::vector<std::uint32_t> sub(n, 0);
    while (!done) {
        for (unsigned j = 0; j < n; ++j) {
            Vec ej = vec_zero(f, d);
            ej[tup[j]] = Scalar::one(f);
            const Vec w = alg.product(a_elt, ej);
            for (std::uint32_t k = 0; k < d; ++k) {
                if (w[k].is_zero()) continue;
                sub = tup;
                sub[j] = k;
                trips.emplace_back(static_cast<std::uint32_t>(tensor_rank(d, sub)),
                                   static_cast<std::uint32_t>(ct), w[k]);
            }
        }
        advance_tuple(tup, d, done);
        ++ct;
    }
    return ExactMatrix::from_triplets(f, dim, dim, std::move(trips));
}

std::string CartanFailure::to_string() const {
    std::ostringstream os;
    os << (which == Which::HomotopyIdentity ? "d iota + iota d = theta"
                                            : "theta d = d theta")
       << " fails at degree " << degree;
    return os.str();
}

std::optional<CartanFailure> verify_cartan(const Bimodule& m, const Vec& a, unsigned n_max,
                                           const DegreeGuard& guard) {
    guard.check(m, n_max + 1);
    std::vector<ExactMatrix> d(n_max + 2), theta(n_max + 2);
    for (unsigned n = 0; n <= n_max + 1; ++n) {
        if (n <= n_max) d[n] = coboundary_matrix(m, n);
        theta[n] = theta_matrix(m, a, n);
    }
    for (unsigned n = 1; n <= n_max; ++n) {
        const ExactMatrix lhs = d[n - 1] * iota_matrix(m, a, n) + iota_matrix(m, a, n + 1) * d[n];
        if (!(lhs == theta[n])) return CartanFailure{CartanFailure::Which::HomotopyIdentity, n};
    }
    for (unsigned n = 0; n <= n_max; ++n) {
        if (!(theta[n + 1] * d[n] == d[n] * theta[n]))
            return CartanFailure{CartanFailure::Which::CommutesWithCoboundary, n};
    }
    return std::nullopt;
}

CohomologyResult hl(const Bimodule& m, unsigned n, const DegreeGuard& guard) {
    guard.check(m, n);
    CohomologyResult res;
    res.degree = n;
    const ExactMatrix dn = coboundary_matrix(m, n);
    const Subspace z = rank_kernel_image(dn).kernel;
    Subspace b = Subspace::zero(m.field(), cochain_dim(m, n));
    if (n > 0) {
        const ExactMatrix dprev = coboundary_matrix(m, n - 1);
        b = rank_kernel_image(dprev).image;
    }
    res.dim_z = z.dim();
    res.dim_b = b.dim();
    ensure(z.contains(b), "coboundaries are cocycles");
    res.dim_h = res.dim_z - res.dim_b;
    res.representatives = b.complement_within(z);
    return res;
}

// ---------------------------------------------------------------------------
// Generic complexes
// ---------------------------------------------------------------------------

std::size_t MatrixComplex::space_dim(unsigned k) const {
    if (k < d.size()) return d[k].cols();
    if (k == d.size()) return d.back().rows();
    throw ValidationError("complex degree out of range");
}

MatrixComplex cochain_complex(const Bimodule& m, unsigned top, const DegreeGuard& guard) {
    guard.check(m, top);
    MatrixComplex c;
    for (unsigned k = 0; k <= top; ++k) c.d.push_back(coboundary_matrix(m, k));
    return c;
}

CohomologySpace cohomology_at(const MatrixComplex& c, unsigned k) {
    if (k >= c.d.size()) throw ValidationError("cohomology degree exceeds the built complex");
    CohomologySpace h;
    h.degree = k;
    h.cocycles = rank_kernel_image(c.d[k]).kernel;
    h.coboundaries = k == 0 ? Subspace::zero(c.d[k].field(), c.d[k].cols())
                            : rank_kernel_image(c.d[k - 1]).image;
    ensure(h.cocycles.contains(h.coboundaries), "coboundaries are cocycles");
    h.representatives = h.coboundaries.complement_within(h.cocycles);
    return h;
}

Vec CohomologySpace::class_coordinates(const Vec& cocycle) const {
    const FieldSpec f = cocycles.field();
    if (!cocycles.contains(cocycle)) throw ValidationError("not a cocycle");
    std::vector<Vec> cols = representatives;
    cols.insert(cols.end(), coboundaries.basis().begin(), coboundaries.basis().end());
    Vec coords = vec_zero(f, representatives.size());
    if (cols.empty()) {
        if (!vec_is_zero(cocycle)) throw ValidationError("nonzero cocycle in zero cohomology");
        return coords;
    }
    const ExactMatrix a = matrix_with_columns(f, cocycle.size(), cols);
    const auto sol = solve_linear(a, cocycle);
    ensure(sol.has_value(), "cocycle decomposes over representatives and coboundaries");
    for (std::size_t i = 0; i < representatives.size(); ++i) coords[i] = (*sol)[i];
    return coords;
}

ExactMatrix induced_on_cohomology(const CohomologySpace& src, const CohomologySpace& dst,
                                  const ExactMatrix& chain_map) {
    const FieldSpec f = chain_map.field();
    std::vector<Vec> cols;
    for (const auto& rep : src.representatives) cols.push_back(dst.class_coordinates(chain_map.apply(rep)));
    return matrix_with_columns(f, dst.dim(), cols);
}

bool LesReport::all_exact() const {
    if (!levelwise_exact || !chain_maps_commute) return false;
    return std::all_of(nodes.begin(), nodes.end(), [](const LesNode& n) { return n.exact; });
}

namespace {

bool subspaces_match(const Subspace& a, const Subspace& b) { return a == b; }

Subspace image_subspace(const ExactMatrix& m) { return rank_kernel_image(m).image; }

Subspace kernel_subspace(const ExactMatrix& m) { return rank_kernel_image(m).kernel; }

}  // namespace

LesReport verify_les(const ComplexSes& ses, unsigned n_max) {
    LesReport report;
    const unsigned top = static_cast<unsigned>(ses.mid.d.size()) - 1;
    ensure(top >= n_max + 1, "complexes must extend one degree past n_max");

    for (unsigned k = 0; k <= top; ++k) {
        const auto& i = ses.incl[k];
        const auto& p = ses.proj[k];
        const RankResult ri = rank_kernel_image(i);
        const RankResult rp = rank_kernel_image(p);
        if (ri.rank != i.cols()) report.levelwise_exact = false;          // injectivity
        if (rp.rank != p.rows()) report.levelwise_exact = false;          // surjectivity
        if (!subspaces_match(rp.kernel, ri.image)) report.levelwise_exact = false;
        if (k < top) {
            if (!(ses.incl[k + 1] * ses.sub.d[k] == ses.mid.d[k] * i)) report.chain_maps_commute = false;
            if (!(ses.proj[k + 1] * ses.mid.d[k] == ses.quot.d[k] * p)) report.chain_maps_commute = false;
        }
    }

    // cohomology spaces through degree n_max + 1
    std::vector<CohomologySpace> ha, hb, hc;
    for (unsigned k = 0; k <= n_max + 1; ++k) {
        ha.push_back(cohomology_at(ses.sub, k));
        hb.push_back(cohomology_at(ses.mid, k));
        hc.push_back(cohomology_at(ses.quot, k));
    }

    // induced maps and connecting homomorphisms
    std::vector<ExactMatrix> i_star, p_star, conn;
    for (unsigned k = 0; k <= n_max + 1; ++k) {
        i_star.push_back(induced_on_cohomology(ha[k], hb[k], ses.incl[k]));
        p_star.push_back(induced_on_cohomology(hb[k], hc[k], ses.proj[k]));
    }
    for (unsigned k = 0; k <= n_max; ++k) {
        // lift representative of H^k(quot), push through d, pull back into sub
        std::vector<Vec> cols;
        for (const auto& rep : hc[k].representatives) {
            const auto lift = solve_linear(ses.proj[k], rep);
            ensure(lift.has_value(), "projection is surjective on cochains");
            const Vec v = ses.mid.d[k].apply(*lift);
            const auto back = solve_linear(ses.incl[k + 1], v);
            ensure(back.has_value(), "connecting image lies in the subcomplex");
            cols.push_back(ha[k + 1].class_coordinates(*back));
        }
        conn.push_back(matrix_with_columns(ses.mid.d[0].field(), ha[k + 1].dim(), cols));
    }

    const FieldSpec f = ses.mid.d[0].field();
    for (unsigned k = 0; k <= n_max; ++k) {
        // node H^k(sub): im(conn[k-1]) = ker(i_star[k])
        {
            const Subspace lhs = k == 0 ? Subspace::zero(f, ha[0].dim()) : image_subspace(conn[k - 1]);
            report.nodes.push_back({k, 'A', subspaces_match(lhs, kernel_subspace(i_star[k]))});
        }
        // node H^k(mid): im(i_star) = ker(p_star)
        report.nodes.push_back({k, 'B', subspaces_match(image_subspace(i_star[k]), kernel_subspace(p_star[k]))});
        // node H^k(quot): im(p_star) = ker(conn[k])
        report.nodes.push_back({k, 'C', subspaces_match(image_subspace(p_star[k]), kernel_subspace(conn[k]))});
    }
    return report;
}

namespace {

/// Block-diagonal repetition of `block`, one copy per tensor index.
ExactMatrix blockwise(const ExactMatrix& block, std::size_t blocks) {
    const FieldSpec f = block.field();
    ExactMatrix out(f, block.rows() * blocks, block.cols() * blocks);
    Triplets trips;
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (const auto& [c, v] : block.row(r))
                trips.emplace_back(static_cast<std::uint32_t>(b * block.rows() + r),
                                   static_cast<std::uint32_t>(b * block.cols() + c), v);
    return ExactMatrix::from_triplets(f, block.rows() * blocks, block.cols() * blocks, std::move(trips));
}

}  // namespace

ComplexSes bimodule_ses(const Bimodule& m, const Subspace& sub, unsigned top, const DegreeGuard& guard) {
    if (!m.is_sub_bimodule(sub)) throw ValidationError("subspace is not a sub-bimodule");
    ComplexSes ses;
    const Bimodule n = m.sub_bimodule(sub);
    auto [q, qm] = m.quotient_bimodule(sub);
    ses.sub = cochain_complex(n, top, guard);
    ses.mid = cochain_complex(m, top, guard);
    ses.quot = cochain_complex(q, top, guard);
    const ExactMatrix incl_block = matrix_with_columns(m.field(), m.dim(), sub.basis());
    const std::size_t d = m.algebra().dim();
    for (unsigned k = 0; k <= top + 1; ++k) {
        const std::size_t blocks = tensor_count(d, k);
        ses.incl.push_back(blockwise(incl_block, blocks));
        ses.proj.push_back(blockwise(qm.projection, blocks));
    }
    return ses;
}

LesReport les_of_bimodule_ses(const Bimodule& m, const Subspace& sub, unsigned n_max,
                              const DegreeGuard& guard) {
    return verify_les(bimodule_ses(m, sub, n_max + 1, guard), n_max);
}

// ---------------------------------------------------------------------------
// Restriction to a codimension-one ideal
// ---------------------------------------------------------------------------

std::pair<DixmierSequence, DixmierReport> dixmier_sequence(const Bimodule& m, const Subspace& ideal,
                                                           const Vec& x, unsigned n_max,
                                                           const DegreeGuard& guard) {
    const LeibnizAlgebra& a = m.algebra();
    const FieldSpec f = m.field();
    const std::size_t d = a.dim();
    if (ideal.dim() + 1 != d) throw ValidationError("ideal must have codimension one");
    if (!a.ideal_info(ideal).two_sided()) throw ValidationError("subspace is not a two-sided ideal");
    if (ideal.contains(x)) throw ValidationError("x must span a complement of the ideal");

    DixmierSequence seq;
    // rebase the algebra to (ideal basis, x)
    std::vector<Vec> new_basis = ideal.basis();
    new_basis.push_back(x);
    ExactMatrix p = matrix_with_columns(f, d, new_basis);
    auto adapted_alg = std::make_shared<const LeibnizAlgebra>(a.change_basis(p));
    std::vector<ExactMatrix> lam, rho;
    for (std::size_t i = 0; i < d; ++i) {
        lam.push_back(m.lambda_of(new_basis[i]));
        rho.push_back(m.rho_of(new_basis[i]));
    }
    seq.adapted = Bimodule::checked(adapted_alg, m.dim(), std::move(lam), std::move(rho));

    // the ideal is the span of the first d-1 adapted basis vectors
    std::vector<Vec> first;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        Vec e = vec_zero(f, d);
        e[i] = Scalar::one(f);
        first.push_back(std::move(e));
    }
    const Subspace adapted_ideal = Subspace::span(f, d, first);
    seq.restricted = seq.adapted.restrict_to_subalgebra(adapted_ideal);

    const unsigned top = n_max + 1;
    MatrixComplex full = cochain_complex(seq.adapted, top, guard);
    MatrixComplex restr = cochain_complex(seq.restricted, top, guard);

    const std::size_t dm = m.dim();
    const std::size_t di = d - 1;
    // res, DL coordinates, DL_1 coordinates per degree
    for (unsigned k = 0; k <= top + 1; ++k) {
        const std::size_t cols = cochain_dim(seq.adapted, k);
        const std::size_t rows = dm * tensor_count(di, k);
        Triplets trips;
        std::vector<std::uint32_t> dl_coords, dl1_coords;
        const std::size_t count = tensor_count(d, k);
        for (std::size_t rt = 0; rt < count; ++rt) {
            const auto tup = tensor_unrank(d, k, rt);
            const bool contains_x =
                std::any_of(tup.begin(), tup.end(), [&](std::uint32_t t) { return t + 1 == d; });
            if (!contains_x) {
                std::size_t ri = 0;
                for (auto t : tup) ri = ri * di + t;
                for (std::size_t s = 0; s < dm; ++s)
                    trips.emplace_back(static_cast<std::uint32_t>(ri * dm + s),
                                       static_cast<std::uint32_t>(rt * dm + s), Scalar::one(f));
            } else {
                for (std::size_t s = 0; s < dm; ++s)
                    dl_coords.push_back(static_cast<std::uint32_t>(rt * dm + s));
                const bool first_slot_only =
                    tup[0] + 1 == d && std::none_of(tup.begin() + 1, tup.end(),
                                                    [&](std::uint32_t t) { return t + 1 == d; });
                if (first_slot_only)
                    for (std::size_t s = 0; s < dm; ++s)
                        dl1_coords.push_back(static_cast<std::uint32_t>(rt * dm + s));
            }
        }
        seq.res.push_back(ExactMatrix::from_triplets(f, rows, cols, std::move(trips)));
        seq.dl.push_back(std::move(dl_coords));
        seq.dl1.push_back(std::move(dl1_coords));
    }

    // sub complex DL with inclusion/projection onto its coordinates
    Vec x_adapted = vec_zero(f, d);
    x_adapted[d - 1] = Scalar::one(f);

    ComplexSes ses;
    ses.mid = full;
    ses.quot = restr;
    for (unsigned k = 0; k <= top + 1; ++k) {
        const std::size_t cols = cochain_dim(seq.adapted, k);
        const auto& coords = seq.dl[k];
        Triplets itrips;
        for (std::uint32_t t = 0; t < coords.size(); ++t)
            itrips.emplace_back(coords[t], t, Scalar::one(f));
        ses.incl.push_back(ExactMatrix::from_triplets(f, cols, coords.size(), itrips));
        ses.proj.push_back(seq.res[k]);
    }
    for (unsigned k = 0; k <= top; ++k) {
        // differential restricted to DL, in DL coordinates
        const ExactMatrix image = full.d[k] * ses.incl[k];
        ses.sub.d.push_back(image.select_rows(seq.dl[k + 1]));
        // the restriction must stay inside DL
        ensure((seq.res[k + 1] * image).is_zero(), "coboundary preserves the kernel complex");
    }
    seq.ses = ses;

    DixmierReport report;
    // phi[k]: DL^k_1 -> CL^{k-1}(I,M), f -> res(iota_x f)
    seq.phi.push_back(ExactMatrix(f, 0, 0));  // degree 0 placeholder
    for (unsigned k = 1; k <= top; ++k) {
        Triplets itrips;
        for (std::uint32_t t = 0; t < seq.dl1[k].size(); ++t)
            itrips.emplace_back(seq.dl1[k][t], t, Scalar::one(f));
        const ExactMatrix incl1 =
            ExactMatrix::from_triplets(f, cochain_dim(seq.adapted, k), seq.dl1[k].size(), itrips);
        seq.phi.push_back(seq.res[k - 1] * iota_matrix(seq.adapted, x_adapted, k) * incl1);
    }

    report.phi_anticommutes = true;
    for (unsigned n = 1; n <= n_max; ++n) {
        Triplets itrips;
        for (std::uint32_t t = 0; t < seq.dl1[n].size(); ++t)
            itrips.emplace_back(seq.dl1[n][t], t, Scalar::one(f));
        const ExactMatrix incl1 =
            ExactMatrix::from_triplets(f, cochain_dim(seq.adapted, n), seq.dl1[n].size(), itrips);
        const ExactMatrix lhs = seq.res[n] * iota_matrix(seq.adapted, x_adapted, n + 1) * full.d[n] * incl1;
        const ExactMatrix rhs = restr.d[n - 1] * seq.phi[n];
        if (!(lhs == -rhs)) report.phi_anticommutes = false;
    }

    // connecting factorization: phi(d lift(c)) = res(theta_x lift(c)) up to a
    // coboundary of the restricted complex, on cocycles c of CL^n(I,M)
    report.connecting_factors = true;
    for (unsigned n = 1; n <= n_max; ++n) {
        const Subspace cocycles = rank_kernel_image(restr.d[n]).kernel;
        const Subspace boundaries = rank_kernel_image(restr.d[n - 1]).image;
        const ExactMatrix lift = seq.res[n].transpose();  // zero-extension section
        const ExactMatrix theta_x = theta_matrix(seq.adapted, x_adapted, n);
        for (const auto& c : cocycles.basis()) {
            const Vec lifted = lift.apply(c);
            const Vec dl_val = full.d[n].apply(lifted);
            const Vec via_phi = (seq.res[n] * iota_matrix(seq.adapted, x_adapted, n + 1)).apply(dl_val);
            const Vec via_theta = seq.res[n].apply(theta_x.apply(lifted));
            if (!boundaries.contains(vec_sub(via_phi, via_theta))) report.connecting_factors = false;
        }
    }

    report.les = verify_les(seq.ses, n_max);
    report.ses_exact_levelwise = report.les.levelwise_exact && report.les.chain_maps_commute;
    return {std::move(seq), std::move(report)};
}

bool DixmierReport::all_ok() const {
    return ses_exact_levelwise && phi_anticommutes && connecting_factors && les.all_exact();
}

}  // namespace leibniz
