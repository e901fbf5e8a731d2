#include "leibniz/algebra.hpp"

#include <algorithm>
#include <map>
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

ExactMatrix matrix_inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw ValidationError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const FieldSpec& f = m.field();
    std::vector<Vec> rows = m.to_dense();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            rows[i].push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
    }
    const auto pivots = rref_dense(f, rows);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n))
        throw ValidationError("matrix is singular");
    std::vector<Vec> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i] = Vec(rows[i].begin() + n, rows[i].end());
    return ExactMatrix::from_dense(f, inv);
}

/// Kernel of the stacked operator v -> (m_1 v, m_2 v, ...).
Subspace stacked_kernel(const FieldSpec& f, std::size_t ambient, const std::vector<ExactMatrix>& ms) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> trips;
    std::size_t row_offset = 0;
    for (const auto& m : ms) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r))
                trips.emplace_back(static_cast<std::uint32_t>(row_offset + r), c, v);
        row_offset += m.rows();
    }
    ExactMatrix stacked = ExactMatrix::from_triplets(f, row_offset, ambient, std::move(trips));
    return rank_kernel_image(stacked).kernel;
}

std::uint64_t powu64_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > cap / (base ? base : 1)) return cap + 1;
        v *= base;
    }
    return v;
}

// --- rational eigenvalue search (used by the supersolvability test over Q) ---

std::vector<BigRational> char_poly_rational(const ExactMatrix& m) {
    // Faddeev-LeVerrier; valid in characteristic zero.
    const std::size_t n = m.rows();
    const FieldSpec f = FieldSpec::rationals();
    std::vector<Vec> a = m.to_dense();
    std::vector<BigRational> coeffs(n + 1);
    coeffs[n] = 1;
    std::vector<Vec> mk(n, vec_zero(f, n));
    for (std::size_t i = 0; i < n; ++i) mk[i][i] = Scalar::one(f);
    for (std::size_t k = 1; k <= n; ++k) {
        // mk <- a * mk
        std::vector<Vec> next(n, vec_zero(f, n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t) {
                if (a[i][t].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][t] * mk[t][j];
            }
        mk = std::move(next);
        BigRational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += mk[i][i].rational_value();
        const BigRational ck = -trace / BigRational(static_cast<long long>(k));
        coeffs[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += Scalar::rational(ck);
    }
    return coeffs;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == s) return true;
        if (n % s == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base, n);
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<BigInt> positive_divisors(BigInt n) {
    // Trial division; a large prime cofactor is kept, anything bigger is
    // dropped (the caller then simply misses some candidate roots).
    if (n < 0) n = -n;
    std::map<BigInt, unsigned> factors;
    for (std::uint64_t d = 2; d <= 1000000 && BigInt(d) * d <= n; ++d) {
        while (n % d == 0) {
            ++factors[BigInt(d)];
            n /= d;
        }
    }
    if (n > 1) {
        if (n <= std::numeric_limits<std::uint64_t>::max() && is_prime_u64(n.convert_to<std::uint64_t>()))
            ++factors[n];
        else if (n <= 1000000ull * 1000000ull)
            ++factors[n];  // below the trial bound squared, so prime
    }
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [prime, mult] : factors) {
        const std::size_t sz = divs.size();
        BigInt pk = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 20000) break;
    }
    return divs;
}

std::vector<BigRational> rational_roots(std::vector<BigRational> coeffs) {
    std::vector<BigRational> roots;
    // Clear denominators to a primitive integer polynomial.
    BigInt lcm = 1;
    for (const auto& c : coeffs) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    std::vector<BigInt> ic(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        ic[i] = boost::multiprecision::numerator(coeffs[i]) *
                (lcm / boost::multiprecision::denominator(coeffs[i]));
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    if (ic.size() <= 1) return roots;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(BigRational(0));
    std::vector<BigInt> poly(ic.begin() + low, ic.end());
    if (poly.size() <= 1) return roots;
    auto eval = [&](const BigRational& x) {
        BigRational acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + BigRational(poly[i]);
        return acc;
    };
    const auto nums = positive_divisors(poly.front());
    const auto dens = positive_divisors(poly.back());
    for (const auto& nu : nums) {
        for (const auto& de : dens) {
            for (int sign : {1, -1}) {
                BigRational cand(sign * nu, de);
                if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    return roots;
}

}  // namespace

std::string LeibnizViolation::to_string() const {
    std::ostringstream os;
    os << "left Leibniz identity fails at basis triple (" << i + 1 << ", " << j + 1 << ", " << k + 1 << ")";
    return os.str();
}

LeibnizAlgebra LeibnizAlgebra::unchecked(FieldSpec field, std::size_t dim,
                                         std::vector<std::vector<Vec>> constants) {
    if (constants.size() != dim) throw ValidationError("structure constant table has wrong shape");
    for (const auto& row : constants) {
        if (row.size() != dim) throw ValidationError("structure constant table has wrong shape");
        for (const auto& v : row)
            if (v.size() != dim) throw ValidationError("structure constant vector has wrong length");
    }
    LeibnizAlgebra a;
    a.field_ = field;
    a.dim_ = dim;
    a.c_ = std::move(constants);
    return a;
}

LeibnizAlgebra LeibnizAlgebra::checked(FieldSpec field, std::size_t dim,
                                       std::vector<std::vector<Vec>> constants) {
    LeibnizAlgebra a = unchecked(field, dim, std::move(constants));
    if (auto bad = a.validate()) throw ValidationError(bad->to_string());
    return a;
}

std::optional<LeibnizViolation> LeibnizAlgebra::validate() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                // e_i (e_j e_k) vs (e_i e_j) e_k + e_j (e_i e_k)
                Vec lhs = vec_zero(field_, dim_);
                for (std::size_t t = 0; t < dim_; ++t)
                    if (!c_[j][k][t].is_zero()) vec_add_scaled(lhs, c_[i][t], c_[j][k][t]);
                Vec rhs = vec_zero(field_, dim_);
                for (std::size_t t = 0; t < dim_; ++t) {
                    if (!c_[i][j][t].is_zero()) vec_add_scaled(rhs, c_[t][k], c_[i][j][t]);
                    if (!c_[i][k][t].is_zero()) vec_add_scaled(rhs, c_[j][t], c_[i][k][t]);
                }
                if (lhs != rhs) return LeibnizViolation{i, j, k, lhs, rhs};
            }
        }
    }
    return std::nullopt;
}

Vec LeibnizAlgebra::product(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw ValidationError("element has wrong dimension");
    Vec out = vec_zero(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            vec_add_scaled(out, c_[i][j], u[i] * v[j]);
        }
    }
    return out;
}

ExactMatrix LeibnizAlgebra::left_mult(std::size_t i) const {
    ExactMatrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t t = 0; t < dim_; ++t)
            if (!c_[i][j][t].is_zero()) m.add_at(t, j, c_[i][j][t]);
    return m;
}

ExactMatrix LeibnizAlgebra::right_mult(std::size_t i) const {
    ExactMatrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t t = 0; t < dim_; ++t)
            if (!c_[j][i][t].is_zero()) m.add_at(t, j, c_[j][i][t]);
    return m;
}

ExactMatrix LeibnizAlgebra::left_mult(const Vec& u) const {
    ExactMatrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!u[i].is_zero()) m = m + left_mult(i).scaled(u[i]);
    return m;
}

ExactMatrix LeibnizAlgebra::right_mult(const Vec& u) const {
    ExactMatrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!u[i].is_zero()) m = m + right_mult(i).scaled(u[i]);
    return m;
}

Subspace LeibnizAlgebra::leibniz_kernel() const {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim_; ++i) {
        gens.push_back(c_[i][i]);
        for (std::size_t j = i + 1; j < dim_; ++j) gens.push_back(vec_add(c_[i][j], c_[j][i]));
    }
    Subspace k = Subspace::span(field_, dim_, gens);
    ensure(ideal_info(k).two_sided(), "Leibniz kernel is an ideal");
    ensure(subspace_product(k, k).is_zero(), "Leibniz kernel is abelian");
    return k;
}

std::pair<LeibnizAlgebra, QuotientMap> LeibnizAlgebra::canonical_lie() const {
    auto [q, qm] = quotient(leibniz_kernel());
    ensure(q.leibniz_kernel().is_zero(), "canonical Lie quotient has zero Leibniz kernel");
    return {std::move(q), std::move(qm)};
}

Subspace LeibnizAlgebra::derived_subalgebra() const {
    const Subspace full = Subspace::full(field_, dim_);
    return subspace_product(full, full);
}

Subspace LeibnizAlgebra::subspace_product(const Subspace& a, const Subspace& b) const {
    std::vector<Vec> gens;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) gens.push_back(product(u, v));
    return Subspace::span(field_, dim_, gens);
}

IdealChain LeibnizAlgebra::series(SeriesKind kind) const {
    IdealChain chain;
    chain.term_kind = IdealChain::TermKind::Ideal;
    Subspace current = Subspace::full(field_, dim_);
    chain.terms.push_back(current);
    const Subspace full = Subspace::full(field_, dim_);
    while (true) {
        Subspace next = kind == SeriesKind::LeftDescendingCentral
                            ? subspace_product(full, current)
                            : subspace_product(current, current);
        const bool stabilized = next == current;
        chain.codims.push_back(current.dim() - next.dim());
        chain.terms.push_back(next);
        if (next.is_zero() || stabilized) break;
        current = next;
    }
    return chain;
}

bool LeibnizAlgebra::is_nilpotent() const {
    return series(SeriesKind::LeftDescendingCentral).terms.back().is_zero();
}

bool LeibnizAlgebra::is_solvable() const {
    return series(SeriesKind::Derived).terms.back().is_zero();
}

Subspace LeibnizAlgebra::left_center() const {
    std::vector<ExactMatrix> rs;
    for (std::size_t i = 0; i < dim_; ++i) rs.push_back(right_mult(i));
    Subspace c = stacked_kernel(field_, dim_, rs);
    ensure(c.contains(leibniz_kernel()), "Leibniz kernel lies in the left center");
    return c;
}

Subspace LeibnizAlgebra::right_centralizer(const Subspace& s) const {
    if (s.ambient_dim() != dim_) throw ValidationError("subspace has wrong ambient dimension");
    std::vector<ExactMatrix> ls;
    for (const auto& v : s.basis()) ls.push_back(left_mult(v));
    if (ls.empty()) return Subspace::full(field_, dim_);
    return stacked_kernel(field_, dim_, ls);
}

IdealInfo LeibnizAlgebra::ideal_info(const Subspace& v) const {
    if (v.ambient_dim() != dim_) throw ValidationError("subspace has wrong ambient dimension");
    IdealInfo info;
    info.left = true;
    info.right = true;
    for (std::size_t i = 0; i < dim_ && (info.left || info.right); ++i) {
        for (const auto& b : v.basis()) {
            Vec ei = vec_zero(field_, dim_);
            ei[i] = Scalar::one(field_);
            if (info.left && !v.contains(product(ei, b))) info.left = false;
            if (info.right && !v.contains(product(b, ei))) info.right = false;
            if (!info.left && !info.right) break;
        }
    }
    return info;
}

Subspace LeibnizAlgebra::ideal_closure(const Subspace& v) const {
    Subspace current = v;
    const Subspace full = Subspace::full(field_, dim_);
    while (true) {
        Subspace next = current.sum(subspace_product(full, current)).sum(subspace_product(current, full));
        if (next == current) return current;
        current = next;
    }
}

std::pair<LeibnizAlgebra, QuotientMap> LeibnizAlgebra::quotient(const Subspace& ideal) const {
    if (!ideal_info(ideal).two_sided()) throw ValidationError("quotient requires a two-sided ideal");
    QuotientMap qm = quotient_map(ideal);
    const std::size_t q_dim = dim_ - ideal.dim();
    std::vector<std::vector<Vec>> constants(q_dim, std::vector<Vec>(q_dim));
    for (std::size_t i = 0; i < q_dim; ++i) {
        const Vec ui = matrix_column(qm.section, i);
        for (std::size_t j = 0; j < q_dim; ++j) {
            const Vec uj = matrix_column(qm.section, j);
            constants[i][j] = qm.projection.apply(product(ui, uj));
        }
    }
    return {checked(field_, q_dim, std::move(constants)), std::move(qm)};
}

std::pair<LeibnizAlgebra, std::vector<Vec>> LeibnizAlgebra::restrict_to(const Subspace& closed) const {
    const std::size_t k = closed.dim();
    for (const auto& u : closed.basis())
        for (const auto& v : closed.basis())
            if (!closed.contains(product(u, v)))
                throw ValidationError("subspace is not multiplication-closed");
    std::vector<std::vector<Vec>> constants(k, std::vector<Vec>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            constants[i][j] = closed.coordinates(product(closed.basis()[i], closed.basis()[j]));
    return {checked(field_, k, std::move(constants)), closed.basis()};
}

LeibnizAlgebra LeibnizAlgebra::change_basis(const ExactMatrix& new_basis) const {
    if (new_basis.rows() != dim_ || new_basis.cols() != dim_)
        throw ValidationError("change of basis must be square of the algebra dimension");
    const ExactMatrix inv = matrix_inverse(new_basis);
    std::vector<std::vector<Vec>> constants(dim_, std::vector<Vec>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        const Vec ui = matrix_column(new_basis, i);
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vec uj = matrix_column(new_basis, j);
            constants[i][j] = inv.apply(product(ui, uj));
        }
    }
    return checked(field_, dim_, std::move(constants));
}

namespace {

struct LineSearch {
    std::optional<Vec> line;
};

/// A vector v with F v a two-sided ideal, if one is found. Exhaustive over
/// GF(p); over Q the search runs over rational eigenvalues only.
LineSearch find_one_dim_ideal(const LeibnizAlgebra& a, std::uint64_t line_budget) {
    const FieldSpec& f = a.field();
    const std::size_t d = a.dim();
    LineSearch out;
    if (d == 0) return out;
    auto spans_ideal = [&](const Vec& v) {
        // all e_k v and v e_k proportional to v
        const std::size_t lead = [&] {
            for (std::size_t t = 0; t < d; ++t)
                if (!v[t].is_zero()) return t;
            return d;
        }();
        for (std::size_t k = 0; k < d; ++k) {
            Vec ek = vec_zero(f, d);
            ek[k] = Scalar::one(f);
            for (const Vec& w : {a.product(ek, v), a.product(v, ek)}) {
                const Scalar coef = w[lead] / v[lead];
                Vec diff = vec_sub(w, vec_scaled(v, coef));
                if (!vec_is_zero(diff)) return false;
            }
        }
        return true;
    };

    if (f.is_prime_field()) {
        const std::uint64_t p = f.prime();
        const std::uint64_t pd = powu64_capped(p, d, line_budget * (p - 1) + 1);
        const std::uint64_t lines = (pd - 1) / (p - 1);
        if (pd > line_budget * (p - 1) || lines > line_budget)
            throw BudgetError("one-dimensional ideal search needs " + std::to_string(lines) +
                              " lines, budget is " + std::to_string(line_budget));
        // canonical representatives: first nonzero coordinate is 1
        for (std::size_t first = 0; first < d; ++first) {
            const std::size_t tail = d - first - 1;
            std::vector<std::uint32_t> digits(tail, 0);
            while (true) {
                Vec v = vec_zero(f, d);
                v[first] = Scalar::one(f);
                for (std::size_t t = 0; t < tail; ++t) v[first + 1 + t] = Scalar::of(f, digits[t]);
                if (spans_ideal(v)) {
                    out.line = v;
                    return out;
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
        return out;
    }

    // Rationals: refine the ambient space into subspaces on which every left
    // and right multiplication acts as a (rational) scalar.
    std::vector<ExactMatrix> ops;
    for (std::size_t i = 0; i < d; ++i) ops.push_back(a.left_mult(i));
    for (std::size_t i = 0; i < d; ++i) ops.push_back(a.right_mult(i));
    std::vector<Subspace> spaces{Subspace::full(f, d)};
    for (const auto& op : ops) {
        const auto coeffs = char_poly_rational(op);
        const auto eigenvalues = rational_roots(coeffs);
        std::vector<Subspace> next;
        for (const auto& v_space : spaces) {
            for (const auto& gamma : eigenvalues) {
                ExactMatrix shifted = op - ExactMatrix::identity(f, d).scaled(Scalar::rational(gamma));
                Subspace eig = rank_kernel_image(shifted).kernel;
                Subspace meet = v_space.intersect(eig);
                if (!meet.is_zero()) next.push_back(std::move(meet));
            }
        }
        spaces = std::move(next);
        if (spaces.empty()) return out;
    }
    for (const auto& w : spaces) {
        const Vec v = w.basis().front();
        if (spans_ideal(v)) {
            out.line = v;
            return out;
        }
    }
    return out;
}

}  // namespace

SupersolvableResult LeibnizAlgebra::is_supersolvable(std::uint64_t line_budget) const {
    SupersolvableResult res;
    if (dim_ == 0) {
        res.status = SupersolvableResult::Status::Yes;
        IdealChain chain;
        chain.terms.push_back(Subspace::zero(field_, 0));
        res.chain = std::move(chain);
        return res;
    }
    LineSearch search = find_one_dim_ideal(*this, line_budget);
    if (!search.line) {
        res.status = field_.is_prime_field() ? SupersolvableResult::Status::No
                                             : SupersolvableResult::Status::Unknown;
        return res;
    }
    const Subspace line = Subspace::span(field_, dim_, {*search.line});
    auto [q, qm] = quotient(line);
    SupersolvableResult sub = q.is_supersolvable(line_budget);
    if (sub.status != SupersolvableResult::Status::Yes) {
        res.status = sub.status;
        return res;
    }
    IdealChain chain;
    for (const auto& term : sub.chain->terms) {
        std::vector<Vec> gens = line.basis();
        for (const auto& row : term.basis()) gens.push_back(qm.section.apply(row));
        chain.terms.push_back(Subspace::span(field_, dim_, gens));
    }
    chain.terms.push_back(Subspace::zero(field_, dim_));
    for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i) {
        ensure(ideal_info(chain.terms[i]).two_sided(), "supersolvable chain terms are ideals");
        chain.codims.push_back(chain.terms[i].dim() - chain.terms[i + 1].dim());
    }
    res.status = SupersolvableResult::Status::Yes;
    res.chain = std::move(chain);
    return res;
}

std::vector<Subspace> LeibnizAlgebra::all_subalgebras(std::uint64_t budget) const {
    if (!field_.is_prime_field())
        throw ValidationError("subalgebra enumeration requires a finite prime field");
    const std::uint32_t p = field_.prime();
    if (powu64_capped(p, dim_, budget) > budget)
        throw BudgetError("subalgebra enumeration: p^dim exceeds budget " + std::to_string(budget));
    std::vector<Subspace> out;
    for (auto& s : all_subspaces(field_, dim_, budget)) {
        bool closed = true;
        for (const auto& u : s.basis()) {
            for (const auto& v : s.basis()) {
                if (!s.contains(product(u, v))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Subspace> LeibnizAlgebra::maximal_subalgebras(std::uint64_t budget) const {
    const auto all = all_subalgebras(budget);
    std::vector<Subspace> proper;
    for (const auto& s : all)
        if (s.dim() < dim_) proper.push_back(s);
    std::vector<Subspace> maximal;
    for (const auto& s : proper) {
        bool is_max = true;
        for (const auto& t : proper) {
            if (t.dim() > s.dim() && t.contains(s)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(s);
    }
    return maximal;
}

Subspace LeibnizAlgebra::frattini(std::uint64_t budget) const {
    const auto maximal = maximal_subalgebras(budget);
    Subspace acc = Subspace::full(field_, dim_);
    for (const auto& m : maximal) acc = acc.intersect(m);
    return acc;
}

ExactMatrix LeibnizAlgebra::exp_left_automorphism(const Vec& x) const {
    const ExactMatrix lx = left_mult(x);
    ExactMatrix sigma(field_, dim_, dim_);
    if ((lx * lx).is_zero()) {
        sigma = ExactMatrix::identity(field_, dim_) + lx;
    } else if (field_.is_rational()) {
        unsigned index = 0;
        ExactMatrix power = ExactMatrix::identity(field_, dim_);
        while (index <= dim_ && !power.is_zero()) {
            power = power * lx;
            ++index;
        }
        if (!power.is_zero())
            throw ValidationError("exp requires a nilpotent left multiplication operator");
        power = ExactMatrix::identity(field_, dim_);
        for (unsigned k = 0; k < index; ++k) {
            sigma = sigma + power.scaled(factorial_scalar(field_, k).inverse());
            power = power * lx;
        }
    } else {
        throw ValidationError(
            "exp over a prime field requires the left multiplication operator to square to zero");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        const Vec si = matrix_column(sigma, i);
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vec sj = matrix_column(sigma, j);
            if (product(si, sj) != sigma.apply(c_[i][j]))
                throw ValidationError("exp of the left multiplication is not an automorphism here");
        }
    }
    return sigma;
}

Subspace LeibnizAlgebra::exp_conjugate(const Vec& x, const Subspace& k) const {
    const ExactMatrix sigma = exp_left_automorphism(x);
    std::vector<Vec> gens;
    for (const auto& b : k.basis()) gens.push_back(sigma.apply(b));
    return Subspace::span(field_, dim_, gens);
}

LeibnizAlgebra hemi_semidirect(const LeibnizAlgebra& lie, const std::vector<ExactMatrix>& action) {
    const FieldSpec& f = lie.field();
    const std::size_t g = lie.dim();
    if (action.size() != g) throw ValidationError("hemi-semidirect product needs one action matrix per basis element");
    const std::size_t m = action.empty() ? 0 : action.front().rows();
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m) throw ValidationError("action matrices must be square of equal size");
    if (auto bad = lie.validate()) throw ValidationError(bad->to_string());
    if (!lie.leibniz_kernel().is_zero())
        throw ValidationError("hemi-semidirect product requires a Lie algebra on the left");
    // left module axiom: action([x y]) = [action(x), action(y)]
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            ExactMatrix lhs(f, m, m);
            const Vec& cij = lie.basis_product(i, j);
            for (std::size_t t = 0; t < g; ++t)
                if (!cij[t].is_zero()) lhs = lhs + action[t].scaled(cij[t]);
            if (!(lhs == action[i] * action[j] - action[j] * action[i]))
                throw ValidationError("action does not satisfy the left module axiom");
        }
    }
    const std::size_t n = g + m;
    std::vector<std::vector<Vec>> constants(n, std::vector<Vec>(n, vec_zero(f, n)));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t t = 0; t < g; ++t) constants[i][j][t] = lie.basis_product(i, j)[t];
        for (std::size_t s = 0; s < m; ++s) {
            Vec unit = vec_zero(f, m);
            unit[s] = Scalar::one(f);
            const Vec img = action[i].apply(unit);
            for (std::size_t t = 0; t < m; ++t) constants[i][g + s][g + t] = img[t];
        }
    }
    return LeibnizAlgebra::checked(f, n, std::move(constants));
}

namespace fixtures {

LeibnizAlgebra one_dim_lie(const FieldSpec& f) { return abelian(f, 1); }

LeibnizAlgebra abelian(const FieldSpec& f, std::size_t dim) {
    std::vector<std::vector<Vec>> c(dim, std::vector<Vec>(dim, vec_zero(f, dim)));
    return LeibnizAlgebra::checked(f, dim, std::move(c));
}

LeibnizAlgebra two_dim_nilpotent(const FieldSpec& f) {
    std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, vec_zero(f, 2)));
    c[1][1][0] = Scalar::one(f);  // f f = e with basis (e, f)
    return LeibnizAlgebra::checked(f, 2, std::move(c));
}

LeibnizAlgebra two_dim_supersolvable(const FieldSpec& f) {
    std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, vec_zero(f, 2)));
    c[0][1][1] = Scalar::one(f);  // h e = e with basis (h, e)
    return LeibnizAlgebra::checked(f, 2, std::move(c));
}

LeibnizAlgebra two_dim_solvable_lie(const FieldSpec& f) {
    std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, vec_zero(f, 2)));
    c[0][1][1] = Scalar::one(f);   // h e = e
    c[1][0][1] = -Scalar::one(f);  // e h = -e
    return LeibnizAlgebra::checked(f, 2, std::move(c));
}

LeibnizAlgebra sl2(const FieldSpec& f) {
    std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, vec_zero(f, 3)));
    const Scalar one = Scalar::one(f);
    const Scalar two = Scalar::of(f, 2);
    // basis (x, y, h): x y = h, h x = 2x, h y = -2y
    c[0][1][2] = one;
    c[1][0][2] = -one;
    c[2][0][0] = two;
    c[0][2][0] = -two;
    c[2][1][1] = -two;
    c[1][2][1] = two;
    return LeibnizAlgebra::checked(f, 3, std::move(c));
}

}  // namespace fixtures

}  // namespace leibniz
