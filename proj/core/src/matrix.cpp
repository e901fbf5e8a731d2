#include "leibniz/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace leibniz {

Vec vec_zero(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void vec_add_scaled(Vec& dst, const Vec& src, const Scalar& c) {
    if (dst.size() != src.size()) throw ValidationError("vector length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i] * c;
}

Vec vec_scaled(const Vec& v, const Scalar& c) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// ---------------------------------------------------------------------------
// ExactMatrix
// ---------------------------------------------------------------------------

ExactMatrix ExactMatrix::identity(const FieldSpec& f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar::one(f));
    return m;
}

ExactMatrix ExactMatrix::from_dense(const FieldSpec& f, const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ValidationError("ragged dense matrix");
        for (std::size_t j = 0; j < c; ++j)
            if (!rows[i][j].is_zero()) m.data_[i].emplace_back(static_cast<std::uint32_t>(j), rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_triplets(const FieldSpec& f, std::size_t rows, std::size_t cols,
                                       std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
        return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                                : std::get<1>(a) < std::get<1>(b);
    });
    ExactMatrix m(f, rows, cols);
    for (std::size_t k = 0; k < triplets.size();) {
        const auto r = std::get<0>(triplets[k]);
        const auto c = std::get<1>(triplets[k]);
        if (r >= rows || c >= cols) throw ValidationError("triplet out of range");
        Scalar acc = std::get<2>(triplets[k]);
        ++k;
        while (k < triplets.size() && std::get<0>(triplets[k]) == r && std::get<1>(triplets[k]) == c) {
            acc += std::get<2>(triplets[k]);
            ++k;
        }
        if (!acc.is_zero()) m.data_[r].emplace_back(c, acc);
    }
    return m;
}

std::size_t ExactMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

bool ExactMatrix::is_zero() const { return nnz() == 0; }

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Scalar::zero(field_);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {static_cast<std::uint32_t>(c), v});
    }
}

void ExactMatrix::add_at(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {static_cast<std::uint32_t>(c), v});
    }
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix shape mismatch in +");
    ExactMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const Row& a = data_[i];
        const Row& b = rhs.data_[i];
        Row& o = out.data_[i];
        std::size_t x = 0, y = 0;
        while (x < a.size() || y < b.size()) {
            if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
                o.push_back(a[x++]);
            } else if (x == a.size() || b[y].first < a[x].first) {
                o.push_back(b[y++]);
            } else {
                Scalar s = a[x].second + b[y].second;
                if (!s.is_zero()) o.emplace_back(a[x].first, s);
                ++x;
                ++y;
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const { return *this + (-rhs); }

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(*this);
    for (auto& row : out.data_)
        for (auto& e : row) e.second = -e.second;
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    if (c.is_zero()) return ExactMatrix(field_, rows_, cols_);
    ExactMatrix out(*this);
    for (auto& row : out.data_)
        for (auto& e : row) e.second *= c;
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("matrix shape mismatch in *");
    ExactMatrix out(field_, rows_, rhs.cols_);
    std::vector<std::pair<std::uint32_t, Scalar>> acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        acc.clear();
        for (const auto& [k, a] : data_[i])
            for (const auto& [j, b] : rhs.data_[k]) acc.emplace_back(j, a * b);
        std::sort(acc.begin(), acc.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Row& o = out.data_[i];
        for (std::size_t t = 0; t < acc.size();) {
            Scalar s = acc[t].second;
            const auto col = acc[t].first;
            ++t;
            while (t < acc.size() && acc[t].first == col) s += acc[t++].second;
            if (!s.is_zero()) o.emplace_back(col, s);
        }
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[j].emplace_back(static_cast<std::uint32_t>(i), v);
    return out;
}

ExactMatrix ExactMatrix::pow(unsigned k) const {
    if (!is_square()) throw ValidationError("pow of non-square matrix");
    ExactMatrix acc = identity(field_, rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Vec ExactMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ValidationError("matrix-vector shape mismatch");
    Vec out = vec_zero(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, a] : data_[i]) out[i] += a * v[j];
    return out;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::uint32_t>& cols) const {
    std::vector<std::uint32_t> place(cols_, UINT32_MAX);
    for (std::uint32_t i = 0; i < cols.size(); ++i) place[cols[i]] = i;
    ExactMatrix out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i])
            if (place[j] != UINT32_MAX) out.data_[i].emplace_back(place[j], v);
    for (auto& row : out.data_)
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return out;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::uint32_t>& rows) const {
    ExactMatrix out(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) out.data_[i] = data_.at(rows[i]);
    return out;
}

std::vector<Vec> ExactMatrix::to_dense() const {
    std::vector<Vec> out(rows_, vec_zero(field_, cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out[i][j] = v;
    return out;
}

// ---------------------------------------------------------------------------
// Elimination kernels
// ---------------------------------------------------------------------------

namespace {

// Gauss-Jordan over GF(p) on dense residue rows. Returns pivot columns;
// zero rows are dropped.
std::vector<std::uint32_t> rref_mod_p(std::uint32_t p, std::vector<std::vector<std::uint64_t>>& rows) {
    std::vector<std::uint32_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    auto inv_mod = [p](std::uint64_t a) {
        std::uint64_t acc = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };
    std::size_t r = 0;
    for (std::uint32_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        const std::uint64_t inv = inv_mod(rows[r][col]);
        for (std::uint32_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] % p * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const std::uint64_t v = rows[i][col] % p;
            if (v == 0) continue;
            const std::uint64_t neg = p - v;
            for (std::uint32_t j = col; j < ncols; ++j)
                rows[i][j] = (rows[i][j] + neg * rows[r][j]) % p;
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

BigInt row_content(const std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& x : row) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

void make_primitive(std::vector<BigInt>& row) {
    BigInt g = row_content(row);
    if (g > 1)
        for (auto& x : row) x /= g;
}

// Fraction-free Gauss-Jordan over the integers: cross-multiplication with
// gcd stripping after each row update. Pivot rows are normalized to leading
// coefficient 1 only at the very end, producing rational RREF rows.
std::vector<std::uint32_t> rref_rational(std::vector<std::vector<BigInt>>& rows,
                                         std::vector<Vec>& out_rows) {
    std::vector<std::uint32_t> pivots;
    out_rows.clear();
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::uint32_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (sel == rows.size() ||
                boost::multiprecision::abs(rows[i][col]) < boost::multiprecision::abs(rows[sel][col]))
                sel = i;
        }
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        const std::vector<BigInt>& prow = rows[r];
        const BigInt pivot = prow[col];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const BigInt factor = rows[i][col];
            for (std::uint32_t j = 0; j < ncols; ++j)
                rows[i][j] = rows[i][j] * pivot - prow[j] * factor;
            make_primitive(rows[i]);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(pivots.size());
    const FieldSpec f = FieldSpec::rationals();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Vec row = vec_zero(f, ncols);
        const BigInt& pivot = rows[i][pivots[i]];
        for (std::size_t j = 0; j < ncols; ++j)
            if (rows[i][j] != 0) row[j] = Scalar::rational(make_rational(rows[i][j], pivot));
        out_rows.push_back(std::move(row));
    }
    return pivots;
}

}  // namespace

std::vector<std::uint32_t> rref_dense(const FieldSpec& f, std::vector<Vec>& rows) {
    if (f.is_prime_field()) {
        const std::uint32_t p = f.prime();
        std::vector<std::vector<std::uint64_t>> raw(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            raw[i].resize(rows[i].size());
            for (std::size_t j = 0; j < rows[i].size(); ++j) raw[i][j] = rows[i][j].residue_value();
        }
        auto pivots = rref_mod_p(p, raw);
        rows.clear();
        for (const auto& rrow : raw) {
            Vec row = vec_zero(f, rrow.size());
            for (std::size_t j = 0; j < rrow.size(); ++j)
                if (rrow[j] != 0) row[j] = Scalar::residue(p, rrow[j]);
            rows.push_back(std::move(row));
        }
        return pivots;
    }
    // Rationals: clear denominators to primitive integer rows first.
    std::vector<std::vector<BigInt>> raw(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BigInt lcm = 1;
        for (const auto& s : rows[i]) {
            const BigInt d = boost::multiprecision::denominator(s.rational_value());
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        raw[i].resize(rows[i].size());
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const BigRational& q = rows[i][j].rational_value();
            raw[i][j] = boost::multiprecision::numerator(q) *
                        (lcm / boost::multiprecision::denominator(q));
        }
        make_primitive(raw[i]);
    }
    std::vector<Vec> out;
    auto pivots = rref_rational(raw, out);
    rows = std::move(out);
    return pivots;
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    Subspace s = zero(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec row = vec_zero(f, ambient);
        row[i] = Scalar::one(f);
        s.basis_.push_back(std::move(row));
        s.pivots_.push_back(static_cast<std::uint32_t>(i));
    }
    return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& generators) {
    Subspace s = zero(f, ambient);
    std::vector<Vec> rows;
    for (const auto& g : generators) {
        if (g.size() != ambient) throw ValidationError("generator has wrong ambient dimension");
        if (!vec_is_zero(g)) rows.push_back(g);
    }
    s.pivots_ = rref_dense(f, rows);
    s.basis_ = std::move(rows);
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw ValidationError("vector has wrong ambient dimension");
    Vec out(v);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar c = out[pivots_[i]];
        if (!c.is_zero()) vec_add_scaled(out, basis_[i], -c);
    }
    return out;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw ValidationError("ambient dimension mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& rhs) const {
    if (field_ != rhs.field_ || ambient_ != rhs.ambient_ || pivots_ != rhs.pivots_) return false;
    return basis_ == rhs.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_ || !(other.field_ == field_))
        throw ValidationError("subspace sum: ambient dimension or field mismatch");
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, ambient_, gens);
}

Subspace Subspace::perp() const {
    if (basis_.empty()) return full(field_, ambient_);
    ExactMatrix m = ExactMatrix::from_dense(field_, basis_);
    return rank_kernel_image(m).kernel;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_ || !(other.field_ == field_))
        throw ValidationError("subspace intersection: ambient dimension or field mismatch");
    // A cap B = (A-perp + B-perp)-perp under the standard bilinear form.
    return perp().sum(other.perp()).perp();
}

Vec Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) throw ValidationError("vector is not in the subspace");
    Vec coords = vec_zero(field_, basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v[pivots_[i]];
    return coords;
}

std::vector<Vec> Subspace::complement_within(const Subspace& within) const {
    if (!within.contains(*this)) throw ValidationError("complement_within: subspace not contained");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), within.basis_.begin(), within.basis_.end());
    auto pivots = rref_dense(field_, rows);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (!std::binary_search(pivots_.begin(), pivots_.end(), pivots[i]))
            out.push_back(rows[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank / kernel / image, solving
// ---------------------------------------------------------------------------

RankResult rank_kernel_image(const ExactMatrix& m) {
    RankResult res;
    const FieldSpec& f = m.field();
    std::vector<Vec> rows = m.to_dense();
    const auto pivots = rref_dense(f, rows);
    res.rank = pivots.size();

    // Right kernel from RREF: one generator per free column.
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> kernel_gens;
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v = vec_zero(f, m.cols());
        v[j] = Scalar::one(f);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][j];
        kernel_gens.push_back(std::move(v));
    }
    res.kernel = Subspace::span(f, m.cols(), kernel_gens);

    std::vector<Vec> cols = m.transpose().to_dense();
    res.image = Subspace::span(f, m.rows(), cols);
    return res;
}

std::size_t matrix_rank(const ExactMatrix& m) {
    std::vector<Vec> rows = m.to_dense();
    return rref_dense(m.field(), rows).size();
}

std::size_t rank_fraction_free(const ExactMatrix& m) {
    const FieldSpec& f = m.field();
    std::vector<Vec> rows = m.to_dense();
    if (f.is_rational()) {
        // Clear denominators rowwise; Bareiss keeps entries integral.
        for (auto& row : rows) {
            BigInt lcm = 1;
            for (const auto& s : row)
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(s.rational_value()));
            if (lcm != 1)
                for (auto& s : row) s = Scalar::rational(s.rational_value() * BigRational(lcm));
        }
    }
    std::size_t rank = 0;
    Scalar prev_pivot = Scalar::one(f);
    const std::size_t nrows = rows.size();
    const std::size_t ncols = m.cols();
    for (std::uint32_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t sel = rank;
        while (sel < nrows && rows[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(rows[sel], rows[rank]);
        const Scalar pivot = rows[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            const Scalar factor = rows[i][col];
            for (std::uint32_t j = col; j < ncols; ++j)
                rows[i][j] = (rows[i][j] * pivot - rows[rank][j] * factor) / prev_pivot;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

std::optional<Vec> solve_linear(const ExactMatrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw ValidationError("solve_linear: rhs length mismatch");
    const FieldSpec& f = a.field();
    std::vector<Vec> rows = a.to_dense();
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    const auto pivots = rref_dense(f, rows);
    const std::size_t n = a.cols();
    Vec x = vec_zero(f, n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt;  // pivot in augmented column
        x[pivots[i]] = rows[i][n];
    }
    return x;
}

ExactMatrix matrix_with_columns(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& columns) {
    ExactMatrix m(f, ambient, columns.size());
    for (std::uint32_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != ambient) throw ValidationError("column has wrong ambient dimension");
        for (std::size_t i = 0; i < ambient; ++i)
            if (!columns[j][i].is_zero()) m.add_at(i, j, columns[j][i]);
    }
    return m;
}

namespace {

BigInt gaussian_binomial(std::uint32_t p, std::size_t d, std::size_t k) {
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d - i)) - 1;
        den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

}  // namespace

std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t dim, std::uint64_t budget) {
    if (!f.is_prime_field()) throw ValidationError("subspace enumeration requires a finite prime field");
    const std::uint32_t p = f.prime();
    BigInt total = 2;
    for (std::size_t k = 1; k < dim; ++k) total += gaussian_binomial(p, dim, k);
    if (total > budget)
        throw BudgetError("subspace enumeration needs " + total.str() + " subspaces, budget is " +
                          std::to_string(budget));

    std::vector<Subspace> out;
    out.push_back(Subspace::zero(f, dim));
    for (std::size_t k = 1; k < dim; ++k) {
        std::vector<bool> mask(dim, false);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
        do {
            std::vector<std::uint32_t> pivots;
            for (std::uint32_t j = 0; j < dim; ++j)
                if (mask[j]) pivots.push_back(j);
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t i = 0; i < k; ++i)
                for (std::uint32_t j = pivots[i] + 1; j < dim; ++j)
                    if (!mask[j]) free_pos.emplace_back(i, j);
            std::vector<std::uint32_t> digits(free_pos.size(), 0);
            while (true) {
                std::vector<Vec> rows(k, vec_zero(f, dim));
                for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = Scalar::one(f);
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    rows[free_pos[t].first][free_pos[t].second] = Scalar::of(f, digits[t]);
                out.push_back(Subspace::span(f, dim, rows));
                std::size_t pos = 0;
                while (pos < digits.size()) {
                    if (++digits[pos] < p) break;
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == digits.size()) break;
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    if (dim > 0) out.push_back(Subspace::full(f, dim));
    return out;
}

QuotientMap quotient_map(const Subspace& u) {
    QuotientMap qm;
    qm.kernel = u;
    const FieldSpec& f = u.field();
    const std::size_t n = u.ambient_dim();
    const std::size_t k = u.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : u.pivots()) is_pivot[p] = true;
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    ExactMatrix proj(f, n - k, n);
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        proj.add_at(idx, free_cols[idx], Scalar::one(f));
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar& c = u.basis()[i][free_cols[idx]];
            if (!c.is_zero()) proj.add_at(idx, u.pivots()[i], -c);
        }
    }
    ExactMatrix sect(f, n, n - k);
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx)
        sect.add_at(free_cols[idx], idx, Scalar::one(f));
    qm.projection = std::move(proj);
    qm.section = std::move(sect);
    return qm;
}

}  // namespace leibniz
