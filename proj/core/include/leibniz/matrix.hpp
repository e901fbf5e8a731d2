#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
bool vec_is_zero(const Vec& v);
void vec_add_scaled(Vec& dst, const Vec& src, const Scalar& c);
Vec vec_scaled(const Vec& v, const Scalar& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);

/// Sparse exact matrix over Q or GF(p). Rows hold (column, value) pairs
/// sorted by column; zero entries are never stored.
class ExactMatrix {
public:
    using Entry = std::pair<std::uint32_t, Scalar>;
    using Row = std::vector<Entry>;

    ExactMatrix() : field_(FieldSpec::rationals()) {}
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows) {}

    static ExactMatrix identity(const FieldSpec& f, std::size_t n);
    static ExactMatrix from_dense(const FieldSpec& f, const std::vector<Vec>& rows);
    static ExactMatrix from_triplets(const FieldSpec& f, std::size_t rows, std::size_t cols,
                                     std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> triplets);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    /// Accumulates v into entry (r, c), dropping it if the sum cancels.
    void add_at(std::size_t r, std::size_t c, const Scalar& v);

    const Row& row(std::size_t r) const { return data_[r]; }

    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Scalar& c) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& rhs) const;

    ExactMatrix transpose() const;
    ExactMatrix pow(unsigned k) const;

    /// Matrix-vector product (column vector of length cols()).
    Vec apply(const Vec& v) const;

    /// Rows restricted to a column subset, re-indexed in the given order.
    ExactMatrix select_columns(const std::vector<std::uint32_t>& cols) const;
    ExactMatrix select_rows(const std::vector<std::uint32_t>& rows) const;

    std::vector<Vec> to_dense() const;

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

/// Canonical subspace of F^n: basis rows in reduced row-echelon form with
/// strictly increasing pivot columns. Equality of subspaces is equality of
/// these bases.
class Subspace {
public:
    Subspace() : field_(FieldSpec::rationals()) {}

    static Subspace zero(const FieldSpec& f, std::size_t ambient);
    static Subspace full(const FieldSpec& f, std::size_t ambient);
    static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& generators);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }

    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates; zero iff v lies
    /// in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// Solutions x of (basis as rows) . x = 0; the annihilator under the
    /// standard bilinear form.
    Subspace perp() const;

    /// Coordinates of a member vector in the echelon basis (the pivot-column
    /// entries). Throws if v is not a member.
    Vec coordinates(const Vec& v) const;

    /// Basis of a complement of this subspace inside the enclosing subspace
    /// `within` (which must contain it): the stacked-echelon rows whose pivots
    /// are not pivots of this subspace.
    std::vector<Vec> complement_within(const Subspace& within) const;

private:
    FieldSpec field_;
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::uint32_t> pivots_;
};

struct RankResult {
    std::size_t rank = 0;
    Subspace kernel;  // right kernel: x with A x = 0
    Subspace image;   // column space of A
};

/// Rank, right kernel and column space in one call (exact, canonical bases).
RankResult rank_kernel_image(const ExactMatrix& m);

/// Rank alone (one elimination pass).
std::size_t matrix_rank(const ExactMatrix& m);

/// Rank by fraction-free (Bareiss-style) elimination: cross-multiplication
/// with exact division by the previous pivot. Over Q the matrix is first
/// cleared to primitive integer rows.
std::size_t rank_fraction_free(const ExactMatrix& m);

/// One solution of A x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve_linear(const ExactMatrix& a, const Vec& b);

/// Reduced row-echelon form of dense rows; returns pivot columns. Rows are
/// modified in place and zero rows are removed.
std::vector<std::uint32_t> rref_dense(const FieldSpec& f, std::vector<Vec>& rows);

/// Linear map F^k -> F^n sending the i-th standard vector to rows[i].
ExactMatrix matrix_with_columns(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& columns);

/// Every subspace of F^dim over a prime field, enumerated through canonical
/// echelon bases (zero and full space included). Refuses via BudgetError when
/// the subspace count would exceed the budget.
std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t dim, std::uint64_t budget);

/// Projection to quotient coordinates modulo a subspace, together with a
/// linear section.
struct QuotientMap {
    Subspace kernel;        // the subspace being quotiented out
    ExactMatrix projection; // (n - k) x n, kernel exactly `kernel`
    ExactMatrix section;    // n x (n - k), projection * section = identity
};

QuotientMap quotient_map(const Subspace& u);

}  // namespace leibniz
