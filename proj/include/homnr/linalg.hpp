#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homnr/errors.hpp"
#include "homnr/rational.hpp"

namespace homnr {

using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline void add_scaled(Vector& acc, const Rational& c, const Vector& v) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
}

inline Vector operator+(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline Vector operator-(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline Vector operator*(const Rational& c, Vector a) {
    for (auto& x : a) x *= c;
    return a;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix diagonal(const Vector& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InputError("matrix row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw InputError("matrix column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
    }
    bool is_identity() const { return is_square() && *this == identity(rows_); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Vector operator*(const Vector& v) const {
        if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const Rational& c, Matrix a) {
        for (auto& x : a.data_) x *= c;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix power(unsigned e) const {
        if (!is_square()) throw InputError("power of a non-square matrix");
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            base = base * base;
            e >>= 1U;
        }
        return result;
    }

    // Blocks stacked side by side; row counts must agree.
    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw InputError("hstack row mismatch");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
        }
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Sparse row: (column, value) pairs sorted by column, no stored zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

inline SparseRow to_sparse(const Vector& v) {
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) row.emplace_back(i, v[i]);
    return row;
}

inline Vector to_dense(const SparseRow& row, std::size_t n) {
    Vector v(n);
    for (const auto& [c, x] : row) v[c] = x;
    return v;
}

// row - c * pivot, merged in column order.
inline SparseRow subtract_scaled(const SparseRow& row, const Rational& c, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -(c * pivot[j].second));
            ++j;
        } else {
            Rational x = row[i].second - c * pivot[j].second;
            if (!x.is_zero()) out.emplace_back(row[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental Gaussian elimination over exact rationals. Rows are kept in
// echelon form keyed by leading column, each normalized to leading entry 1.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    // Returns true when the row was independent of the rows added so far.
    bool add_row(SparseRow row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        Rational lead = row.front().second;
        for (auto& [c, x] : row) x /= lead;
        std::size_t key = row.front().first;
        pivots_.emplace(key, std::move(row));
        reduced_ = false;
        return true;
    }
    bool add_row(const Vector& v) {
        if (v.size() != cols_) throw InputError("row length mismatch in elimination");
        return add_row(to_sparse(v));
    }

    bool in_row_space(const Vector& v) const {
        if (v.size() != cols_) throw InputError("vector length mismatch in membership test");
        return reduce(to_sparse(v)).empty();
    }

    // Pivot columns in increasing order.
    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> out;
        for (const auto& [c, row] : pivots_) out.push_back(c);
        return out;
    }

    // Rows of the reduced row echelon form, ordered by pivot column.
    std::vector<SparseRow> reduced_rows() {
        make_reduced();
        std::vector<SparseRow> out;
        for (const auto& [c, row] : pivots_) out.push_back(row);
        return out;
    }

    // Basis of {x : R x = 0}, one vector per free column (that entry is 1,
    // other free entries are 0).
    std::vector<Vector> null_space() {
        make_reduced();
        std::vector<bool> is_pivot(cols_, false);
        for (const auto& [c, row] : pivots_) is_pivot[c] = true;
        std::vector<Vector> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            Vector x(cols_);
            x[f] = 1;
            for (const auto& [c, row] : pivots_) {
                auto it = std::lower_bound(row.begin(), row.end(), f,
                                           [](const auto& e, std::size_t col) { return e.first < col; });
                if (it != row.end() && it->first == f) x[c] = -it->second;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    SparseRow reduce(SparseRow row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            Rational c = row.front().second;
            row = subtract_scaled(row, c, it->second);
        }
        return row;
    }

    // Back substitution: clear every pivot column from the rows above it.
    void make_reduced() {
        if (reduced_) return;
        for (auto p = pivots_.rbegin(); p != pivots_.rend(); ++p) {
            std::size_t col = p->first;
            for (auto& [c, row] : pivots_) {
                if (c >= col) break;
                auto it = std::lower_bound(row.begin(), row.end(), col,
                                           [](const auto& e, std::size_t k) { return e.first < k; });
                if (it != row.end() && it->first == col) {
                    Rational x = it->second;
                    row = subtract_scaled(row, x, p->second);
                }
            }
        }
        reduced_ = true;
    }

    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivots_;
    bool reduced_ = true;
};

inline RowEchelon echelon_of(const Matrix& m) {
    RowEchelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.add_row(m.row(r));
    return e;
}

inline std::size_t rank(const Matrix& m) { return echelon_of(m).rank(); }

// Linear subspace of Q^n stored by its canonical basis: the rows of the
// reduced row echelon form of any spanning set. Coordinates of a member are
// its entries at the pivot columns.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
        RowEchelon e(ambient_dim);
        for (const auto& v : vectors) e.add_row(v);
        Subspace s(ambient_dim);
        for (const auto& row : e.reduced_rows()) s.basis_.push_back(to_dense(row, ambient_dim));
        s.pivots_ = e.pivot_columns();
        return s;
    }
    static Subspace whole(std::size_t n) {
        std::vector<Vector> units;
        for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
        return span(units, n);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const {
        if (v.size() != ambient_) throw InputError("vector length does not match subspace ambient dimension");
        return is_zero(residual(v));
    }

    // v minus its reconstruction from pivot coordinates; zero iff v is a member.
    // Linear in v.
    Vector residual(const Vector& v) const {
        Vector r = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) add_scaled(r, -v[pivots_[i]], basis_[i]);
        return r;
    }

    // Coordinates in the canonical basis. Caller ensures membership.
    Vector coordinates(const Vector& v) const {
        Vector c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    Vector combine(const Vector& coords) const {
        Vector v(ambient_);
        for (std::size_t i = 0; i < basis_.size(); ++i) add_scaled(v, coords[i], basis_[i]);
        return v;
    }

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace kernel_basis(const Matrix& m) {
    RowEchelon e = echelon_of(m);
    return Subspace::span(e.null_space(), m.cols());
}

inline bool subspace_membership(const Vector& v, const Subspace& s) { return s.contains(v); }

// Outcome of solving m x = b. On failure the ranks certify inconsistency:
// augmented_rank > rank.
struct LinearSolution {
    std::optional<Vector> x;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;

    explicit operator bool() const { return x.has_value(); }
};

inline LinearSolution solve_certified(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw InputError("right-hand side length does not match matrix rows");
    const std::size_t n = m.cols();
    RowEchelon coeff(n);
    RowEchelon aug(n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector row = m.row(r);
        coeff.add_row(row);
        row.push_back(b[r]);
        aug.add_row(row);
    }
    LinearSolution out;
    out.rank = coeff.rank();
    out.augmented_rank = aug.rank();
    if (out.augmented_rank > out.rank) return out;
    Vector x(n);
    for (const auto& row : aug.reduced_rows()) {
        std::size_t pivot = row.front().first;
        if (row.back().first == n) x[pivot] = row.back().second;
    }
    if (m * x != b) throw InternalError("linear solve failed exact substitution");
    out.x = std::move(x);
    return out;
}

inline std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) { return solve_certified(m, b).x; }

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix aug = Matrix::hstack(m, Matrix::identity(n));
    RowEchelon e = echelon_of(aug);
    auto rows = e.reduced_rows();
    if (rows.size() < n || rows[n - 1].front().first >= n) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (const auto& [c, x] : rows[r])
            if (c >= n) inv(r, c - n) = x;
    return inv;
}

}  // namespace homnr
