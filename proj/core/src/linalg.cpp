#include "lsa/linalg.hpp"

#include <algorithm>

#include "lsa/errors.hpp"

namespace lsa {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void Matrix::append_row(const std::vector<Scalar>& row) {
    if (row.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Scalar> Matrix::row(size_t i) const {
    return std::vector<Scalar>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.mat = m;
    Matrix& a = res.mat;
    size_t pivot_row = 0;
    for (size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        const Scalar inv = a.at(pivot_row, col).inverse();
        for (size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) = a.at(pivot_row, j) * inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row) continue;
            const Scalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw SingularMatrix("inverse of non-square matrix");
    const size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    RrefResult r = rref(aug);
    for (size_t i = 0; i < n; ++i)
        if (r.mat.at(i, i) != Scalar(1)) throw SingularMatrix("matrix is singular");
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

Matrix null_space(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    Matrix basis(0, m.cols());
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols());
        v[free_col] = Scalar(1);
        for (size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.mat.at(p, free_col);
        basis.append_row(v);
    }
    return rref(basis).mat;  // already echelon-ish; normalize for canonical form
}

std::optional<std::vector<Scalar>> coordinates_in_row_span(const Matrix& basis_rows,
                                                           const std::vector<Scalar>& v) {
    // Solve basis_rows^T c = v via elimination on [basis_rows^T | v].
    const size_t n = basis_rows.cols();
    const size_t k = basis_rows.rows();
    if (v.size() != n) throw DimensionMismatch("vector length mismatch");
    Matrix aug(n, k + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) aug.at(i, j) = basis_rows.at(j, i);
        aug.at(i, k) = v[i];
    }
    RrefResult r = rref(aug);
    std::vector<Scalar> c(k);
    for (size_t p = 0; p < r.pivot_cols.size(); ++p) {
        if (r.pivot_cols[p] == k) return std::nullopt;  // inconsistent
        c[r.pivot_cols[p]] = r.mat.at(p, k);
    }
    return c;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw Error("partition parts must be positive");
    if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
        throw Error("partition parts must be non-increasing");
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool operator<(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                        b.parts_.end());
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition jordan_partition(const Matrix& m, int nil_bound) {
    if (m.rows() != m.cols()) throw DimensionMismatch("jordan_partition needs a square matrix");
    const int d = static_cast<int>(m.rows());
    if (nil_bound < 0) nil_bound = d;
    if (d == 0) return Partition();

    std::vector<size_t> ranks = {static_cast<size_t>(d)};  // rank of m^0
    Matrix power = m;
    int k = 1;
    while (true) {
        const size_t r = rank(power);
        ranks.push_back(r);
        if (r == 0) break;
        if (k >= nil_bound)
            throw NotNilpotent("matrix is not nilpotent within " + std::to_string(nil_bound) +
                               " powers");
        power = power * m;
        ++k;
    }
    std::vector<int> parts;
    for (size_t s = 1; s < ranks.size(); ++s) {
        const int blocks_ge_s = static_cast<int>(ranks[s - 1] - ranks[s]);
        const int blocks_ge_next = s + 1 < ranks.size() ? static_cast<int>(ranks[s] - ranks[s + 1]) : 0;
        for (int c = 0; c < blocks_ge_s - blocks_ge_next; ++c) parts.push_back(static_cast<int>(s));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

GradedSubspace GradedSubspace::full(size_t n, size_t m) {
    GradedSubspace s(n, m);
    s.even_ = Matrix::identity(n);
    s.odd_ = Matrix::identity(m);
    return s;
}

namespace {
Matrix echelonize_rows(const Matrix& rows) {
    RrefResult r = rref(rows);
    Matrix out(0, rows.cols());
    for (size_t i = 0; i < r.rank; ++i) out.append_row(r.mat.row(i));
    return out;
}
}  // namespace

GradedSubspace GradedSubspace::span(const Matrix& even_rows, const Matrix& odd_rows) {
    GradedSubspace s(even_rows.cols(), odd_rows.cols());
    s.even_ = echelonize_rows(even_rows);
    s.odd_ = echelonize_rows(odd_rows);
    return s;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& o) const {
    if (ambient_even() != o.ambient_even() || ambient_odd() != o.ambient_odd())
        throw DimensionMismatch("subspace sum: ambient dimensions differ");
    Matrix ev = even_;
    for (size_t i = 0; i < o.even_.rows(); ++i) ev.append_row(o.even_.row(i));
    Matrix od = odd_;
    for (size_t i = 0; i < o.odd_.rows(); ++i) od.append_row(o.odd_.row(i));
    return span(ev, od);
}

namespace {
bool reduces_to_zero(const Matrix& echelon_rows, std::vector<Scalar> v) {
    for (size_t i = 0; i < echelon_rows.rows(); ++i) {
        size_t pivot = 0;
        while (pivot < echelon_rows.cols() && echelon_rows.at(i, pivot).is_zero()) ++pivot;
        if (pivot == echelon_rows.cols()) continue;
        const Scalar f = v[pivot];
        if (f.is_zero()) continue;
        for (size_t j = pivot; j < v.size(); ++j) v[j] = v[j] - f * echelon_rows.at(i, j);
    }
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}
}  // namespace

bool GradedSubspace::contains_even(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_even()) throw DimensionMismatch("even vector length mismatch");
    return reduces_to_zero(even_, v);
}

bool GradedSubspace::contains_odd(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_odd()) throw DimensionMismatch("odd vector length mismatch");
    return reduces_to_zero(odd_, v);
}

bool GradedSubspace::contains(const GradedSubspace& o) const {
    for (size_t i = 0; i < o.even_.rows(); ++i)
        if (!contains_even(o.even_.row(i))) return false;
    for (size_t i = 0; i < o.odd_.rows(); ++i)
        if (!contains_odd(o.odd_.row(i))) return false;
    return true;
}

}  // namespace lsa
