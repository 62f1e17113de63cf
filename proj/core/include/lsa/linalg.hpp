#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsa/scalar.hpp"

namespace lsa {

/// Dense row-major matrix over Scalar.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    Matrix transposed() const;
    void append_row(const std::vector<Scalar>& row);
    std::vector<Scalar> row(size_t i) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    size_t rows_, cols_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix mat;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

/// Reduced row-echelon form; pivot is the first nonzero entry in column
/// order (exact arithmetic, no magnitude pivoting).
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws SingularMatrix when m is not square invertible.
Matrix inverse(const Matrix& m);

/// Rows form a basis of { x : m x = 0 } in reduced echelon form.
Matrix null_space(const Matrix& m);

/// Coordinates c with basis_rows^T c = v, when v lies in the row span.
std::optional<std::vector<Scalar>> coordinates_in_row_span(const Matrix& basis_rows,
                                                           const std::vector<Scalar>& v);

/// Non-increasing partition of a positive integer (possibly empty).
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int sum() const;
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    /// Lexicographic order, part by part; a prefix compares below a
    /// proper extension.
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /// "3,1" — empty partition prints as "-".
    std::string str() const;

  private:
    std::vector<int> parts_;
};

/// Jordan block-size partition of a nilpotent matrix, computed from the rank
/// sequence r_k = rank(m^k): the number of blocks of size >= k equals
/// r_{k-1} - r_k. Throws NotNilpotent when m^k != 0 for all k <= nil_bound.
/// nil_bound < 0 means the matrix dimension.
Partition jordan_partition(const Matrix& m, int nil_bound = -1);

/// Pair of reduced-echelon bases (rows = vectors) for a graded subspace of
/// Q^n (+) Q^m. Zero rows are never stored, so equality of subspaces is
/// equality of the stored matrices.
class GradedSubspace {
  public:
    GradedSubspace() : even_(0, 0), odd_(0, 0) {}
    GradedSubspace(size_t ambient_even, size_t ambient_odd)
        : even_(0, ambient_even), odd_(0, ambient_odd) {}

    static GradedSubspace full(size_t n, size_t m);
    /// Echelonizes the given spanning rows.
    static GradedSubspace span(const Matrix& even_rows, const Matrix& odd_rows);

    size_t ambient_even() const { return even_.cols(); }
    size_t ambient_odd() const { return odd_.cols(); }
    std::pair<size_t, size_t> dims() const { return {even_.rows(), odd_.rows()}; }
    size_t total_dim() const { return even_.rows() + odd_.rows(); }
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& even_basis() const { return even_; }
    const Matrix& odd_basis() const { return odd_; }

    GradedSubspace sum(const GradedSubspace& o) const;
    bool contains_even(const std::vector<Scalar>& v) const;
    bool contains_odd(const std::vector<Scalar>& v) const;
    bool contains(const GradedSubspace& o) const;

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_;
    }
    friend bool operator!=(const GradedSubspace& a, const GradedSubspace& b) { return !(a == b); }

  private:
    Matrix even_, odd_;  // reduced echelon, no zero rows
};

}  // namespace lsa
