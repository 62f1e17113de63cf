#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lsa/linalg.hpp"

namespace lsa {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// Element of the graded space Q^n (+) Q^m, dense coordinates.
class Element {
  public:
    Element() = default;
    Element(size_t n, size_t m) : even_(n), odd_(m) {}
    Element(std::vector<Scalar> even, std::vector<Scalar> odd)
        : even_(std::move(even)), odd_(std::move(odd)) {}

    static Element basis(size_t n, size_t m, Parity p, size_t index_1based);

    size_t even_dim() const { return even_.size(); }
    size_t odd_dim() const { return odd_.size(); }
    const std::vector<Scalar>& even() const { return even_; }
    const std::vector<Scalar>& odd() const { return odd_; }
    Scalar& even_at(size_t i) { return even_[i]; }
    Scalar& odd_at(size_t i) { return odd_[i]; }

    bool is_zero() const;
    bool even_part_zero() const;
    bool odd_part_zero() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& v);
    Element& operator+=(const Element& o) { return *this = *this + o; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  private:
    std::vector<Scalar> even_, odd_;
};

/// One basis product: [ (pa, ia), (pb, ib) ] -> value. Indices are 1-based.
struct TableEntry {
    Parity pa;
    int ia;
    Parity pb;
    int ib;
    Element value;
};

struct SuperidentityViolation {
    // 1-based graded indices of the basis triple (x, y, z).
    std::array<std::pair<Parity, int>, 3> triple;
    Element residual;
    std::string str() const;
};

/// Finite-dimensional Z2-graded algebra given by structure constants.
/// The table stores, per ordered basis pair, the coordinate vector of the
/// product in the parity-(pa+pb) component; absent pairs multiply to zero.
/// Immutable after construction.
class SuperAlgebra {
  public:
    /// Validates index ranges and the grading constraint: a stored product
    /// with any component outside the target parity throws GradingViolation.
    static SuperAlgebra make(int n, int m, const std::vector<TableEntry>& entries);

    int even_dim() const { return n_; }
    int odd_dim() const { return m_; }
    int total_dim() const { return n_ + m_; }

    /// Coordinates of [basis (pa,ia), basis (pb,ib)] in the target parity
    /// component (1-based indices); empty vector means zero.
    const std::vector<Scalar>* table_entry(Parity pa, int ia, Parity pb, int ib) const;
    Element product_of_basis(Parity pa, int ia, Parity pb, int ib) const;

    /// Bilinear extension of the table.
    Element multiply(const Element& a, const Element& b) const;

    /// Residuals [x,[y,z]] - [[x,y],z] + (-1)^{alpha beta} [[x,z],y] over all
    /// ordered basis triples; empty result iff the superidentity holds.
    std::vector<SuperidentityViolation> superidentity_violations() const;
    bool is_leibniz() const { return superidentity_violations().empty(); }

    /// The right annihilator { z : [L, z] = 0 } as a graded subspace.
    GradedSubspace right_annihilator() const;

    /// Graded antisymmetry [x,y] = -(-1)^{alpha beta}[y,x] on all basis pairs.
    bool is_lie() const;

    /// Transport through the graded change of basis whose columns are the
    /// new basis vectors in old coordinates. Throws SingularMatrix.
    SuperAlgebra change_basis(const Matrix& p_even, const Matrix& p_odd) const;

    /// The even part as an algebra with m = 0.
    SuperAlgebra even_part() const;

    /// Span of even-even products: the square of the even-part algebra.
    GradedSubspace even_square() const;

    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.table_ == b.table_;
    }
    friend bool operator!=(const SuperAlgebra& a, const SuperAlgebra& b) { return !(a == b); }

    using Key = std::array<int, 4>;  // parity a, index a, parity b, index b (1-based)
    const std::map<Key, std::vector<Scalar>>& table() const { return table_; }

  private:
    SuperAlgebra(int n, int m) : n_(n), m_(m) {}

    int n_ = 0, m_ = 0;
    std::map<Key, std::vector<Scalar>> table_;
};

std::string basis_token(Parity p, int index_1based);

}  // namespace lsa
