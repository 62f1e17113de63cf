#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

/// Descending central sequence L^1 = L, L^{k+1} = [L^k, L]. terms[k] is
/// L^{k+1}; the chain stops at the first zero term or at the first repeated
/// nonzero term (non-nilpotent case).
struct CentralSeries {
    std::vector<GradedSubspace> terms;
    bool nilpotent = false;
};

CentralSeries central_series(const SuperAlgebra& a);

/// Minimal s with L^s = 0. Throws NotNilpotent when the series stabilizes
/// at a nonzero term.
int nilindex(const SuperAlgebra& a);

/// Graded dimensions of L / L^2; their sum is the minimal number of
/// generators of a nilpotent algebra.
std::pair<int, int> generator_dims(const SuperAlgebra& a);

/// Matrices of b -> [b, x] on the even and odd components, for purely even
/// x (column-vector convention: column j holds the image of basis j).
std::pair<Matrix, Matrix> right_mult_matrices(const SuperAlgebra& a, const Element& x);

struct CharSeq {
    Partition even_part;  // parts sum to n
    Partition odd_part;   // parts sum to m

    std::string str() const { return "(" + even_part.str() + "|" + odd_part.str() + ")"; }
    friend bool operator==(const CharSeq& a, const CharSeq& b) {
        return a.even_part == b.even_part && a.odd_part == b.odd_part;
    }
    friend bool operator!=(const CharSeq& a, const CharSeq& b) { return !(a == b); }
};

/// Characteristic sequence: the two lexicographic maxima over candidates
/// x in L_0 \ L_0^2 of the Jordan partitions of R_x on L_0 and on L_1.
/// Candidates are the even basis vectors outside L_0^2 plus `trials` seeded
/// random rational combinations adjusted to lie outside L_0^2; the maximum
/// is attained generically, so this realizes the definition's sup with the
/// stated reproducible policy. Throws UndefinedInvariant when n = 0 and
/// NotNilpotent when some R_x is not nilpotent.
CharSeq characteristic_sequence(const SuperAlgebra& a, int trials = 8, uint64_t seed = 0);

struct NaturalGradation {
    SuperAlgebra algebra;      // m = 0, basis ordered by degree
    std::vector<int> degrees;  // degree label of each new basis vector
    Matrix representatives;    // rows: new basis vectors in old coordinates
};

/// Natural gradation gr(A)_i = A^i / A^{i+1} of an even algebra (m = 0),
/// with echelon-complement representatives in pivot order. Throws when the
/// input has m != 0 or is not nilpotent.
NaturalGradation natural_gradation(const SuperAlgebra& a);

/// Isomorphism-invariant summary. charseq is absent when undefined (n = 0
/// or a non-nilpotent right multiplication); nilindex is absent when the
/// algebra is not nilpotent.
struct Fingerprint {
    std::vector<std::pair<int, int>> series_dims;  // nonzero terms of the chain
    std::optional<int> nilindex;
    std::optional<CharSeq> charseq;
    std::pair<int, int> annihilator_dims;
    bool lie = false;
    std::pair<int, int> generator_dims;

    /// Canonical single line; equality of fingerprints is equality of lines.
    std::string line() const;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.line() == b.line();
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

Fingerprint fingerprint(const SuperAlgebra& a, int trials = 8, uint64_t seed = 0);

}  // namespace lsa
