#pragma once

#include <span>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

enum class FamilyTag {
    null_filiform,
    thm21_mixed,
    leib_1m,
    leib_n1,
    leib_22_a,
    leib_22_b,
    leib_2m_a,
    leib_2m_b,
    fam_l,
    fam_g,
    fam_m,
    fam_h,
    fam_e_odd,
    fam_e_even,
    fam_f,
};

std::string family_tag_name(FamilyTag t);
FamilyTag family_tag_from_name(const std::string& name);  // throws FamilyError

/// Single-generated algebra [x_i, x_1] = x_{i+1} of maximal nilindex n + 1.
SuperAlgebra null_filiform(int n);

/// The mixed maximal-nilindex algebra on e_1..e_{n+m} with parity(e_i) =
/// i mod 2 (odd index = odd part): [e_i,e_1] = e_{i+1}, [e_i,e_2] = 2e_{i+2}.
/// Requires m = n or m = n + 1.
SuperAlgebra thm21_mixed(int n, int m);

SuperAlgebra leib_1m(int m);
SuperAlgebra leib_n1(int n, int alpha);  // alpha in {0, 1}, n >= 2
SuperAlgebra leib_22_a();
SuperAlgebra leib_22_b();
SuperAlgebra leib_2m_a(int m);  // m odd >= 3
SuperAlgebra leib_2m_b(int m);

/// Parameter arities at even dimension n (odd dimension fixed per family):
///   L: (alpha_4..alpha_n, theta)            n-2 values,  m = n-1
///   G: (beta_4..beta_n, gamma)              n-2 values,  m = n-1
///   M: (alpha_4..alpha_n, theta, tau)       n-1 values,  m = n
///   H: (beta_4..beta_n, delta)              n-2 values,  m = n
///   E: (gamma, beta_{f(n)}..beta_n, beta)   where f(n) = floor((n+4)/2), m = n+1
///   F: (beta_{g(n)}..beta_{n+1})            where g(n) = floor((n+5)/2), m = n+2
SuperAlgebra family_L(int n, std::span<const Scalar> params);
SuperAlgebra family_G(int n, std::span<const Scalar> params);
SuperAlgebra family_M(int n, std::span<const Scalar> params);
SuperAlgebra family_H(int n, std::span<const Scalar> params);
SuperAlgebra family_E(int n, std::span<const Scalar> params);
SuperAlgebra family_F(int n, std::span<const Scalar> params);

int family_arity(FamilyTag t, int n, int m);

/// Dispatcher; validates that (n, m) and the parameter count fit the tag.
SuperAlgebra make_family(FamilyTag t, int n, int m, std::span<const Scalar> params);

/// Parameter-normalization operators on k-vectors. kind 0/1/2 select the
/// scaling of the tail entries at positions p = j+1..k:
///   0: delta * (fixed j-th root of delta^p) * S(m,j)^p * v_p
///   1: S(m,j)^p * v_p
///   2: S(m,2j+1)^{2p+1} * v_p
/// with a 1 at position j and zeros before it; j = k+1 yields the zero
/// vector. S(m,t) is the root of unity zeta_t^m.
std::vector<Scalar> op_V(int kind, int j, int k, std::span<const Scalar> v, long m_root,
                         int delta = 1);

/// Acts on (k+1)-slot vectors whose first k slots have the op_V(1, j, k, .)
/// shape (j-1 zeros, then 1, then an S(m,j)-scaled tail) and whose final
/// slot holds gamma. Generic 1 <= s <= k-j places a second 1 at slot s+j and
/// rescales the tail by S(m,s); s = k+1-j maps gamma's slot to 1; s = k+2-j
/// zeroes everything after the leading 1. Throws ShapeError on malformed
/// input.
std::vector<Scalar> op_W(int s, int k, std::span<const Scalar> v, long m_root);

struct CanonicalEntry {
    FamilyTag tag;
    int n, m;
    std::vector<Scalar> params;
    std::string description;
};

/// The canonical enumeration of pairwise non-isomorphic representatives at
/// dims (n, m), instantiated with the supplied sample parameter values
/// (cyclically reused; defaults to zero). Supported shapes: the small-family
/// dims and m in {n-1, n, n+1, n+2}.
std::vector<CanonicalEntry> canonical_list(int n, int m, std::span<const Scalar> sample);

}  // namespace lsa
