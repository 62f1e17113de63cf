#pragma once

#include <string>
#include <string_view>

#include "lsa/algebra.hpp"

namespace lsa {

/// Parse the .lsa text format:
///
///   # comment
///   dims <n> <m>
///   [<b1>, <b2>] = <term> (+|- <term>)*
///
/// Basis tokens are x<i> (even) and y<j> (odd), 1-based. A term is an
/// optional scalar product followed by a basis token ("1/2 y2", "2*z(4) x1",
/// "y3"); "0" stands for the zero product. Omitted brackets are zero.
/// Duplicate bracket lines, unknown tokens, out-of-range indices, grading
/// violations and syntax errors throw ParseError with the offending
/// position.
SuperAlgebra parse_lsa(std::string_view text);

/// Canonical serialization: header then bracket lines in even-even,
/// even-odd, odd-even, odd-odd order, each block sorted by (left, right)
/// index; parse(serialize(a)) == a.
std::string serialize_lsa(const SuperAlgebra& a);

/// Scalar literal grammar: sums of products of rationals and roots of unity,
/// e.g. "1/2 + 3*z(4)^1". z(N) denotes the primitive N-th root of unity.
Scalar parse_scalar(std::string_view text);

/// Comma-separated scalar literals; empty input yields an empty vector.
std::vector<Scalar> parse_scalar_csv(std::string_view text);

}  // namespace lsa
