#include "doctest.h"
#include "lsa/algebra.hpp"
#include "lsa/errors.hpp"
#include "lsa/families.hpp"
#include "lsa/prng.hpp"

using namespace lsa;

namespace {

Element basis(const SuperAlgebra& a, Parity p, int i) {
    return Element::basis(a.even_dim(), a.odd_dim(), p, i);
}

Matrix random_invertible(Prng& rng, size_t n) {
    while (true) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(Rational(rng.range(-2, 2)));
        if (n == 0 || is_invertible(m)) return m;
    }
}

}  // namespace

TEST_CASE("construction and grading validation") {
    // 2-dim chain algebra [x1, x1] = x2.
    Element v(2, 0);
    v.even_at(1) = Scalar(1);
    CHECK_NOTHROW(SuperAlgebra::make(2, 0, {{Parity::even, 1, Parity::even, 1, v}}));

    // [y1, y1] = y1 violates the grading: odd times odd must be even.
    Element w(1, 1);
    w.odd_at(0) = Scalar(1);
    CHECK_THROWS_AS(SuperAlgebra::make(1, 1, {{Parity::odd, 1, Parity::odd, 1, w}}),
                    GradingViolation);

    // Out-of-range index.
    Element u(1, 1);
    u.odd_at(0) = Scalar(1);
    CHECK_THROWS_AS(SuperAlgebra::make(1, 1, {{Parity::even, 2, Parity::odd, 1, u}}),
                    GradingViolation);

    // The first Leib_{2,2} table is a valid superalgebra.
    CHECK_NOTHROW(leib_22_a());
}

TEST_CASE("multiply is the bilinear extension") {
    const SuperAlgebra a = leib_22_a();
    CHECK(a.multiply(Element(2, 2), basis(a, Parity::odd, 1)).is_zero());

    // [y1, x2] = 2 y2
    Element prod = a.multiply(basis(a, Parity::odd, 1), basis(a, Parity::even, 2));
    Element expected(2, 2);
    expected.odd_at(1) = Scalar(2);
    CHECK(prod == expected);

    // [y1 + x2, y1] = [y1, y1] + [x2, y1] = x2 + y2
    Element left = basis(a, Parity::odd, 1) + basis(a, Parity::even, 2);
    Element sum = a.multiply(left, basis(a, Parity::odd, 1));
    Element expected2(2, 2);
    expected2.even_at(1) = Scalar(1);
    expected2.odd_at(1) = Scalar(1);
    CHECK(sum == expected2);
}

TEST_CASE("superidentity violations") {
    CHECK(SuperAlgebra::make(2, 3, {}).superidentity_violations().empty());

    // [x1, x1] = x1 fails: the residual on (x1, x1, x1) is x1 itself.
    Element v(1, 0);
    v.even_at(0) = Scalar(1);
    const SuperAlgebra bad = SuperAlgebra::make(1, 0, {{Parity::even, 1, Parity::even, 1, v}});
    auto violations = bad.superidentity_violations();
    REQUIRE(!violations.empty());
    CHECK(violations.front().residual == v);
    CHECK(violations.front().str() == "(x1, x1, x1)");

    CHECK(leib_22_a().is_leibniz());
    CHECK(leib_22_b().is_leibniz());
}

TEST_CASE("right annihilator") {
    // Abelian: everything annihilates.
    CHECK(SuperAlgebra::make(2, 3, {}).right_annihilator() == GradedSubspace::full(2, 3));

    // Chain algebra [e1,e1] = e2, [e2,e1] = e3: only the coefficient of e1
    // is constrained, so R = span{e2, e3}; hand-solved 9-equation system.
    const SuperAlgebra nf3 = null_filiform(3);
    const GradedSubspace r = nf3.right_annihilator();
    CHECK(r.dims() == std::pair<size_t, size_t>{2, 0});
    CHECK(r.contains_even({Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(r.contains_even({Scalar(0), Scalar(0), Scalar(1)}));
    CHECK_FALSE(r.contains_even({Scalar(1), Scalar(0), Scalar(0)}));

    // Leib_{1,m}: [y1, x1] = y2 kills x1; nothing multiplies any y from the
    // right, so R = (0 | m).
    const GradedSubspace r13 = leib_1m(3).right_annihilator();
    CHECK(r13.dims() == std::pair<size_t, size_t>{0, 3});
}

TEST_CASE("is_lie checks graded antisymmetry") {
    CHECK(SuperAlgebra::make(1, 2, {}).is_lie());
    CHECK_FALSE(null_filiform(2).is_lie());

    // The graded part of the family-L even algebra at n = 4:
    // [x2,x1] = x3, [x1,x2] = -x3.
    Element p(4, 0), q(4, 0);
    p.even_at(2) = Scalar(1);
    q.even_at(2) = Scalar(-1);
    const SuperAlgebra lie = SuperAlgebra::make(
        4, 0,
        {{Parity::even, 2, Parity::even, 1, p}, {Parity::even, 1, Parity::even, 2, q}});
    CHECK(lie.is_lie());
    CHECK(lie.is_leibniz());
}

TEST_CASE("change of basis") {
    const SuperAlgebra a = leib_1m(2);
    CHECK(a.change_basis(Matrix::identity(1), Matrix::identity(2)) == a);

    // Scaling x1 by 2 rescales [y1, x1] to 2 y2.
    Matrix p_even = Matrix::identity(1);
    p_even.at(0, 0) = Scalar(2);
    const SuperAlgebra scaled = a.change_basis(p_even, Matrix::identity(2));
    Element prod = scaled.multiply(basis(scaled, Parity::odd, 1), basis(scaled, Parity::even, 1));
    Element expected(1, 2);
    expected.odd_at(1) = Scalar(2);
    CHECK(prod == expected);

    Matrix singular(2, 2);
    singular.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(leib_22_a().change_basis(singular, Matrix::identity(2)), SingularMatrix);

    // Round trip through (P, P^-1) restores the table.
    Prng rng(17);
    const SuperAlgebra b = leib_22_b();
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix pe = random_invertible(rng, 2);
        const Matrix po = random_invertible(rng, 2);
        CHECK(b.change_basis(pe, po).change_basis(inverse(pe), inverse(po)) == b);
    }
}

TEST_CASE("table grading invariant holds on every stored product") {
    for (const SuperAlgebra& a : {leib_22_a(), leib_2m_a(5), null_filiform(4), thm21_mixed(2, 3)}) {
        for (const auto& [key, coords] : a.table()) {
            const Parity target = static_cast<Parity>(key[0]) ^ static_cast<Parity>(key[2]);
            const size_t dim = target == Parity::even ? a.even_dim() : a.odd_dim();
            CHECK(coords.size() == dim);
        }
    }
}

TEST_CASE("antisymmetrized products land in the right annihilator") {
    for (const SuperAlgebra& a :
         {leib_22_a(), leib_22_b(), leib_2m_a(3), leib_2m_b(3), thm21_mixed(2, 2)}) {
        REQUIRE(a.is_leibniz());
        const GradedSubspace r = a.right_annihilator();
        const int n = a.even_dim(), m = a.odd_dim();
        std::vector<std::pair<Parity, int>> all;
        for (int i = 1; i <= n; ++i) all.emplace_back(Parity::even, i);
        for (int j = 1; j <= m; ++j) all.emplace_back(Parity::odd, j);
        for (auto [pa, ia] : all)
            for (auto [pb, ib] : all) {
                const Element ab = a.product_of_basis(pa, ia, pb, ib);
                const Element ba = a.product_of_basis(pb, ib, pa, ia);
                const bool both_odd = pa == Parity::odd && pb == Parity::odd;
                const Element s = both_odd ? ab - ba : ab + ba;
                CHECK(r.contains_even(s.even()));
                CHECK(r.contains_odd(s.odd()));
            }
    }
}

TEST_CASE("the right annihilator is a two-sided ideal") {
    for (const SuperAlgebra& a : {leib_22_a(), leib_2m_b(3), thm21_mixed(1, 2), leib_n1(3, 1)}) {
        const GradedSubspace r = a.right_annihilator();
        const int n = a.even_dim(), m = a.odd_dim();
        auto to_element = [&](const Matrix& rows, size_t i, bool even_part) {
            Element e(n, m);
            for (size_t c = 0; c < rows.cols(); ++c) {
                if (even_part)
                    e.even_at(c) = rows.at(i, c);
                else
                    e.odd_at(c) = rows.at(i, c);
            }
            return e;
        };
        std::vector<Element> r_basis;
        for (size_t i = 0; i < r.even_basis().rows(); ++i)
            r_basis.push_back(to_element(r.even_basis(), i, true));
        for (size_t i = 0; i < r.odd_basis().rows(); ++i)
            r_basis.push_back(to_element(r.odd_basis(), i, false));
        std::vector<Element> ambient;
        for (int i = 1; i <= n; ++i) ambient.push_back(Element::basis(n, m, Parity::even, i));
        for (int j = 1; j <= m; ++j) ambient.push_back(Element::basis(n, m, Parity::odd, j));
        for (const Element& z : r_basis)
            for (const Element& b : ambient) {
                const Element left = a.multiply(b, z);
                const Element right = a.multiply(z, b);
                CHECK(r.contains_even(left.even()));
                CHECK(r.contains_odd(left.odd()));
                CHECK(r.contains_even(right.even()));
                CHECK(r.contains_odd(right.odd()));
            }
    }
}
