#include "doctest.h"
#include "lsa/corpus.hpp"
#include "lsa/errors.hpp"
#include "lsa/invariants.hpp"
#include "lsa/prng.hpp"

using namespace lsa;

namespace {

std::vector<std::pair<int, int>> series_dims(const SuperAlgebra& a) {
    std::vector<std::pair<int, int>> out;
    for (const GradedSubspace& t : central_series(a).terms) {
        auto [e, o] = t.dims();
        out.emplace_back(static_cast<int>(e), static_cast<int>(o));
    }
    return out;
}

// A valid Leibniz algebra whose series stabilizes: [x1, x2] = x1.
SuperAlgebra non_nilpotent() {
    Element v(2, 0);
    v.even_at(0) = Scalar(1);
    return SuperAlgebra::make(2, 0, {{Parity::even, 1, Parity::even, 2, v}});
}

}  // namespace

TEST_CASE("central series") {
    CHECK(series_dims(SuperAlgebra::make(1, 2, {})) ==
          std::vector<std::pair<int, int>>{{1, 2}, {0, 0}});

    // Hand-computed spans for the m = 3 chain: (1|3) > (0|2) > (0|1) > 0.
    CHECK(series_dims(leib_1m(3)) ==
          std::vector<std::pair<int, int>>{{1, 3}, {0, 2}, {0, 1}, {0, 0}});

    // Maximal-nilindex member at (2, 2): one dimension lost per step.
    std::vector<int> totals;
    for (auto [e, o] : series_dims(thm21_mixed(2, 2))) totals.push_back(e + o);
    CHECK(totals == std::vector<int>{4, 3, 2, 1, 0});
}

TEST_CASE("nilindex") {
    CHECK(nilindex(SuperAlgebra::make(1, 1, {})) == 2);
    CHECK(nilindex(null_filiform(4)) == 5);
    // Hand series for the first Leib_{2,2} table: L2 = {x2, y2}, L3 = {y2}.
    CHECK(nilindex(leib_22_a()) == 4);
    CHECK(nilindex(leib_22_b()) == 4);
    CHECK_THROWS_AS(nilindex(non_nilpotent()), NotNilpotent);
}

TEST_CASE("generator dims") {
    CHECK(generator_dims(null_filiform(4)) == std::pair<int, int>{1, 0});
    // e1 is odd and L^2 covers the rest.
    CHECK(generator_dims(thm21_mixed(2, 2)) == std::pair<int, int>{0, 1});
    // x1 = [y1, y1] lies in L^2, so only x2 and y1 generate.
    std::vector<Scalar> params = {Scalar(0), Scalar(0)};
    CHECK(generator_dims(family_L(4, params)) == std::pair<int, int>{1, 1});
}

TEST_CASE("right multiplication matrices") {
    const SuperAlgebra a = leib_1m(3);
    auto [m0_zero, m1_zero] = right_mult_matrices(a, Element(1, 3));
    CHECK(m0_zero.is_zero());
    CHECK(m1_zero.is_zero());

    auto [m0, m1] = right_mult_matrices(a, Element::basis(1, 3, Parity::even, 1));
    CHECK(m0.is_zero());  // 1x1
    Matrix shift(3, 3);
    shift.at(1, 0) = Scalar(1);
    shift.at(2, 1) = Scalar(1);
    CHECK(m1 == shift);

    auto [nf0, nf1] = right_mult_matrices(null_filiform(3), Element::basis(3, 0, Parity::even, 1));
    Matrix shift3(3, 3);
    shift3.at(1, 0) = Scalar(1);
    shift3.at(2, 1) = Scalar(1);
    CHECK(nf0 == shift3);

    Element odd(1, 3);
    odd.odd_at(0) = Scalar(1);
    CHECK_THROWS(right_mult_matrices(a, odd));
}

TEST_CASE("characteristic sequence") {
    // Abelian: every right multiplication vanishes.
    CHECK(characteristic_sequence(SuperAlgebra::make(2, 3, {})) ==
          CharSeq{Partition({1, 1}), Partition({1, 1, 1})});

    // Rank-sequence oracle for the 4-chain: ranks 3, 2, 1, 0 give (4).
    CHECK(characteristic_sequence(null_filiform(4)) == CharSeq{Partition({4}), Partition()});

    std::vector<Scalar> pl(3, Scalar(0));  // alpha4, alpha5, theta at n = 5
    CHECK(characteristic_sequence(family_L(5, pl)) ==
          CharSeq{Partition({4, 1}), Partition({4})});

    std::vector<Scalar> pe = {Scalar(0), Scalar(0), Scalar(0)};  // gamma, beta4, beta at n = 4
    CHECK(characteristic_sequence(family_E(4, pe)) ==
          CharSeq{Partition({4}), Partition({4, 1})});

    CHECK_THROWS_AS(characteristic_sequence(SuperAlgebra::make(0, 2, {})), UndefinedInvariant);
    CHECK(characteristic_sequence(leib_22_a()) == CharSeq{Partition({1, 1}), Partition({2})});
}

TEST_CASE("natural gradation") {
    // Abelian: gr is the algebra itself, all degrees 1.
    const NaturalGradation ga = natural_gradation(SuperAlgebra::make(3, 0, {}));
    CHECK(ga.algebra == SuperAlgebra::make(3, 0, {}));
    CHECK(ga.degrees == std::vector<int>{1, 1, 1});

    // The chain algebra is already naturally graded with deg x_i = i.
    const SuperAlgebra nf = null_filiform(3);
    const NaturalGradation gn = natural_gradation(nf);
    CHECK(gn.algebra == nf);
    CHECK(gn.degrees == std::vector<int>{1, 2, 3});

    // Non-Lie graded algebra from the generator products [x1,x1] = x4,
    // [x2,x1] = x3, [x1,x2] = -x3 + x4, [x2,x2] = x4 (n = 4): it is its own
    // gradation with degrees (1, 1, 2, 2) and keeps [x2,x1] = x3,
    // [x1,x2] = -x3 + x4.
    Element v11(4, 0), v21(4, 0), v12(4, 0), v22(4, 0);
    v11.even_at(3) = Scalar(1);
    v21.even_at(2) = Scalar(1);
    v12.even_at(2) = Scalar(-1);
    v12.even_at(3) = Scalar(1);
    v22.even_at(3) = Scalar(1);
    const SuperAlgebra eq4 = SuperAlgebra::make(4, 0,
                                                {{Parity::even, 1, Parity::even, 1, v11},
                                                 {Parity::even, 2, Parity::even, 1, v21},
                                                 {Parity::even, 1, Parity::even, 2, v12},
                                                 {Parity::even, 2, Parity::even, 2, v22}});
    REQUIRE(eq4.is_leibniz());
    const NaturalGradation g4 = natural_gradation(eq4);
    CHECK(g4.degrees == std::vector<int>{1, 1, 2, 2});
    CHECK(g4.algebra == eq4);
    CHECK_FALSE(g4.algebra.is_lie());

    CHECK_THROWS_AS(natural_gradation(non_nilpotent()), NotNilpotent);
    CHECK_THROWS(natural_gradation(leib_22_a()));  // needs m = 0

    // Structural laws on corpus even parts: products respect degrees and
    // the degree dims exhaust n.
    for (const CorpusMember& member : family_corpus_small()) {
        const SuperAlgebra even = member.algebra.even_part();
        const NaturalGradation g = natural_gradation(even);
        CHECK(static_cast<int>(g.degrees.size()) == even.even_dim());
        for (const auto& [key, coords] : g.algebra.table()) {
            const int du = g.degrees[key[1] - 1], dv = g.degrees[key[3] - 1];
            for (size_t t = 0; t < coords.size(); ++t)
                if (!coords[t].is_zero()) CHECK(g.degrees[t] == du + dv);
        }
    }
}

TEST_CASE("fingerprint") {
    const Fingerprint fp = fingerprint(SuperAlgebra::make(1, 1, {}));
    CHECK(fp.line() ==
          "series=[(1|1)];nilindex=2;charseq=(1|1);ann=(1|1);lie=true;gen=(1|1)");

    // Isomorphic copies agree.
    Prng rng(23);
    const SuperAlgebra a = leib_22_a();
    for (int trial = 0; trial < 5; ++trial) {
        Matrix pe(2, 2), po(2, 2);
        do {
            for (size_t i = 0; i < 2; ++i)
                for (size_t j = 0; j < 2; ++j) {
                    pe.at(i, j) = Scalar(Rational(rng.range(-2, 2)));
                    po.at(i, j) = Scalar(Rational(rng.range(-2, 2)));
                }
        } while (!is_invertible(pe) || !is_invertible(po));
        CHECK(fingerprint(a.change_basis(pe, po)) == fingerprint(a));
    }

    // The two Leib_{2,2} representatives collide on every tracked
    // invariant: record them as indistinguishable by fingerprint.
    CHECK(fingerprint(leib_22_a()) == fingerprint(leib_22_b()));

    // Non-nilpotent algebras keep a fingerprint.
    const Fingerprint nn = fingerprint(non_nilpotent());
    CHECK(!nn.nilindex.has_value());
    CHECK(nn.line().find("NOT_NILPOTENT") != std::string::npos);
}

TEST_CASE("series and nilindex bounds across the small corpus") {
    for (const CorpusMember& member : family_corpus_small()) {
        const CentralSeries cs = central_series(member.algebra);
        REQUIRE(cs.nilpotent);
        // Strict descent until zero.
        for (size_t i = 0; i + 1 < cs.terms.size(); ++i)
            CHECK(cs.terms[i + 1].total_dim() < cs.terms[i].total_dim());
        const int total = member.algebra.total_dim();
        CHECK(nilindex(member.algebra) <= total + 1);
        auto [ge, go] = generator_dims(member.algebra);
        CHECK((nilindex(member.algebra) == total + 1) == (ge + go == 1));
        if (member.expected_charseq) {
            const CharSeq cs2 = characteristic_sequence(member.algebra);
            CHECK(cs2.even_part.sum() == member.algebra.even_dim());
            CHECK(cs2.odd_part.sum() == member.algebra.odd_dim());
            CHECK(cs2 == *member.expected_charseq);
        }
    }
}
