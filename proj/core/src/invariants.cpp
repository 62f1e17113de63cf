#include "lsa/invariants.hpp"

#include <algorithm>

#include "lsa/errors.hpp"
#include "lsa/prng.hpp"

namespace lsa {

CentralSeries central_series(const SuperAlgebra& a) {
    const int n = a.even_dim(), m = a.odd_dim();
    CentralSeries cs;
    cs.terms.push_back(GradedSubspace::full(n, m));
    while (true) {
        const GradedSubspace& prev = cs.terms.back();
        if (prev.is_zero()) {
            cs.nilpotent = true;
            break;
        }
        // [L^k, L]: products of a basis of L^k with every ambient basis vector.
        Matrix even_rows(0, n), odd_rows(0, m);
        auto push = [&](const Element& w) {
            if (!w.even_part_zero()) even_rows.append_row(w.even());
            if (!w.odd_part_zero()) odd_rows.append_row(w.odd());
        };
        auto multiply_rows = [&](const Matrix& rows, Parity p) {
            for (size_t r = 0; r < rows.rows(); ++r) {
                Element u(n, m);
                for (size_t c = 0; c < rows.cols(); ++c) {
                    if (p == Parity::even)
                        u.even_at(c) = rows.at(r, c);
                    else
                        u.odd_at(c) = rows.at(r, c);
                }
                for (int i = 1; i <= n; ++i)
                    push(a.multiply(u, Element::basis(n, m, Parity::even, i)));
                for (int j = 1; j <= m; ++j)
                    push(a.multiply(u, Element::basis(n, m, Parity::odd, j)));
            }
        };
        multiply_rows(prev.even_basis(), Parity::even);
        multiply_rows(prev.odd_basis(), Parity::odd);
        GradedSubspace next = GradedSubspace::span(even_rows, odd_rows);
        if (next == prev) break;  // stabilized nonzero: not nilpotent
        cs.terms.push_back(std::move(next));
    }
    return cs;
}

int nilindex(const SuperAlgebra& a) {
    const CentralSeries cs = central_series(a);
    if (!cs.nilpotent) throw NotNilpotent("central series stabilizes at a nonzero term");
    return static_cast<int>(cs.terms.size());
}

std::pair<int, int> generator_dims(const SuperAlgebra& a) {
    const CentralSeries cs = central_series(a);
    const GradedSubspace& l2 = cs.terms.size() > 1 ? cs.terms[1] : cs.terms[0];
    auto [e2, o2] = l2.dims();
    return {a.even_dim() - static_cast<int>(e2), a.odd_dim() - static_cast<int>(o2)};
}

std::pair<Matrix, Matrix> right_mult_matrices(const SuperAlgebra& a, const Element& x) {
    if (!x.odd_part_zero()) throw Error("right multiplication operator needs a purely even x");
    const int n = a.even_dim(), m = a.odd_dim();
    Matrix m0(n, n), m1(m, m);
    for (int j = 1; j <= n; ++j) {
        const Element w = a.multiply(Element::basis(n, m, Parity::even, j), x);
        for (int i = 0; i < n; ++i) m0.at(i, j - 1) = w.even()[i];
    }
    for (int j = 1; j <= m; ++j) {
        const Element w = a.multiply(Element::basis(n, m, Parity::odd, j), x);
        for (int i = 0; i < m; ++i) m1.at(i, j - 1) = w.odd()[i];
    }
    return {m0, m1};
}

namespace {

// Candidates in L_0 \ L_0^2: basis vectors plus seeded random combinations.
std::vector<Element> charseq_candidates(const SuperAlgebra& a, int trials, uint64_t seed) {
    const int n = a.even_dim(), m = a.odd_dim();
    const GradedSubspace l0sq = a.even_square();
    std::vector<Element> out;
    for (int i = 1; i <= n; ++i) {
        Element e = Element::basis(n, m, Parity::even, i);
        if (!l0sq.contains_even(e.even())) out.push_back(e);
    }
    if (out.empty()) throw UndefinedInvariant("L_0 equals its square; no candidate generators");
    Prng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Element e(n, m);
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            for (int i = 0; i < n; ++i)
                e.even_at(i) = Scalar(Rational(rng.range(-3, 3), rng.range(1, 2)));
            found = !l0sq.contains_even(e.even());
        }
        // A random combination essentially never stays inside a proper
        // subspace 32 times in a row; fall back to a known generator.
        out.push_back(found ? e : out.front());
    }
    return out;
}

}  // namespace

CharSeq characteristic_sequence(const SuperAlgebra& a, int trials, uint64_t seed) {
    if (a.even_dim() == 0)
        throw UndefinedInvariant("characteristic sequence requires a nonzero even part");
    std::optional<Partition> best_even, best_odd;
    for (const Element& x : charseq_candidates(a, trials, seed)) {
        auto [m0, m1] = right_mult_matrices(a, x);
        Partition c0 = jordan_partition(m0);
        Partition c1 = jordan_partition(m1);
        if (!best_even || *best_even < c0) best_even = std::move(c0);
        if (!best_odd || *best_odd < c1) best_odd = std::move(c1);
    }
    return {*best_even, *best_odd};
}

NaturalGradation natural_gradation(const SuperAlgebra& a) {
    if (a.odd_dim() != 0) throw Error("natural gradation is defined on even algebras (m = 0)");
    const int n = a.even_dim();
    const CentralSeries cs = central_series(a);
    if (!cs.nilpotent) throw NotNilpotent("natural gradation requires a nilpotent algebra");

    // Representatives of A^i / A^{i+1}: extend an echelon basis of A^{i+1}
    // by rows of A^i that raise the rank, taken in pivot order.
    NaturalGradation out{SuperAlgebra::make(n, 0, {}), {}, Matrix(0, n)};
    for (size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        const Matrix& big = cs.terms[i].even_basis();
        Matrix acc = cs.terms[i + 1].even_basis();  // echelon, no zero rows
        for (size_t r = 0; r < big.rows(); ++r) {
            Matrix trial = acc;
            trial.append_row(big.row(r));
            if (rank(trial) > acc.rows()) {
                RrefResult red = rref(trial);
                Matrix stripped(0, acc.cols());
                for (size_t q = 0; q < red.rank; ++q) stripped.append_row(red.mat.row(q));
                acc = std::move(stripped);
                out.representatives.append_row(big.row(r));
                out.degrees.push_back(static_cast<int>(i) + 1);
            }
        }
    }

    // Induced product: express [u, v] in the representative basis and keep
    // the degree-(deg u + deg v) coordinates.
    std::vector<TableEntry> entries;
    for (int iu = 0; iu < n; ++iu)
        for (int iv = 0; iv < n; ++iv) {
            Element u(n, 0), v(n, 0);
            for (int c = 0; c < n; ++c) {
                u.even_at(c) = out.representatives.at(iu, c);
                v.even_at(c) = out.representatives.at(iv, c);
            }
            const Element w = a.multiply(u, v);
            if (w.is_zero()) continue;
            auto coords = coordinates_in_row_span(out.representatives, w.even());
            if (!coords) throw Error("gradation representative basis does not span");
            const int target_degree = out.degrees[iu] + out.degrees[iv];
            Element value(n, 0);
            bool nonzero = false;
            for (int t = 0; t < n; ++t) {
                if (out.degrees[t] != target_degree || (*coords)[t].is_zero()) continue;
                value.even_at(t) = (*coords)[t];
                nonzero = true;
            }
            if (nonzero)
                entries.push_back({Parity::even, iu + 1, Parity::even, iv + 1, value});
        }
    out.algebra = SuperAlgebra::make(n, 0, entries);
    return out;
}

std::string Fingerprint::line() const {
    std::string s = "series=[";
    for (size_t i = 0; i < series_dims.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(series_dims[i].first) + "|" +
             std::to_string(series_dims[i].second) + ")";
    }
    s += "];nilindex=";
    s += nilindex ? std::to_string(*nilindex) : "NOT_NILPOTENT";
    s += ";charseq=";
    s += charseq ? charseq->str() : "undefined";
    s += ";ann=(" + std::to_string(annihilator_dims.first) + "|" +
         std::to_string(annihilator_dims.second) + ")";
    s += ";lie=";
    s += lie ? "true" : "false";
    s += ";gen=(" + std::to_string(generator_dims.first) + "|" +
         std::to_string(generator_dims.second) + ")";
    return s;
}

Fingerprint fingerprint(const SuperAlgebra& a, int trials, uint64_t seed) {
    Fingerprint fp;
    const CentralSeries cs = central_series(a);
    for (const GradedSubspace& t : cs.terms) {
        auto [e, o] = t.dims();
        if (e + o > 0) fp.series_dims.emplace_back(static_cast<int>(e), static_cast<int>(o));
    }
    if (cs.nilpotent) fp.nilindex = static_cast<int>(cs.terms.size());
    try {
        fp.charseq = characteristic_sequence(a, trials, seed);
    } catch (const UndefinedInvariant&) {
    } catch (const NotNilpotent&) {
    }
    auto [ae, ao] = a.right_annihilator().dims();
    fp.annihilator_dims = {static_cast<int>(ae), static_cast<int>(ao)};
    fp.lie = a.is_lie();
    std::pair<size_t, size_t> l2{0, 0};
    if (cs.terms.size() > 1) l2 = cs.terms[1].dims();
    fp.generator_dims = {a.even_dim() - static_cast<int>(l2.first),
                         a.odd_dim() - static_cast<int>(l2.second)};
    return fp;
}

}  // namespace lsa
