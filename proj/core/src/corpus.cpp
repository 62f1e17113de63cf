#include "lsa/corpus.hpp"

#include "lsa/prng.hpp"

namespace lsa {

namespace {

const std::vector<Scalar>& grid_values() {
    static const std::vector<Scalar> values = {Scalar(0), Scalar(1), Scalar(-1),
                                               Scalar(Rational(1, 2))};
    return values;
}

std::string params_str(const std::vector<Scalar>& params) {
    std::string s = "(";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += params[i].str();
    }
    return s + ")";
}

// Full grid for arity <= 4, otherwise `samples` seeded draws.
std::vector<std::vector<Scalar>> parameter_sets(int arity, int samples, uint64_t seed) {
    const auto& vals = grid_values();
    std::vector<std::vector<Scalar>> out;
    if (arity <= 4) {
        size_t count = 1;
        for (int i = 0; i < arity; ++i) count *= vals.size();
        for (size_t idx = 0; idx < count; ++idx) {
            std::vector<Scalar> p;
            size_t rest = idx;
            for (int i = 0; i < arity; ++i) {
                p.push_back(vals[rest % vals.size()]);
                rest /= vals.size();
            }
            out.push_back(std::move(p));
        }
        return out;
    }
    Prng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<Scalar> p;
        for (int i = 0; i < arity; ++i) p.push_back(vals[rng.below(vals.size())]);
        out.push_back(std::move(p));
    }
    return out;
}

CharSeq filiform_charseq(int n, int m) {
    // (n-1, 1 | m)
    std::vector<int> even = {n - 1};
    if (n >= 2) even.push_back(1);
    return {Partition(even), m > 0 ? Partition({m}) : Partition()};
}

CharSeq tail_charseq(int n, int m) {
    // (n | m-1, 1)
    std::vector<int> odd = {m - 1};
    if (m >= 2) odd.push_back(1);
    return {Partition({n}), Partition(odd)};
}

}  // namespace

std::vector<CorpusMember> family_corpus(int samples, uint64_t seed) {
    std::vector<CorpusMember> out;
    auto add = [&](const std::string& name, FamilyTag tag, SuperAlgebra a, int expected_ni,
                   std::optional<CharSeq> cs) {
        out.push_back({name, tag, std::move(a), expected_ni, std::move(cs)});
    };

    for (int n = 1; n <= 6; ++n)
        add("null_filiform(" + std::to_string(n) + ")", FamilyTag::null_filiform, null_filiform(n),
            n + 1, n >= 1 ? std::optional<CharSeq>({Partition({n}), Partition()}) : std::nullopt);
    for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}})
        add("thm21_mixed(" + std::to_string(n) + "," + std::to_string(m) + ")",
            FamilyTag::thm21_mixed, thm21_mixed(n, m), n + m + 1, std::nullopt);
    for (int m = 1; m <= 5; ++m)
        add("leib_1m(m=" + std::to_string(m) + ")", FamilyTag::leib_1m, leib_1m(m), m + 1,
            std::nullopt);
    for (int n = 2; n <= 5; ++n)
        for (int alpha : {0, 1})
            add("leib_n1(n=" + std::to_string(n) + ",alpha=" + std::to_string(alpha) + ")",
                FamilyTag::leib_n1, leib_n1(n, alpha), n + 1, std::nullopt);
    add("leib_22_a", FamilyTag::leib_22_a, leib_22_a(), 4, std::nullopt);
    add("leib_22_b", FamilyTag::leib_22_b, leib_22_b(), 4, std::nullopt);
    for (int m : {3, 5}) {
        add("leib_2m_a(m=" + std::to_string(m) + ")", FamilyTag::leib_2m_a, leib_2m_a(m), m + 2,
            std::nullopt);
        add("leib_2m_b(m=" + std::to_string(m) + ")", FamilyTag::leib_2m_b, leib_2m_b(m), m + 2,
            std::nullopt);
    }

    struct Parametric {
        FamilyTag tag;
        int n_lo, n_hi;
    };
    const Parametric families[] = {
        {FamilyTag::fam_l, 3, 6}, {FamilyTag::fam_g, 3, 6}, {FamilyTag::fam_m, 3, 6},
        {FamilyTag::fam_h, 3, 6}, {FamilyTag::fam_e_odd, 3, 5}, {FamilyTag::fam_e_even, 2, 4},
        {FamilyTag::fam_f, 2, 5},
    };
    for (const Parametric& fam : families) {
        for (int n = fam.n_lo; n <= fam.n_hi; ++n) {
            if (fam.tag == FamilyTag::fam_e_odd && n % 2 == 0) continue;
            if (fam.tag == FamilyTag::fam_e_even && n % 2 == 1) continue;
            int m = 0;
            CharSeq cs{Partition(), Partition()};
            switch (fam.tag) {
                case FamilyTag::fam_l:
                case FamilyTag::fam_g:
                    m = n - 1;
                    cs = filiform_charseq(n, m);
                    break;
                case FamilyTag::fam_m:
                case FamilyTag::fam_h:
                    m = n;
                    cs = filiform_charseq(n, m);
                    break;
                case FamilyTag::fam_e_odd:
                case FamilyTag::fam_e_even:
                    m = n + 1;
                    cs = tail_charseq(n, m);
                    break;
                default:
                    m = n + 2;
                    cs = tail_charseq(n, m);
                    break;
            }
            const int arity = family_arity(fam.tag, n, m);
            for (const auto& params : parameter_sets(arity, samples, seed)) {
                add(family_tag_name(fam.tag) + "(n=" + std::to_string(n) + ")" +
                        params_str(params),
                    fam.tag, make_family(fam.tag, n, m, params), n + m, cs);
            }
        }
    }
    return out;
}

std::vector<CorpusMember> family_corpus_small() {
    std::vector<CorpusMember> out;
    auto add = [&](const std::string& name, FamilyTag tag, SuperAlgebra a, int ni,
                   std::optional<CharSeq> cs) {
        out.push_back({name, tag, std::move(a), ni, std::move(cs)});
    };
    const Scalar h(Rational(1, 2));
    add("null_filiform(4)", FamilyTag::null_filiform, null_filiform(4), 5,
        CharSeq{Partition({4}), Partition()});
    add("thm21_mixed(2,3)", FamilyTag::thm21_mixed, thm21_mixed(2, 3), 6, std::nullopt);
    add("leib_1m(m=3)", FamilyTag::leib_1m, leib_1m(3), 4, std::nullopt);
    add("leib_n1(n=3,alpha=1)", FamilyTag::leib_n1, leib_n1(3, 1), 4, std::nullopt);
    add("leib_22_a", FamilyTag::leib_22_a, leib_22_a(), 4, std::nullopt);
    add("leib_2m_a(m=3)", FamilyTag::leib_2m_a, leib_2m_a(3), 5, std::nullopt);
    add("L(4)(1,1/2)", FamilyTag::fam_l, family_L(4, std::vector<Scalar>{Scalar(1), h}), 7,
        filiform_charseq(4, 3));
    add("G(4)(-1,1)", FamilyTag::fam_g, family_G(4, std::vector<Scalar>{Scalar(-1), Scalar(1)}), 7,
        filiform_charseq(4, 3));
    add("M(4)(1,1,1/2)", FamilyTag::fam_m,
        family_M(4, std::vector<Scalar>{Scalar(1), Scalar(1), h}), 8, filiform_charseq(4, 4));
    add("H(4)(1,-1)", FamilyTag::fam_h, family_H(4, std::vector<Scalar>{Scalar(1), Scalar(-1)}), 8,
        filiform_charseq(4, 4));
    add("E(3)(1,1,0)", FamilyTag::fam_e_odd,
        family_E(3, std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(0)}), 7, tail_charseq(3, 4));
    add("F(3)(1)", FamilyTag::fam_f, family_F(3, std::vector<Scalar>{Scalar(1)}), 8,
        tail_charseq(3, 5));
    return out;
}

}  // namespace lsa
