#include "lsa/families.hpp"

#include <algorithm>
#include <map>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

const Rational kHalf(1, 2);

/// Accumulating table builder with 1-based indices matching the classical
/// bracket-table notation. Out-of-range targets are transcription bugs and
/// throw immediately.
class Builder {
  public:
    Builder(int n, int m) : n_(n), m_(m) {}

    void add(Parity pa, int ia, Parity pb, int ib, Parity pt, int it, const Scalar& c) {
        check(pa, ia);
        check(pb, ib);
        check(pt, it);
        if ((pa ^ pb) != pt)
            throw FamilyError("bracket [" + basis_token(pa, ia) + ", " + basis_token(pb, ib) +
                              "] has target of the wrong parity");
        if (c.is_zero()) return;
        Element& v = acc_[{static_cast<int>(pa), ia, static_cast<int>(pb), ib}];
        if (v.even_dim() == 0 && v.odd_dim() == 0) v = Element(n_, m_);
        if (pt == Parity::even)
            v.even_at(it - 1) += c;
        else
            v.odd_at(it - 1) += c;
    }

    SuperAlgebra build() const {
        std::vector<TableEntry> entries;
        for (const auto& [key, value] : acc_)
            entries.push_back({static_cast<Parity>(key[0]), key[1], static_cast<Parity>(key[2]),
                               key[3], value});
        return SuperAlgebra::make(n_, m_, entries);
    }

  private:
    void check(Parity p, int i) const {
        const int dim = p == Parity::even ? n_ : m_;
        if (i < 1 || i > dim)
            throw FamilyError("index " + basis_token(p, i) + " outside dims (" +
                              std::to_string(n_) + ", " + std::to_string(m_) + ")");
    }

    int n_, m_;
    std::map<SuperAlgebra::Key, Element> acc_;
};

constexpr Parity E = Parity::even;
constexpr Parity O = Parity::odd;

void require(bool ok, const std::string& msg) {
    if (!ok) throw FamilyError(msg);
}

void require_arity(std::span<const Scalar> params, int expected, const std::string& family) {
    if (static_cast<int>(params.size()) != expected)
        throw FamilyError(family + " takes " + std::to_string(expected) +
                          " parameters here, got " + std::to_string(params.size()));
}

Scalar sroot(long m_root, long t) { return Scalar::root_of_unity(static_cast<unsigned>(t), m_root); }

}  // namespace

std::string family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::null_filiform: return "NULL_FILIFORM";
        case FamilyTag::thm21_mixed: return "THM21_MIXED";
        case FamilyTag::leib_1m: return "LEIB_1M";
        case FamilyTag::leib_n1: return "LEIB_N1";
        case FamilyTag::leib_22_a: return "LEIB_22_A";
        case FamilyTag::leib_22_b: return "LEIB_22_B";
        case FamilyTag::leib_2m_a: return "LEIB_2M_A";
        case FamilyTag::leib_2m_b: return "LEIB_2M_B";
        case FamilyTag::fam_l: return "L";
        case FamilyTag::fam_g: return "G";
        case FamilyTag::fam_m: return "M";
        case FamilyTag::fam_h: return "H";
        case FamilyTag::fam_e_odd: return "E_ODD";
        case FamilyTag::fam_e_even: return "E_EVEN";
        case FamilyTag::fam_f: return "F";
    }
    throw FamilyError("unknown family tag");
}

FamilyTag family_tag_from_name(const std::string& name) {
    static const std::map<std::string, FamilyTag> lookup = {
        {"NULL_FILIFORM", FamilyTag::null_filiform},
        {"THM21_MIXED", FamilyTag::thm21_mixed},
        {"LEIB_1M", FamilyTag::leib_1m},
        {"LEIB_N1", FamilyTag::leib_n1},
        {"LEIB_22_A", FamilyTag::leib_22_a},
        {"LEIB_22_B", FamilyTag::leib_22_b},
        {"LEIB_2M_A", FamilyTag::leib_2m_a},
        {"LEIB_2M_B", FamilyTag::leib_2m_b},
        {"L", FamilyTag::fam_l},
        {"G", FamilyTag::fam_g},
        {"M", FamilyTag::fam_m},
        {"H", FamilyTag::fam_h},
        {"E_ODD", FamilyTag::fam_e_odd},
        {"E_EVEN", FamilyTag::fam_e_even},
        {"F", FamilyTag::fam_f},
    };
    auto it = lookup.find(name);
    if (it == lookup.end()) throw FamilyError("unknown family tag '" + name + "'");
    return it->second;
}

SuperAlgebra null_filiform(int n) {
    require(n >= 1, "null_filiform needs n >= 1");
    Builder b(n, 0);
    for (int i = 1; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    return b.build();
}

SuperAlgebra thm21_mixed(int n, int m) {
    require(m >= 1 && (m == n || m == n + 1), "thm21_mixed needs m = n or m = n + 1");
    const int total = n + m;
    // e_i with odd i lies in the odd part; translate to graded coordinates.
    auto parity_of = [](int i) { return i % 2 == 1 ? O : E; };
    auto graded_index = [](int i) { return i % 2 == 1 ? (i + 1) / 2 : i / 2; };
    Builder b(n, m);
    auto add = [&](int i, int j, int t, long c) {
        b.add(parity_of(i), graded_index(i), parity_of(j), graded_index(j), parity_of(t),
              graded_index(t), Scalar(c));
    };
    for (int i = 1; i <= total - 1; ++i) add(i, 1, i + 1, 1);
    if (total >= 2)
        for (int i = 1; i <= total - 2; ++i) add(i, 2, i + 2, 2);
    return b.build();
}

SuperAlgebra leib_1m(int m) {
    require(m >= 1, "leib_1m needs m >= 1");
    Builder b(1, m);
    for (int i = 1; i <= m - 1; ++i) b.add(O, i, E, 1, O, i + 1, Scalar(1));
    return b.build();
}

SuperAlgebra leib_n1(int n, int alpha) {
    require(n >= 2, "leib_n1 needs n >= 2");
    require(alpha == 0 || alpha == 1, "leib_n1 needs alpha in {0, 1}");
    Builder b(n, 1);
    for (int i = 1; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    if (alpha) b.add(O, 1, O, 1, E, n, Scalar(1));
    return b.build();
}

SuperAlgebra leib_22_a() {
    Builder b(2, 2);
    b.add(O, 1, E, 1, O, 2, Scalar(1));
    b.add(E, 1, O, 1, O, 2, Scalar(kHalf));
    b.add(E, 2, O, 1, O, 2, Scalar(1));
    b.add(O, 1, E, 2, O, 2, Scalar(2));
    b.add(O, 1, O, 1, E, 2, Scalar(1));
    return b.build();
}

SuperAlgebra leib_22_b() {
    Builder b(2, 2);
    b.add(O, 1, E, 1, O, 2, Scalar(1));
    b.add(E, 2, O, 1, O, 2, Scalar(1));
    b.add(O, 1, E, 2, O, 2, Scalar(2));
    b.add(O, 1, O, 1, E, 2, Scalar(1));
    return b.build();
}

namespace {
// Shared odd-odd block of the two Leib_{2,m} variants: [y_i, y_{m+1-i}] =
// (-1)^{i+1} x_2 over the full index range (the shorter displayed range
// leaves the superidentity unsatisfiable; the two orderings agree for odd m).
void add_leib_2m_odd_products(Builder& b, int m) {
    for (int i = 1; i <= m; ++i)
        b.add(O, i, O, m + 1 - i, E, 2, Scalar(i % 2 == 1 ? 1 : -1));
}
}  // namespace

SuperAlgebra leib_2m_a(int m) {
    require(m >= 3 && m % 2 == 1, "leib_2m_a needs odd m >= 3");
    Builder b(2, m);
    b.add(E, 1, E, 1, E, 2, Scalar(1));
    for (int i = 1; i <= m - 1; ++i) {
        b.add(O, i, E, 1, O, i + 1, Scalar(1));
        b.add(E, 1, O, i, O, i + 1, Scalar(-1));
    }
    add_leib_2m_odd_products(b, m);
    return b.build();
}

SuperAlgebra leib_2m_b(int m) {
    require(m >= 3 && m % 2 == 1, "leib_2m_b needs odd m >= 3");
    // [y_i, x_1] and [x_1, y_i] must carry opposite signs for the
    // superidentity to close; the variant keeps the minus on [y_i, x_1].
    Builder b(2, m);
    for (int i = 1; i <= m - 1; ++i) {
        b.add(O, i, E, 1, O, i + 1, Scalar(-1));
        b.add(E, 1, O, i, O, i + 1, Scalar(1));
    }
    add_leib_2m_odd_products(b, m);
    return b.build();
}

SuperAlgebra family_L(int n, std::span<const Scalar> params) {
    require(n >= 3, "family L needs n >= 3");
    require_arity(params, n - 2, "family L");
    auto alpha = [&](int k) { return params[k - 4]; };  // k in 4..n
    const Scalar& theta = params[n - 3];
    const int m = n - 1;
    Builder b(n, m);
    b.add(E, 1, E, 1, E, 3, Scalar(1));
    for (int i = 2; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    for (int j = 1; j <= n - 2; ++j) b.add(O, j, E, 1, O, j + 1, Scalar(1));
    b.add(E, 1, O, 1, O, 2, Scalar(kHalf));
    for (int i = 2; i <= n - 1; ++i) b.add(E, i, O, 1, O, i, Scalar(kHalf));
    b.add(O, 1, O, 1, E, 1, Scalar(1));
    for (int j = 2; j <= n - 1; ++j) b.add(O, j, O, 1, E, j + 1, Scalar(1));
    for (int k = 4; k <= n - 1; ++k) b.add(E, 1, E, 2, E, k, alpha(k));
    b.add(E, 1, E, 2, E, n, theta);
    for (int j = 2; j <= n - 2; ++j)
        for (int k = 4; k <= n + 2 - j; ++k) b.add(E, j, E, 2, E, k + j - 2, alpha(k));
    for (int k = 4; k <= n - 1; ++k) b.add(O, 1, E, 2, O, k - 1, alpha(k));
    b.add(O, 1, E, 2, O, n - 1, theta);
    for (int j = 2; j <= n - 3; ++j)
        for (int k = 4; k <= n + 1 - j; ++k) b.add(O, j, E, 2, O, k + j - 2, alpha(k));
    return b.build();
}

SuperAlgebra family_G(int n, std::span<const Scalar> params) {
    require(n >= 3, "family G needs n >= 3");
    require_arity(params, n - 2, "family G");
    auto beta = [&](int k) { return params[k - 4]; };
    const Scalar& gamma = params[n - 3];
    const int m = n - 1;
    Builder b(n, m);
    b.add(E, 1, E, 1, E, 3, Scalar(1));
    for (int i = 3; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    for (int j = 1; j <= n - 2; ++j) b.add(O, j, E, 1, O, j + 1, Scalar(1));
    for (int k = 4; k <= n; ++k) b.add(E, 1, E, 2, E, k, beta(k));
    b.add(E, 2, E, 2, E, n, gamma);
    for (int j = 3; j <= n - 2; ++j)
        for (int k = 4; k <= n + 2 - j; ++k) b.add(E, j, E, 2, E, k + j - 2, beta(k));
    b.add(O, 1, O, 1, E, 1, Scalar(1));
    for (int j = 2; j <= n - 1; ++j) b.add(O, j, O, 1, E, j + 1, Scalar(1));
    b.add(E, 1, O, 1, O, 2, Scalar(kHalf));
    for (int i = 3; i <= n - 1; ++i) b.add(E, i, O, 1, O, i, Scalar(kHalf));
    for (int j = 1; j <= n - 3; ++j)
        for (int k = 4; k <= n + 1 - j; ++k) b.add(O, j, E, 2, O, k + j - 2, beta(k));
    return b.build();
}

SuperAlgebra family_M(int n, std::span<const Scalar> params) {
    require(n >= 3, "family M needs n >= 3");
    require_arity(params, n - 1, "family M");
    auto alpha = [&](int k) { return params[k - 4]; };
    const Scalar& theta = params[n - 3];
    const Scalar& tau = params[n - 2];
    const int m = n;
    Builder b(n, m);
    b.add(E, 1, E, 1, E, 3, Scalar(1));
    for (int i = 2; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    for (int j = 1; j <= n - 1; ++j) b.add(O, j, E, 1, O, j + 1, Scalar(1));
    b.add(E, 1, O, 1, O, 2, Scalar(kHalf));
    for (int i = 2; i <= n; ++i) b.add(E, i, O, 1, O, i, Scalar(kHalf));
    b.add(O, 1, O, 1, E, 1, Scalar(1));
    for (int j = 2; j <= n - 1; ++j) b.add(O, j, O, 1, E, j + 1, Scalar(1));
    // [x_1, x_2] and [x_2, x_2] share the theta-tail pattern; the recursion
    // [x_{j+1}, x_2] = [[x_j, x_1], x_2] then reproduces the j >= 3 lines.
    for (int j = 1; j <= 2; ++j) {
        for (int k = 4; k <= n - 1; ++k) b.add(E, j, E, 2, E, k, alpha(k));
        b.add(E, j, E, 2, E, n, theta);
    }
    for (int j = 3; j <= n - 2; ++j)
        for (int k = 4; k <= n + 2 - j; ++k) b.add(E, j, E, 2, E, k + j - 2, alpha(k));
    for (int k = 4; k <= n - 1; ++k) b.add(O, 1, E, 2, O, k - 1, alpha(k));
    b.add(O, 1, E, 2, O, n - 1, theta);
    b.add(O, 1, E, 2, O, n, tau);
    for (int k = 4; k <= n - 1; ++k) b.add(O, 2, E, 2, O, k, alpha(k));
    b.add(O, 2, E, 2, O, n, theta);
    for (int j = 3; j <= n - 2; ++j)
        for (int k = 4; k <= n + 2 - j; ++k) b.add(O, j, E, 2, O, k + j - 2, alpha(k));
    return b.build();
}

SuperAlgebra family_H(int n, std::span<const Scalar> params) {
    require(n >= 3, "family H needs n >= 3");
    require_arity(params, n - 2, "family H");
    auto beta = [&](int k) { return params[k - 4]; };
    const Scalar& delta = params[n - 3];
    const int m = n;
    Builder b(n, m);
    b.add(E, 1, E, 1, E, 3, Scalar(1));
    for (int i = 3; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    // The odd chain runs to y_n and [x_i, y_1] reaches i = n: both are
    // forced by the superidentity together with [y_{n-1}, y_1] = x_n being
    // out of range, and they are what pushes the nilindex to n + m.
    for (int j = 1; j <= n - 1; ++j) b.add(O, j, E, 1, O, j + 1, Scalar(1));
    for (int k = 4; k <= n; ++k) b.add(E, 1, E, 2, E, k, beta(k));
    for (int j = 3; j <= n - 2; ++j)
        for (int k = 4; k <= n + 2 - j; ++k) b.add(E, j, E, 2, E, k + j - 2, beta(k));
    b.add(O, 1, O, 1, E, 1, Scalar(1));
    for (int j = 2; j <= n - 1; ++j) b.add(O, j, O, 1, E, j + 1, Scalar(1));
    b.add(E, 1, O, 1, O, 2, Scalar(kHalf));
    for (int i = 3; i <= n; ++i) b.add(E, i, O, 1, O, i, Scalar(kHalf));
    for (int k = 4; k <= n; ++k) b.add(O, 1, E, 2, O, k - 1, beta(k));
    b.add(O, 1, E, 2, O, n, delta);
    for (int j = 2; j <= n - 2; ++j)
        for (int k = 4; k <= n + 2 - j; ++k) b.add(O, j, E, 2, O, k + j - 2, beta(k));
    return b.build();
}

SuperAlgebra family_E(int n, std::span<const Scalar> params) {
    require(n >= 2, "family E needs n >= 2");
    const int lo = (n + 4) / 2;
    const int arity = 2 + std::max(0, n - lo + 1);
    require_arity(params, arity, "family E");
    const Scalar& gamma = params[0];
    auto beta_k = [&](int k) { return params[1 + (k - lo)]; };  // k in lo..n
    const Scalar& beta = params[arity - 1];
    const int m = n + 1;
    Builder b(n, m);
    for (int i = 1; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    for (int j = 1; j <= n - 1; ++j) b.add(O, j, E, 1, O, j + 1, Scalar(1));
    for (int i = 1; i <= n - 1; ++i) b.add(E, i, O, 1, O, i + 1, Scalar(kHalf));
    for (int j = 1; j <= n; ++j) b.add(O, j, O, 1, E, j, Scalar(1));
    b.add(O, n + 1, O, n + 1, E, n, gamma);
    for (int i = 1; i <= (n - 1) / 2; ++i)
        for (int k = lo; k <= n + 1 - i; ++k) b.add(E, i, O, n + 1, O, k - 1 + i, beta_k(k));
    for (int k = lo; k <= n; ++k) b.add(O, 1, O, n + 1, E, k - 1, Scalar(-2) * beta_k(k));
    b.add(O, 1, O, n + 1, E, n, beta);
    for (int j = 2; j <= (n + 1) / 2; ++j)
        for (int k = lo; k <= n + 2 - j; ++k)
            b.add(O, j, O, n + 1, E, k - 2 + j, Scalar(-2) * beta_k(k));
    return b.build();
}

SuperAlgebra family_F(int n, std::span<const Scalar> params) {
    require(n >= 2, "family F needs n >= 2");
    const int lo = (n + 5) / 2;
    const int arity = n + 2 - lo;
    require_arity(params, arity, "family F");
    auto beta_k = [&](int k) { return params[k - lo]; };  // k in lo..n+1
    const int m = n + 2;
    Builder b(n, m);
    for (int i = 1; i <= n - 1; ++i) b.add(E, i, E, 1, E, i + 1, Scalar(1));
    for (int j = 1; j <= n; ++j) b.add(O, j, E, 1, O, j + 1, Scalar(1));
    for (int i = 1; i <= n; ++i) b.add(E, i, O, 1, O, i + 1, Scalar(kHalf));
    for (int j = 1; j <= n; ++j) b.add(O, j, O, 1, E, j, Scalar(1));
    for (int i = 1; i <= n / 2; ++i)
        for (int k = lo; k <= n + 2 - i; ++k) b.add(E, i, O, n + 2, O, k - 1 + i, beta_k(k));
    for (int j = 1; j <= n / 2; ++j)
        for (int k = lo; k <= n + 2 - j; ++k)
            b.add(O, j, O, n + 2, E, k - 2 + j, Scalar(-2) * beta_k(k));
    return b.build();
}

int family_arity(FamilyTag t, int n, int /*m*/) {
    switch (t) {
        case FamilyTag::null_filiform:
        case FamilyTag::thm21_mixed:
        case FamilyTag::leib_1m:
        case FamilyTag::leib_22_a:
        case FamilyTag::leib_22_b:
        case FamilyTag::leib_2m_a:
        case FamilyTag::leib_2m_b:
            return 0;
        case FamilyTag::leib_n1:
            return 1;
        case FamilyTag::fam_l:
        case FamilyTag::fam_g:
            return n - 2;
        case FamilyTag::fam_m:
            return n - 1;
        case FamilyTag::fam_h:
            return n - 2;
        case FamilyTag::fam_e_odd:
        case FamilyTag::fam_e_even:
            return 2 + std::max(0, n - (n + 4) / 2 + 1);
        case FamilyTag::fam_f:
            return n + 2 - (n + 5) / 2;
    }
    throw FamilyError("unknown family tag");
}

SuperAlgebra make_family(FamilyTag t, int n, int m, std::span<const Scalar> params) {
    auto require_m = [&](int expected) {
        require(m == expected, family_tag_name(t) + " has odd dimension m = " +
                                   std::to_string(expected) + " at n = " + std::to_string(n));
    };
    switch (t) {
        case FamilyTag::null_filiform:
            require_m(0);
            require_arity(params, 0, "NULL_FILIFORM");
            return null_filiform(n);
        case FamilyTag::thm21_mixed:
            require_arity(params, 0, "THM21_MIXED");
            return thm21_mixed(n, m);
        case FamilyTag::leib_1m:
            require(n == 1, "LEIB_1M needs n = 1");
            require_arity(params, 0, "LEIB_1M");
            return leib_1m(m);
        case FamilyTag::leib_n1: {
            require_m(1);
            require_arity(params, 1, "LEIB_N1");
            const Scalar& a = params[0];
            int alpha = a == Scalar(1) ? 1 : (a.is_zero() ? 0 : -1);
            require(alpha >= 0, "LEIB_N1 needs alpha in {0, 1}");
            return leib_n1(n, alpha);
        }
        case FamilyTag::leib_22_a:
            require(n == 2 && m == 2, "LEIB_22_A has dims (2, 2)");
            return leib_22_a();
        case FamilyTag::leib_22_b:
            require(n == 2 && m == 2, "LEIB_22_B has dims (2, 2)");
            return leib_22_b();
        case FamilyTag::leib_2m_a:
            require(n == 2, "LEIB_2M_A needs n = 2");
            return leib_2m_a(m);
        case FamilyTag::leib_2m_b:
            require(n == 2, "LEIB_2M_B needs n = 2");
            return leib_2m_b(m);
        case FamilyTag::fam_l:
            require_m(n - 1);
            return family_L(n, params);
        case FamilyTag::fam_g:
            require_m(n - 1);
            return family_G(n, params);
        case FamilyTag::fam_m:
            require_m(n);
            return family_M(n, params);
        case FamilyTag::fam_h:
            require_m(n);
            return family_H(n, params);
        case FamilyTag::fam_e_odd:
            require(n % 2 == 1, "E_ODD needs odd n");
            require_m(n + 1);
            return family_E(n, params);
        case FamilyTag::fam_e_even:
            require(n % 2 == 0, "E_EVEN needs even n");
            require_m(n + 1);
            return family_E(n, params);
        case FamilyTag::fam_f:
            require_m(n + 2);
            return family_F(n, params);
    }
    throw FamilyError("unknown family tag");
}

std::vector<Scalar> op_V(int kind, int j, int k, std::span<const Scalar> v, long m_root,
                         int delta) {
    require(kind >= 0 && kind <= 2, "op_V kind must be 0, 1 or 2");
    require(k >= 0 && static_cast<int>(v.size()) == k, "op_V needs a k-vector");
    require(j >= 1 && j <= k + 1, "op_V needs 1 <= j <= k + 1");
    std::vector<Scalar> out(k, Scalar(0));
    if (j == k + 1) return out;
    out[j - 1] = Scalar(1);
    for (int p = j + 1; p <= k; ++p) {
        Scalar factor;
        switch (kind) {
            case 0:
                factor = Scalar::jth_root_of_sign(delta, static_cast<unsigned>(j), p) *
                         sroot(m_root, j).pow(p);
                break;
            case 1:
                factor = sroot(m_root, j).pow(p);
                break;
            default:
                factor = sroot(m_root, 2 * j + 1).pow(2 * p + 1);
                break;
        }
        out[p - 1] = factor * v[p - 1];
    }
    return out;
}

std::vector<Scalar> op_W(int s, int k, std::span<const Scalar> v, long m_root) {
    require(k >= 1 && static_cast<int>(v.size()) == k + 1, "op_W needs a (k+1)-slot vector");
    int j = 0;
    for (int p = 1; p <= k; ++p) {
        if (v[p - 1].is_zero()) continue;
        j = p;
        break;
    }
    if (j == 0) {
        // Degenerate orbit: all scaled slots vanish and the 1 sits in the
        // final slot (the j = k + 1 image). Only s = 1 is in range and the
        // vector is already in normal form.
        if (v[k] == Scalar(1) && s == 1) return std::vector<Scalar>(v.begin(), v.end());
        throw ShapeError("op_W input must be zeros followed by a leading 1");
    }
    if (v[j - 1] != Scalar(1))
        throw ShapeError("op_W input must be zeros followed by a leading 1");
    require(s >= 1 && s <= k + 2 - j, "op_W needs 1 <= s <= k + 2 - j");

    std::vector<Scalar> out(k + 1, Scalar(0));
    out[j - 1] = Scalar(1);
    if (s == k + 2 - j) return out;
    if (s == k + 1 - j) {
        out[k] = Scalar(1);
        return out;
    }
    // Recover the unscaled tail entries alpha_p = v_p / S(m,j)^p.
    const Scalar sj = sroot(m_root, j);
    const Scalar ss = sroot(m_root, s);
    out[s + j - 1] = Scalar(1);
    for (int p = s + j + 1; p <= k; ++p) {
        const Scalar alpha_p = v[p - 1] / sj.pow(p);
        out[p - 1] = ss.pow(p - j) * alpha_p;
    }
    out[k] = ss.pow(k + 6 - 2 * j) * v[k];
    return out;
}

namespace {

class SampleSource {
  public:
    explicit SampleSource(std::span<const Scalar> sample) : sample_(sample) {}
    Scalar at(size_t i) const {
        if (sample_.empty()) return Scalar(0);
        return sample_[i % sample_.size()];
    }
    std::vector<Scalar> take(size_t count, size_t offset = 0) const {
        std::vector<Scalar> out;
        for (size_t i = 0; i < count; ++i) out.push_back(at(offset + i));
        return out;
    }

  private:
    std::span<const Scalar> sample_;
};

std::string desc(const std::string& base, int j = 0, int s = 0, long mr = -1) {
    std::string d = base;
    if (j > 0) d += " j=" + std::to_string(j);
    if (s > 0) d += " s=" + std::to_string(s);
    if (mr >= 0) d += " S-index m=" + std::to_string(mr);
    return d;
}

}  // namespace

std::vector<CanonicalEntry> canonical_list(int n, int m, std::span<const Scalar> sample) {
    std::vector<CanonicalEntry> out;
    const SampleSource src(sample);
    auto push = [&](FamilyTag tag, std::vector<Scalar> params, const std::string& d) {
        out.push_back({tag, n, m, std::move(params), d});
    };
    bool supported = false;

    if (n == 1 && m >= 1) {
        supported = true;
        push(FamilyTag::leib_1m, {}, "Leib_{1,m}");
    }
    if (m == 1 && n >= 2) {
        supported = true;
        push(FamilyTag::leib_n1, {Scalar(0)}, "Leib_{n,1} alpha=0");
        push(FamilyTag::leib_n1, {Scalar(1)}, "Leib_{n,1} alpha=1");
    }
    if (n == 2 && m == 2) {
        supported = true;
        push(FamilyTag::leib_22_a, {}, "Leib_{2,2} first");
        push(FamilyTag::leib_22_b, {}, "Leib_{2,2} second");
    }
    if (n == 2 && m >= 3 && m % 2 == 1) {
        supported = true;
        push(FamilyTag::leib_2m_a, {}, "Leib_{2,m} first");
        push(FamilyTag::leib_2m_b, {}, "Leib_{2,m} second");
    }

    if (m == n - 1 && n >= 3) {
        supported = true;
        const int k = n - 3;  // alpha/beta slots
        const std::vector<Scalar> alphas = src.take(k);
        const Scalar theta = src.at(k);
        const Scalar gamma = src.at(k);
        for (int j = 1; j <= k; ++j)
            for (long mr = 0; mr < j; ++mr) {
                std::vector<Scalar> p = op_V(1, j, k, alphas, mr);
                p.push_back(sroot(mr, j).pow(n - 3) * theta);
                push(FamilyTag::fam_l, std::move(p), desc("L(V1(...), S^(n-3) theta)", j, 0, mr));
            }
        {
            std::vector<Scalar> ones(static_cast<size_t>(n - 2), Scalar(0));
            ones.back() = Scalar(1);
            push(FamilyTag::fam_l, ones, "L(0,...,0,1)");
            push(FamilyTag::fam_l, std::vector<Scalar>(static_cast<size_t>(n - 2), Scalar(0)),
                 "L(0,...,0)");
            ones = std::vector<Scalar>(static_cast<size_t>(n - 2), Scalar(0));
            ones.back() = Scalar(1);
            push(FamilyTag::fam_g, ones, "G(0,...,0,1)");
            push(FamilyTag::fam_g, std::vector<Scalar>(static_cast<size_t>(n - 2), Scalar(0)),
                 "G(0,...,0)");
        }
        for (int j = 1; j <= k; ++j)
            for (long mr = 0; mr < j; ++mr) {
                std::vector<Scalar> in = op_V(1, j, k, alphas, mr);
                in.push_back(gamma);
                for (int s = 1; s <= k + 2 - j; ++s)
                    push(FamilyTag::fam_g, op_W(s, k, in, mr),
                         desc("G(W(V1(...), gamma))", j, s, mr));
            }
    }

    if (m == n && n >= 3) {
        supported = true;
        // M takes the V1-normalized (alpha..., theta) block plus a scaled
        // final slot; H mirrors G with delta in the gamma slot.
        const int km = n - 2;
        const std::vector<Scalar> mvec = src.take(km);
        const Scalar tau = src.at(km);
        for (int j = 1; j <= km; ++j)
            for (long mr = 0; mr < j; ++mr) {
                std::vector<Scalar> p = op_V(1, j, km, mvec, mr);
                p.push_back(sroot(mr, j).pow(n - 3) * tau);
                push(FamilyTag::fam_m, std::move(p), desc("M(V1(...), S^(n-3) tau)", j, 0, mr));
            }
        {
            std::vector<Scalar> ones(static_cast<size_t>(n - 1), Scalar(0));
            ones.back() = Scalar(1);
            push(FamilyTag::fam_m, ones, "M(0,...,0,1)");
            push(FamilyTag::fam_m, std::vector<Scalar>(static_cast<size_t>(n - 1), Scalar(0)),
                 "M(0,...,0)");
            ones = std::vector<Scalar>(static_cast<size_t>(n - 2), Scalar(0));
            ones.back() = Scalar(1);
            push(FamilyTag::fam_h, ones, "H(0,...,0,1)");
            push(FamilyTag::fam_h, std::vector<Scalar>(static_cast<size_t>(n - 2), Scalar(0)),
                 "H(0,...,0)");
        }
        const int kh = n - 3;
        const std::vector<Scalar> betas = src.take(kh);
        const Scalar delta = src.at(kh);
        for (int j = 1; j <= kh; ++j)
            for (long mr = 0; mr < j; ++mr) {
                std::vector<Scalar> in = op_V(1, j, kh, betas, mr);
                in.push_back(delta);
                for (int s = 1; s <= kh + 2 - j; ++s)
                    push(FamilyTag::fam_h, op_W(s, kh, in, mr),
                         desc("H(W(V1(...), delta))", j, s, mr));
            }
    }

    if (m == n + 1 && n >= 2) {
        supported = true;
        const FamilyTag tag = n % 2 == 1 ? FamilyTag::fam_e_odd : FamilyTag::fam_e_even;
        const int arity = family_arity(tag, n, m);
        const int nbeta = arity - 2;  // beta_{lo}..beta_n
        auto assemble = [&](const Scalar& g, const Scalar& first_beta,
                            const std::vector<Scalar>& mid, const Scalar& last) {
            std::vector<Scalar> p = {g};
            if (nbeta > 0) p.push_back(first_beta);
            for (const Scalar& x : mid) p.push_back(x);
            p.push_back(last);
            if (static_cast<int>(p.size()) != arity)
                throw FamilyError("canonical E entry arity bug");
            return p;
        };
        if (n % 2 == 1) {
            const int q = (n + 1) / 2;
            // Sample layout: beta_{q+1}, then beta_{q+2}..beta_n, then beta.
            const Scalar bq1 = src.at(0);
            const std::vector<Scalar> tail = src.take(std::max(0, q - 2), 1);
            const Scalar bfree = src.at(static_cast<size_t>(std::max(0, q - 2)) + 1);
            const Scalar half(Rational(1, 2));
            if (bq1 != half && bq1 != Scalar(Rational(-1, 2))) {
                for (int j = 1; j <= q - 1; ++j)
                    for (int dlt : {1, -1})
                        for (long mr = 0; mr < j; ++mr)
                            push(tag,
                                 assemble(Scalar(1), Scalar(dlt) * bq1,
                                          op_V(0, j, q - 2, tail, mr, dlt), Scalar(0)),
                                 desc(std::string("E(1, d*b, V0(...), 0) delta=") +
                                          (dlt == 1 ? "+1" : "-1"),
                                      j, 0, mr));
            }
            {
                std::vector<Scalar> tail_b = tail;  // beta_{q+2}..beta_n, beta
                tail_b.push_back(bfree);
                for (int sign : {1, -1})
                    for (int j = 1; j <= q; ++j)
                        for (int dlt : {1, -1})
                            for (long mr = 0; mr < j; ++mr) {
                                std::vector<Scalar> img = op_V(0, j, q - 1, tail_b, mr, dlt);
                                std::vector<Scalar> p = {Scalar(1), Scalar(Rational(sign, 2))};
                                p.insert(p.end(), img.begin(), img.end());
                                push(tag, std::move(p),
                                     desc(std::string("E(1, ") + (sign > 0 ? "1/2" : "-1/2") +
                                              ", V0(...))",
                                          j, 0, mr));
                            }
            }
            for (int j = 1; j <= q - 1; ++j)
                for (long mr = 0; mr < j; ++mr)
                    push(tag,
                         assemble(Scalar(0), Scalar(1), op_V(0, j, q - 2, tail, mr), Scalar(0)),
                         desc("E(0, 1, V0(...), 0)", j, 0, mr));
            if (q >= 3) {  // W on q-1 slots needs a nonempty scaled part
                std::vector<Scalar> vin = tail;
                vin.push_back(bfree);
                for (int j = 1; j <= q - 1; ++j)
                    for (long mr = 0; mr < j; ++mr) {
                        std::vector<Scalar> v1 = op_V(1, j, q - 1, vin, mr);
                        for (int s = 1; s <= q - j; ++s) {
                            std::vector<Scalar> w = op_W(s, q - 2, v1, mr);
                            std::vector<Scalar> p = {Scalar(0), Scalar(0)};
                            p.insert(p.end(), w.begin(), w.end());
                            push(tag, std::move(p), desc("E(0, 0, W(V1(...)))", j, s, mr));
                        }
                    }
            }
        } else {
            const int q = n / 2;
            const std::vector<Scalar> betas = src.take(std::max(0, q - 1));
            const Scalar bfree = src.at(static_cast<size_t>(std::max(0, q - 1)));
            for (int j = 1; j <= q && q >= 1; ++j)
                for (long mr = 0; mr < 2 * j + 1; ++mr) {
                    std::vector<Scalar> img = op_V(2, j, q - 1, betas, mr);
                    std::vector<Scalar> p = {Scalar(1)};
                    for (const Scalar& x : img) p.push_back(x);
                    p.push_back(Scalar(0));
                    if (static_cast<int>(p.size()) != arity) continue;
                    push(tag, std::move(p), desc("E(1, V2(...), 0)", j, 0, mr));
                }
            std::vector<Scalar> vin = betas;
            vin.push_back(bfree);
            for (int j = 1; j <= q && q >= 1; ++j)
                for (long mr = 0; mr < j; ++mr) {
                    std::vector<Scalar> v1 = op_V(1, j, q, vin, mr);
                    for (int s = 1; s <= q + 1 - j; ++s) {
                        if (q - 1 < 1) continue;
                        std::vector<Scalar> w = op_W(s, q - 1, v1, mr);
                        std::vector<Scalar> p = {Scalar(0)};
                        for (const Scalar& x : w) p.push_back(x);
                        if (static_cast<int>(p.size()) != arity) continue;
                        push(tag, std::move(p), desc("E(0, W(V1(...)))", j, s, mr));
                    }
                }
        }
        push(tag, std::vector<Scalar>(static_cast<size_t>(arity), Scalar(0)), "E(0,...,0)");
    }

    if (m == n + 2 && n >= 2) {
        supported = true;
        const int kf = family_arity(FamilyTag::fam_f, n, m);
        const std::vector<Scalar> betas = src.take(static_cast<size_t>(kf));
        for (int j = 1; j <= kf; ++j)
            for (long mr = 0; mr < j; ++mr) {
                std::vector<Scalar> v1 = op_V(1, j, kf, betas, mr);
                for (int s = 1; s <= kf + 1 - j; ++s) {
                    if (kf - 1 < 1) continue;
                    push(FamilyTag::fam_f, op_W(s, kf - 1, v1, mr),
                         desc("F(W(V1(...)))", j, s, mr));
                }
            }
        push(FamilyTag::fam_f, std::vector<Scalar>(static_cast<size_t>(kf), Scalar(0)),
             "F(0,...,0)");
    }

    if (!supported)
        throw FamilyError("no canonical list at dims (" + std::to_string(n) + ", " +
                          std::to_string(m) + ")");
    // Degenerate operator ranges can produce coinciding parameter vectors
    // (empty tails make the delta and S-index choices vacuous); keep the
    // first occurrence of each (tag, params).
    std::vector<CanonicalEntry> unique;
    for (CanonicalEntry& e : out) {
        bool seen = false;
        for (const CanonicalEntry& u : unique) {
            if (u.tag != e.tag || u.params.size() != e.params.size()) continue;
            bool same = true;
            for (size_t i = 0; i < e.params.size() && same; ++i)
                same = u.params[i] == e.params[i];
            if (same) {
                seen = true;
                break;
            }
        }
        if (!seen) unique.push_back(std::move(e));
    }
    return unique;
}

}  // namespace lsa
