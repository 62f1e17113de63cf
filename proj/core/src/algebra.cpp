#include "lsa/algebra.hpp"

#include <algorithm>

#include "lsa/errors.hpp"

namespace lsa {

namespace {
bool all_zero(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}
}  // namespace

Element Element::basis(size_t n, size_t m, Parity p, size_t index_1based) {
    Element e(n, m);
    if (p == Parity::even)
        e.even_[index_1based - 1] = Scalar(1);
    else
        e.odd_[index_1based - 1] = Scalar(1);
    return e;
}

bool Element::is_zero() const { return even_part_zero() && odd_part_zero(); }
bool Element::even_part_zero() const { return all_zero(even_); }
bool Element::odd_part_zero() const { return all_zero(odd_); }

Element Element::operator-() const {
    Element r = *this;
    for (auto& c : r.even_) c = -c;
    for (auto& c : r.odd_) c = -c;
    return r;
}

Element operator+(const Element& a, const Element& b) {
    if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim())
        throw DimensionMismatch("element addition: ambient dimensions differ");
    Element r = a;
    for (size_t i = 0; i < r.even_.size(); ++i) r.even_[i] += b.even_[i];
    for (size_t i = 0; i < r.odd_.size(); ++i) r.odd_[i] += b.odd_[i];
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Scalar& c, const Element& v) {
    Element r = v;
    for (auto& x : r.even_) x = c * x;
    for (auto& x : r.odd_) x = c * x;
    return r;
}

std::string basis_token(Parity p, int index_1based) {
    return (p == Parity::even ? "x" : "y") + std::to_string(index_1based);
}

std::string SuperidentityViolation::str() const {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ", ";
        s += basis_token(triple[i].first, triple[i].second);
    }
    return s + ")";
}

SuperAlgebra SuperAlgebra::make(int n, int m, const std::vector<TableEntry>& entries) {
    if (n < 0 || m < 0) throw Error("negative dimension");
    SuperAlgebra a(n, m);
    auto check_index = [&](Parity p, int i) {
        const int dim = p == Parity::even ? n : m;
        if (i < 1 || i > dim)
            throw GradingViolation("basis index " + basis_token(p, i) + " out of range for dims (" +
                                   std::to_string(n) + ", " + std::to_string(m) + ")");
    };
    for (const TableEntry& e : entries) {
        check_index(e.pa, e.ia);
        check_index(e.pb, e.ib);
        if (static_cast<int>(e.value.even_dim()) != n || static_cast<int>(e.value.odd_dim()) != m)
            throw DimensionMismatch("table entry value has wrong ambient dimensions");
        const Parity target = e.pa ^ e.pb;
        const bool off_parity_nonzero =
            target == Parity::even ? !e.value.odd_part_zero() : !e.value.even_part_zero();
        if (off_parity_nonzero)
            throw GradingViolation("product [" + basis_token(e.pa, e.ia) + ", " +
                                   basis_token(e.pb, e.ib) + "] has a component of the wrong parity");
        std::vector<Scalar> coords = target == Parity::even ? e.value.even() : e.value.odd();
        const Key key = {static_cast<int>(e.pa), e.ia, static_cast<int>(e.pb), e.ib};
        if (a.table_.count(key))
            throw GradingViolation("duplicate table entry for [" + basis_token(e.pa, e.ia) + ", " +
                                   basis_token(e.pb, e.ib) + "]");
        if (!all_zero(coords)) a.table_.emplace(key, std::move(coords));
    }
    return a;
}

const std::vector<Scalar>* SuperAlgebra::table_entry(Parity pa, int ia, Parity pb, int ib) const {
    const Key key = {static_cast<int>(pa), ia, static_cast<int>(pb), ib};
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
}

Element SuperAlgebra::product_of_basis(Parity pa, int ia, Parity pb, int ib) const {
    Element r(n_, m_);
    const std::vector<Scalar>* coords = table_entry(pa, ia, pb, ib);
    if (!coords) return r;
    const Parity target = pa ^ pb;
    for (size_t t = 0; t < coords->size(); ++t) {
        if (target == Parity::even)
            r.even_at(t) = (*coords)[t];
        else
            r.odd_at(t) = (*coords)[t];
    }
    return r;
}

Element SuperAlgebra::multiply(const Element& a, const Element& b) const {
    if (static_cast<int>(a.even_dim()) != n_ || static_cast<int>(a.odd_dim()) != m_ ||
        static_cast<int>(b.even_dim()) != n_ || static_cast<int>(b.odd_dim()) != m_)
        throw DimensionMismatch("multiply: element not in this algebra's ambient space");
    Element r(n_, m_);
    auto accumulate = [&](Parity pa, int ia, const Scalar& ca, Parity pb, int ib, const Scalar& cb) {
        const std::vector<Scalar>* coords = table_entry(pa, ia, pb, ib);
        if (!coords) return;
        const Scalar f = ca * cb;
        if (f.is_zero()) return;
        const Parity target = pa ^ pb;
        for (size_t t = 0; t < coords->size(); ++t) {
            if ((*coords)[t].is_zero()) continue;
            if (target == Parity::even)
                r.even_at(t) += f * (*coords)[t];
            else
                r.odd_at(t) += f * (*coords)[t];
        }
    };
    auto for_nonzero = [&](const Element& v, auto&& fn) {
        for (int i = 0; i < n_; ++i)
            if (!v.even()[i].is_zero()) fn(Parity::even, i + 1, v.even()[i]);
        for (int j = 0; j < m_; ++j)
            if (!v.odd()[j].is_zero()) fn(Parity::odd, j + 1, v.odd()[j]);
    };
    for_nonzero(a, [&](Parity pa, int ia, const Scalar& ca) {
        for_nonzero(b, [&](Parity pb, int ib, const Scalar& cb) {
            accumulate(pa, ia, ca, pb, ib, cb);
        });
    });
    return r;
}

std::vector<SuperidentityViolation> SuperAlgebra::superidentity_violations() const {
    std::vector<SuperidentityViolation> out;
    std::vector<std::pair<Parity, int>> basis;
    for (int i = 1; i <= n_; ++i) basis.emplace_back(Parity::even, i);
    for (int j = 1; j <= m_; ++j) basis.emplace_back(Parity::odd, j);

    for (const auto& [px, ix] : basis) {
        const Element x = Element::basis(n_, m_, px, ix);
        for (const auto& [py, iy] : basis) {
            const Element xy = product_of_basis(px, ix, py, iy);
            for (const auto& [pz, iz] : basis) {
                const Element yz = product_of_basis(py, iy, pz, iz);
                const Element xz = product_of_basis(px, ix, pz, iz);
                // [x,[y,z]] - [[x,y],z] + (-1)^{alpha beta}[[x,z],y]
                Element residual = multiply(x, yz);
                residual = residual - multiply(xy, Element::basis(n_, m_, pz, iz));
                Element tail = multiply(xz, Element::basis(n_, m_, py, iy));
                const bool both_odd = py == Parity::odd && pz == Parity::odd;
                residual = both_odd ? residual - tail : residual + tail;
                if (!residual.is_zero())
                    out.push_back({{std::pair{px, ix}, {py, iy}, {pz, iz}}, residual});
            }
        }
    }
    return out;
}

GradedSubspace SuperAlgebra::right_annihilator() const {
    // z in R(L) iff [b, z] = 0 for all basis b; solve per parity of z.
    auto annihilated = [&](Parity pz, int dim) {
        // Rows: one equation per (left basis b, target coordinate); columns: z coords.
        Matrix sys(0, dim);
        auto add_eqs = [&](Parity pb, int bdim) {
            for (int b = 1; b <= bdim; ++b) {
                const Parity target = pb ^ pz;
                const int tdim = target == Parity::even ? n_ : m_;
                for (int t = 0; t < tdim; ++t) {
                    std::vector<Scalar> row(dim);
                    bool nonzero = false;
                    for (int j = 1; j <= dim; ++j) {
                        const std::vector<Scalar>* coords = table_entry(pb, b, pz, j);
                        if (!coords) continue;
                        if (!(*coords)[t].is_zero()) {
                            row[j - 1] = (*coords)[t];
                            nonzero = true;
                        }
                    }
                    if (nonzero) sys.append_row(row);
                }
            }
        };
        add_eqs(Parity::even, n_);
        add_eqs(Parity::odd, m_);
        return null_space(sys);
    };
    Matrix even = annihilated(Parity::even, n_);
    Matrix odd = annihilated(Parity::odd, m_);
    return GradedSubspace::span(even, odd);
}

bool SuperAlgebra::is_lie() const {
    std::vector<std::pair<Parity, int>> basis;
    for (int i = 1; i <= n_; ++i) basis.emplace_back(Parity::even, i);
    for (int j = 1; j <= m_; ++j) basis.emplace_back(Parity::odd, j);
    for (const auto& [pa, ia] : basis)
        for (const auto& [pb, ib] : basis) {
            const Element ab = product_of_basis(pa, ia, pb, ib);
            const Element ba = product_of_basis(pb, ib, pa, ia);
            const bool both_odd = pa == Parity::odd && pb == Parity::odd;
            // [a,b] + (-1)^{alpha beta}[b,a] must vanish.
            const Element s = both_odd ? ab - ba : ab + ba;
            if (!s.is_zero()) return false;
        }
    return true;
}

SuperAlgebra SuperAlgebra::change_basis(const Matrix& p_even, const Matrix& p_odd) const {
    if (p_even.rows() != static_cast<size_t>(n_) || p_even.cols() != static_cast<size_t>(n_) ||
        p_odd.rows() != static_cast<size_t>(m_) || p_odd.cols() != static_cast<size_t>(m_))
        throw DimensionMismatch("change of basis matrices have wrong shape");
    const Matrix inv_even = n_ > 0 ? inverse(p_even) : Matrix(0, 0);
    const Matrix inv_odd = m_ > 0 ? inverse(p_odd) : Matrix(0, 0);

    auto new_basis_elem = [&](Parity p, int i) {
        Element e(n_, m_);
        if (p == Parity::even)
            for (int r = 0; r < n_; ++r) e.even_at(r) = p_even.at(r, i - 1);
        else
            for (int r = 0; r < m_; ++r) e.odd_at(r) = p_odd.at(r, i - 1);
        return e;
    };
    auto to_new_coords = [&](const Element& w) {
        Element r(n_, m_);
        for (int i = 0; i < n_; ++i) {
            Scalar acc;
            for (int j = 0; j < n_; ++j) acc += inv_even.at(i, j) * w.even()[j];
            r.even_at(i) = acc;
        }
        for (int i = 0; i < m_; ++i) {
            Scalar acc;
            for (int j = 0; j < m_; ++j) acc += inv_odd.at(i, j) * w.odd()[j];
            r.odd_at(i) = acc;
        }
        return r;
    };

    std::vector<std::pair<Parity, int>> basis;
    for (int i = 1; i <= n_; ++i) basis.emplace_back(Parity::even, i);
    for (int j = 1; j <= m_; ++j) basis.emplace_back(Parity::odd, j);
    std::vector<TableEntry> entries;
    for (const auto& [pa, ia] : basis)
        for (const auto& [pb, ib] : basis) {
            const Element w = multiply(new_basis_elem(pa, ia), new_basis_elem(pb, ib));
            if (w.is_zero()) continue;
            entries.push_back({pa, ia, pb, ib, to_new_coords(w)});
        }
    return make(n_, m_, entries);
}

SuperAlgebra SuperAlgebra::even_part() const {
    std::vector<TableEntry> entries;
    for (const auto& [key, coords] : table_) {
        if (key[0] != static_cast<int>(Parity::even) || key[2] != static_cast<int>(Parity::even))
            continue;
        Element v(n_, 0);
        for (size_t t = 0; t < coords.size(); ++t) v.even_at(t) = coords[t];
        entries.push_back({Parity::even, key[1], Parity::even, key[3], v});
    }
    return make(n_, 0, entries);
}

GradedSubspace SuperAlgebra::even_square() const {
    Matrix rows(0, n_);
    for (const auto& [key, coords] : table_) {
        if (key[0] != static_cast<int>(Parity::even) || key[2] != static_cast<int>(Parity::even))
            continue;
        rows.append_row(coords);
    }
    return GradedSubspace::span(rows, Matrix(0, m_));
}

}  // namespace lsa
