#include "lsa/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace lsa {

namespace {

// x^N - 1 divided exactly by div (both monic over Z), lowest degree first.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& div) {
    const size_t dn = num.size() - 1;
    const size_t dd = div.size() - 1;
    std::vector<BigInt> quot(dn - dd + 1);
    for (size_t k = dn - dd + 1; k-- > 0;) {
        BigInt c = num[k + dd];  // div is monic
        quot[k] = c;
        if (c == 0) continue;
        for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * div[i];
    }
    for (const auto& c : num)
        if (c != 0) throw ArithmeticError("inexact cyclotomic division");
    return quot;
}

std::vector<unsigned> proper_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Polynomial helpers over Rational, lowest degree first, for inverse().
using RPoly = std::vector<Rational>;

int degree(const RPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

RPoly poly_sub_scaled(RPoly a, const RPoly& b, const Rational& c, int shift) {
    if (static_cast<int>(a.size()) < static_cast<int>(b.size()) + shift)
        a.resize(b.size() + shift);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    return a;
}

// a = q*b + r with deg r < deg b.
std::pair<RPoly, RPoly> poly_divmod(RPoly a, const RPoly& b) {
    const int db = degree(b);
    if (db < 0) throw ArithmeticError("polynomial division by zero");
    RPoly q(std::max<int>(degree(a) - db + 1, 1));
    while (true) {
        const int da = degree(a);
        if (da < db) break;
        Rational c = a[da] / b[db];
        q[da - db] += c;
        a = poly_sub_scaled(std::move(a), b, c, da - db);
    }
    return {q, a};
}

RPoly poly_mul(const RPoly& a, const RPoly& b) {
    RPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

unsigned Scalar::phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<BigInt> Scalar::cyclotomic_polynomial(unsigned n) {
    if (n < 1) throw ArithmeticError("cyclotomic polynomial needs N >= 1");
    static std::map<unsigned, std::vector<BigInt>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    // Fill Phi_d for every divisor d of n in ascending order; every proper
    // divisor of d also divides n, so it is already present.
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        std::vector<BigInt> num(d + 1);
        num[0] = -1;
        num[d] = 1;
        for (unsigned e : proper_divisors(d)) num = divide_exact(std::move(num), cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

Scalar Scalar::from_poly(unsigned order, std::vector<Rational> poly) {
    const unsigned deg = phi(order);
    if (poly.size() > deg) {
        const auto cyc = cyclotomic_polynomial(order);
        for (size_t k = poly.size(); k-- > deg;) {
            Rational c = poly[k];
            if (c.is_zero()) continue;
            poly[k] = Rational(0);
            // x^k = x^(k-deg) * (x^deg - Phi_N) since Phi_N is monic.
            for (size_t i = 0; i < deg; ++i)
                poly[k - deg + i] -= c * Rational(cyc[i], BigInt(1));
        }
    }
    poly.resize(std::max<size_t>(deg, 1));
    return Scalar(order, std::move(poly));
}

void Scalar::shrink_() {
    if (order_ == 1) return;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return;
    Rational c = coeffs_.empty() ? Rational(0) : coeffs_[0];
    order_ = 1;
    coeffs_ = {c};
}

Scalar Scalar::root_of_unity(unsigned t, long m) {
    if (t < 1) throw ArithmeticError("root of unity needs order >= 1");
    long k = m % static_cast<long>(t);
    if (k < 0) k += t;
    std::vector<Rational> poly(static_cast<size_t>(k) + 1);
    poly[static_cast<size_t>(k)] = Rational(1);
    Scalar s = from_poly(t, std::move(poly));
    s.shrink_();
    return s;
}

Scalar Scalar::jth_root_of_sign(int delta, unsigned j, long exponent) {
    if (delta != 1 && delta != -1) throw ArithmeticError("jth_root_of_sign: delta must be +1 or -1");
    if (j < 1) throw ArithmeticError("jth_root_of_sign: j must be >= 1");
    const bool radicand_is_one = (delta == 1) || (exponent % 2 == 0);
    Scalar root = radicand_is_one ? Scalar(1) : root_of_unity(2 * j, 1);
    return Scalar(delta) * root;
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

const Rational& Scalar::rational_value() const {
    if (order_ != 1) throw ArithmeticError("scalar is not rational");
    return coeffs_[0];
}

Scalar Scalar::embedded(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw ArithmeticError("embedding target order not a multiple");
    const unsigned step = m / order_;
    std::vector<Rational> poly(static_cast<size_t>(phi(order_) - 1) * step + 1);
    for (size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
    return from_poly(m, std::move(poly));
}

Scalar Scalar::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Scalar(order_, std::move(c));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    const unsigned n = lcm_u(a.order_, b.order_);
    Scalar ea = a.embedded(n), eb = b.embedded(n);
    std::vector<Rational> c = ea.coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += eb.coeffs_[i];
    Scalar s(n, std::move(c));
    s.shrink_();
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.order_ == 1 && b.order_ == 1)
        return Scalar(a.coeffs_[0] * b.coeffs_[0]);
    const unsigned n = lcm_u(a.order_, b.order_);
    Scalar ea = a.embedded(n), eb = b.embedded(n);
    if (ea.is_zero() || eb.is_zero()) return Scalar(0);
    std::vector<Rational> prod(ea.coeffs_.size() + eb.coeffs_.size() - 1);
    for (size_t i = 0; i < ea.coeffs_.size(); ++i) {
        if (ea.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < eb.coeffs_.size(); ++j)
            prod[i + j] += ea.coeffs_[i] * eb.coeffs_[j];
    }
    Scalar s = Scalar::from_poly(n, std::move(prod));
    s.shrink_();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (order_ == 1) return Scalar(coeffs_[0].inverse());
    // Extended Euclid in Q[x] against Phi_N, which is irreducible over Q, so
    // gcd(value, Phi_N) is a nonzero constant.
    const auto cyc = cyclotomic_polynomial(order_);
    RPoly r0(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) r0[i] = Rational(cyc[i], BigInt(1));
    RPoly r1 = coeffs_;
    RPoly s0 = {Rational(0)}, s1 = {Rational(1)};  // coefficients of the value
    while (degree(r1) > 0) {
        auto [q, r] = poly_divmod(r0, r1);
        RPoly s2 = poly_sub_scaled(s0, poly_mul(q, s1), Rational(1), 0);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r1) != 0) throw ArithmeticError("cyclotomic inverse failed");
    const Rational g = r1[0];
    for (auto& c : s1) c /= g;
    Scalar out = from_poly(order_, std::move(s1));
    out.shrink_();
    return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    const unsigned n = lcm_u(a.order_, b.order_);
    return a.embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.str();
            continue;
        }
        std::string zeta = "z(" + std::to_string(order_) + ")";
        if (k > 1) zeta += "^" + std::to_string(k);
        if (mag.is_one())
            out += zeta;
        else
            out += mag.str() + "*" + zeta;
    }
    return out;
}

}  // namespace lsa
