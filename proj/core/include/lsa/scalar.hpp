#pragma once

#include <string>
#include <vector>

#include "lsa/rational.hpp"

namespace lsa {

/// Element of a cyclotomic-rational field Q(zeta_N). Coefficients are with
/// respect to the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced modulo
/// the N-th cyclotomic polynomial. Pure rationals are kept at order 1, and
/// any value whose zeta-coefficients vanish is shrunk back to order 1, so
/// rational-only computations never pay the cyclotomic overhead.
///
/// Mixed-order arithmetic embeds both operands into Q(zeta_lcm) first.
/// Values are immutable once built; all operations are pure.
class Scalar {
  public:
    Scalar() : order_(1), coeffs_(1) {}
    Scalar(const Rational& r) : order_(1), coeffs_{r} {}  // NOLINT: implicit by design
    Scalar(long n) : order_(1), coeffs_{Rational(n)} {}   // NOLINT: implicit by design

    /// zeta_t^m as an element of Q(zeta_t); m may be any integer.
    static Scalar root_of_unity(unsigned t, long m);

    /// The factor delta * r where r is a fixed j-th root of delta^exponent:
    /// r = 1 when delta^exponent = 1 and r = zeta_{2j} (principal branch)
    /// when delta^exponent = -1. delta must be +1 or -1.
    static Scalar jth_root_of_sign(int delta, unsigned j, long exponent);

    /// Monic integer coefficient vector of Phi_N, lowest degree first;
    /// degree = phi(N). Computed by exact division of x^N - 1 by the product
    /// of Phi_d over proper divisors d of N.
    static std::vector<BigInt> cyclotomic_polynomial(unsigned n);

    static unsigned phi(unsigned n);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }
    bool is_rational() const { return order_ == 1; }
    /// Requires is_rational().
    const Rational& rational_value() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Embed into Q(zeta_m); order() must divide m.
    Scalar embedded(unsigned m) const;

    /// Canonical literal, e.g. "1/2", "z(4)", "-2/3*z(6)^2", "1/2 + z(3)".
    std::string str() const;

  private:
    Scalar(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    // Reduce modulo Phi_order; keeps the stated order (no shrinking), so
    // embedded operands always have matching coefficient lengths.
    static Scalar from_poly(unsigned order, std::vector<Rational> poly);
    void shrink_();

    unsigned order_;
    std::vector<Rational> coeffs_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace lsa
