#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsing/rational.hpp"

namespace qsing {

/// Element of the cyclotomic field Q(zeta_m), written on the power basis
/// {zeta^0, ..., zeta^(phi(m)-1)} after reduction modulo the m-th
/// cyclotomic polynomial.
///
/// Representation: a positive common denominator together with a sparse,
/// exponent-sorted list of nonzero integer numerators. The gcd of the
/// denominator and the numerator content is 1, so the form is unique:
/// two values over the same order are equal iff their parts are identical.
/// Values over different orders compare equal iff they agree after lifting
/// to the common order.
class Cyclotomic {
public:
    /// (exponent, numerator) with exponent in [0, phi(m)) and numerator != 0.
    using Term = std::pair<long, mpz_class>;

    /// Zero of Q(zeta_order); order must be >= 1.
    explicit Cyclotomic(long order = 1);

    static Cyclotomic zero(long order) { return Cyclotomic(order); }
    static Cyclotomic one(long order);
    static Cyclotomic from_rational(const Rational& r, long order);
    /// zeta_order^exp; exp may be any integer and is folded mod order.
    static Cyclotomic root_of_unity(long order, long exp);
    /// Canonical form of a sum of r * zeta^e with arbitrary exponents >= 0
    /// (duplicates allowed): exponents fold mod order, then the part of
    /// degree >= phi(order) is eliminated modulo the cyclotomic polynomial.
    static Cyclotomic reduce(const std::vector<std::pair<long, Rational>>& raw,
                             long order);

    long order() const { return order_; }
    /// Size of the power basis, phi(order).
    long basis_size() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    /// Value as a rational; requires is_rational().
    Rational rational_value() const;

    /// Coefficient of zeta^k, 0 <= k < basis_size().
    Rational coeff(long k) const;
    /// Dense coefficient vector of length basis_size().
    std::vector<Rational> coeffs() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    /// Throws std::domain_error("division by zero in cyclotomic field")
    /// when o is zero.
    Cyclotomic operator/(const Cyclotomic& o) const;

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representing polynomial and the cyclotomic polynomial.
    Cyclotomic inverse() const;

    /// Field automorphism zeta -> zeta^(order-1), complex conjugation on
    /// the roots of unity.
    Cyclotomic conjugate() const;

    /// Same value in Q(zeta_new_order); new_order must be a positive
    /// multiple of order().
    Cyclotomic lifted_to(long new_order) const;
    /// Both values rewritten over lcm of their orders.
    static std::pair<Cyclotomic, Cyclotomic> lift_common(const Cyclotomic& a,
                                                         const Cyclotomic& b);

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Hash of the canonical form; consistent with equality only among
    /// values that share one order.
    std::size_t hash() const;

    /// Expression form, e.g. "1/2 - z + 2*z^3"; "0" for zero.
    std::string to_string() const;

    const std::vector<Term>& terms() const { return terms_; }
    const mpz_class& common_den() const { return den_; }

private:
    static Cyclotomic from_parts(long order, mpz_class den,
                                 std::vector<Term> terms);
    void normalize();

    long order_;
    mpz_class den_;           // > 0
    std::vector<Term> terms_; // sorted by exponent, nonzero numerators
};

/// lcm of two cyclotomic orders; throws std::overflow_error when the
/// result does not fit a long.
long common_cyclotomic_order(long a, long b);

} // namespace qsing
