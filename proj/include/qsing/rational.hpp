#pragma once

#include <gmpxx.h>

#include <string>

namespace qsing {

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    /// Throws std::domain_error on a zero divisor.
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string to_string() const;

private:
    mpq_class v_; // canonical: gcd(|num|, den) = 1, den > 0
};

} // namespace qsing
