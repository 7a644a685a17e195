#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qsing {

/// Polynomial over Z with ascending coefficients and no trailing zeros;
/// the zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(long degree, const mpz_class& c = 1);

    long degree() const { return static_cast<long>(c_.size()) - 1; } // zero -> -1
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const mpz_class& leading() const { return c_.back(); }

    /// Coefficient of x^k, zero outside the stored range.
    const mpz_class& coeff(long k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    /// Quotient num / den for a monic den dividing num exactly;
    /// throws std::invalid_argument otherwise.
    static IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

    std::string to_string() const;

private:
    void trim();

    std::vector<mpz_class> c_;
};

/// m-th cyclotomic polynomial, computed as (x^m - 1) / prod of the
/// cyclotomic polynomials of the proper divisors of m. Memoized.
const IntPoly& cyclotomic_polynomial(long m);

} // namespace qsing
