#include "qsing/rational.hpp"

#include <stdexcept>

namespace qsing {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Rational::Rational(long num, long den)
    : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : v_(make_canonical(num, den)) {}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(mpq_class(v_ + o.v_));
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(mpq_class(v_ - o.v_));
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(mpq_class(v_ * o.v_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace qsing
