#include "qsing/intpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qsing {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPoly IntPoly::monomial(long degree, const mpz_class& c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (sgn(c) == 0) return IntPoly();
    std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(long k) const {
    static const mpz_class zero(0);
    if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero() || !den.is_monic())
        throw std::invalid_argument("divide_exact requires a monic divisor");
    if (num.is_zero()) return IntPoly();
    long dq = num.degree() - den.degree();
    if (dq < 0) throw std::invalid_argument("divide_exact: divisor does not divide");

    std::vector<mpz_class> rem = num.c_;
    std::vector<mpz_class> quot(static_cast<std::size_t>(dq) + 1);
    for (long k = dq; k >= 0; --k) {
        mpz_class lead = rem[static_cast<std::size_t>(k + den.degree())];
        if (sgn(lead) == 0) continue;
        quot[static_cast<std::size_t>(k)] = lead;
        for (long j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= lead * den.coeff(j);
    }
    for (const mpz_class& c : rem)
        if (sgn(c) != 0)
            throw std::invalid_argument("divide_exact: division is not exact");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const mpz_class& c = coeff(k);
        if (sgn(c) == 0) continue;
        if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) out += "-";
        mpz_class a = abs(c);
        bool unit = a == 1 && k != 0;
        if (!unit) out += a.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

std::vector<long> divisors_of(long m) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPoly x_power_minus_one(long m) {
    std::vector<mpz_class> v(static_cast<std::size_t>(m) + 1);
    v[0] = -1;
    v.back() = 1;
    return IntPoly(std::move(v));
}

} // namespace

const IntPoly& cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<long, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod(Phi_d) over proper divisors d of m. The
    // recursion touches only divisors, so filling the cache bottom-up by
    // divisor avoids re-entry under the lock.
    for (long d : divisors_of(m)) {
        if (cache.count(d)) continue;
        IntPoly prod = IntPoly::monomial(0);
        for (long e : divisors_of(d))
            if (e != d) prod = prod * cache.at(e);
        cache.emplace(d, IntPoly::divide_exact(x_power_minus_one(d), prod));
    }
    return cache.at(m);
}

} // namespace qsing
