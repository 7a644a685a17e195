#include "qsing/cyclotomic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "qsing/intpoly.hpp"
#include "qsing/numtheory.hpp"

namespace qsing {

namespace {

/// Per-order immutable field data plus a lazily grown table of the
/// canonical forms of zeta^e for e in [phi, m). Row e is the coefficient
/// list of x^e reduced modulo the m-th cyclotomic polynomial; rows have
/// integer entries because the modulus is monic over Z.
struct FieldContext {
    long m = 1;
    long phi = 1;
    const IntPoly* modulus = nullptr;

    std::mutex rows_mu;
    std::deque<std::vector<Cyclotomic::Term>> rows; // rows[e - phi]

    /// Reduced form of x^e for e in [phi, m). The returned reference stays
    /// valid: rows are append-only and never reallocated.
    const std::vector<Cyclotomic::Term>& row(long e) {
        std::lock_guard<std::mutex> lock(rows_mu);
        std::size_t idx = static_cast<std::size_t>(e - phi);
        while (rows.size() <= idx) {
            long next = phi + static_cast<long>(rows.size());
            std::vector<mpz_class> dense(static_cast<std::size_t>(phi));
            if (next == phi) {
                // x^phi = -(lower part of the modulus)
                for (long k = 0; k < phi; ++k) dense[k] = -modulus->coeff(k);
            } else {
                // x^(e+1) = x * x^e, spilling the top coefficient into row 0
                for (const auto& [k, c] : rows.back()) {
                    if (k + 1 < phi) {
                        dense[static_cast<std::size_t>(k + 1)] += c;
                    } else {
                        for (const auto& [k2, c2] : rows.front())
                            dense[static_cast<std::size_t>(k2)] += c * c2;
                    }
                }
            }
            std::vector<Cyclotomic::Term> terms;
            for (long k = 0; k < phi; ++k)
                if (sgn(dense[k]) != 0)
                    terms.emplace_back(k, std::move(dense[k]));
            rows.push_back(std::move(terms));
        }
        return rows[idx];
    }
};

FieldContext& context_for(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<FieldContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[m];
    if (!slot) {
        slot = std::make_unique<FieldContext>();
        slot->m = m;
        slot->phi = euler_phi(m);
        slot->modulus = &cyclotomic_polynomial(m);
    }
    return *slot;
}

/// Dense accumulation buffer reused across calls; all entries are zero
/// between uses.
std::vector<mpz_class>& scratch_buffer(std::size_t size) {
    static thread_local std::vector<mpz_class> buf;
    if (buf.size() < size) buf.resize(size);
    return buf;
}

/// Canonicalize buf[0..top]: fold exponents >= m, eliminate [phi, m) via
/// the row table, collect the sorted term list. Consumes the buffer back
/// to all-zero.
std::vector<Cyclotomic::Term> reduce_collect(std::vector<mpz_class>& buf,
                                             long top, FieldContext& ctx) {
    const long m = ctx.m;
    const long phi = ctx.phi;
    for (long e = top; e >= m; --e) {
        if (sgn(buf[e]) == 0) continue;
        buf[e - m] += buf[e];
        buf[e] = 0;
    }
    for (long e = std::min(top, m - 1); e >= phi; --e) {
        if (sgn(buf[e]) == 0) continue;
        for (const auto& [k, c] : ctx.row(e)) buf[k] += buf[e] * c;
        buf[e] = 0;
    }
    std::vector<Cyclotomic::Term> terms;
    for (long k = 0; k <= std::min(top, phi - 1); ++k) {
        if (sgn(buf[k]) == 0) continue;
        terms.emplace_back(k, buf[k]);
        buf[k] = 0;
    }
    return terms;
}

long fold_exponent(long e, long m) {
    long r = e % m;
    return r < 0 ? r + m : r;
}

// --- small dense polynomial helpers over Q, for the inverse ---

using QPoly = std::vector<mpq_class>;

long qdeg(const QPoly& p) {
    for (long k = static_cast<long>(p.size()) - 1; k >= 0; --k)
        if (sgn(p[k]) != 0) return k;
    return -1;
}

/// Replaces num with the remainder and returns the quotient of num / den.
QPoly qdivmod(QPoly& num, const QPoly& den) {
    long dn = qdeg(num);
    long dd = qdeg(den);
    QPoly quot(static_cast<std::size_t>(std::max<long>(dn - dd + 1, 0)));
    while (dn >= dd) {
        mpq_class f = num[dn] / den[dd];
        quot[dn - dd] = f;
        for (long j = 0; j <= dd; ++j) num[dn - dd + j] -= f * den[j];
        num[dn] = 0; // exact cancellation, forced
        dn = qdeg(num);
    }
    return quot;
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly out(std::max(a.size(), q.size() + b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (sgn(q[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    return out;
}

} // namespace

long common_cyclotomic_order(long a, long b) {
    mpz_class l = lcm(mpz_class(a), mpz_class(b));
    if (!l.fits_slong_p()) throw std::overflow_error("common cyclotomic order overflows");
    return l.get_si();
}

Cyclotomic::Cyclotomic(long order) : order_(order), den_(1) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
}

Cyclotomic Cyclotomic::from_parts(long order, mpz_class den,
                                  std::vector<Term> terms) {
    Cyclotomic v(order);
    v.den_ = std::move(den);
    v.terms_ = std::move(terms);
    v.normalize();
    return v;
}

void Cyclotomic::normalize() {
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    mpz_class g = den_;
    for (const Term& t : terms_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    }
    if (g != 1) {
        den_ /= g;
        for (Term& t : terms_) t.second /= g;
    }
}

Cyclotomic Cyclotomic::one(long order) {
    Cyclotomic v(order);
    v.terms_.emplace_back(0, 1);
    return v;
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, long order) {
    Cyclotomic v(order);
    if (!r.is_zero()) {
        v.den_ = r.den();
        v.terms_.emplace_back(0, r.num());
    }
    return v;
}

Cyclotomic Cyclotomic::root_of_unity(long order, long exp) {
    FieldContext& ctx = context_for(order);
    long e = fold_exponent(exp, order);
    Cyclotomic v(order);
    if (e < ctx.phi) {
        v.terms_.emplace_back(e, 1);
    } else {
        v.terms_ = ctx.row(e);
    }
    return v;
}

Cyclotomic Cyclotomic::reduce(const std::vector<std::pair<long, Rational>>& raw,
                              long order) {
    FieldContext& ctx = context_for(order);
    mpz_class den(1);
    for (const auto& [e, r] : raw) den = lcm(den, r.den());
    auto& buf = scratch_buffer(static_cast<std::size_t>(order));
    long top = -1;
    for (const auto& [e, r] : raw) {
        if (r.is_zero()) continue;
        long f = fold_exponent(e, order);
        buf[f] += r.num() * mpz_class(den / r.den());
        top = std::max(top, f);
    }
    return from_parts(order, std::move(den), reduce_collect(buf, top, ctx));
}

long Cyclotomic::basis_size() const { return euler_phi(order_); }

bool Cyclotomic::is_one() const {
    return den_ == 1 && terms_.size() == 1 && terms_[0].first == 0 &&
           terms_[0].second == 1;
}

bool Cyclotomic::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational Cyclotomic::rational_value() const {
    if (terms_.empty()) return Rational();
    if (!is_rational()) throw std::domain_error("value is not rational");
    return Rational(terms_[0].second, den_);
}

Rational Cyclotomic::coeff(long k) const {
    if (k < 0 || k >= basis_size())
        throw std::out_of_range("coefficient index outside the power basis");
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), k,
        [](const Term& t, long key) { return t.first < key; });
    if (it == terms_.end() || it->first != k) return Rational();
    return Rational(it->second, den_);
}

std::vector<Rational> Cyclotomic::coeffs() const {
    std::vector<Rational> out(static_cast<std::size_t>(basis_size()));
    for (const Term& t : terms_)
        out[static_cast<std::size_t>(t.first)] = Rational(t.second, den_);
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic v = *this;
    for (Term& t : v.terms_) t.second = -t.second;
    return v;
}

namespace {

void require_same_order(long a, long b) {
    if (a != b)
        throw std::invalid_argument(
            "cyclotomic order mismatch; lift operands to a common order first");
}

} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    require_same_order(order_, o.order_);
    mpz_class den = lcm(den_, o.den_);
    mpz_class fa = den / den_;
    mpz_class fb = den / o.den_;
    std::vector<Term> terms;
    terms.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            terms.emplace_back(terms_[i].first, terms_[i].second * fa);
            ++i;
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            terms.emplace_back(o.terms_[j].first, o.terms_[j].second * fb);
            ++j;
        } else {
            mpz_class c = terms_[i].second * fa + o.terms_[j].second * fb;
            if (sgn(c) != 0) terms.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return from_parts(order_, std::move(den), std::move(terms));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    require_same_order(order_, o.order_);
    if (is_zero() || o.is_zero()) return Cyclotomic(order_);
    FieldContext& ctx = context_for(order_);

    if (terms_.size() == 1 && o.terms_.size() == 1) {
        long e = terms_[0].first + o.terms_[0].first;
        if (e >= order_) e -= order_; // 2(phi-1) < m + phi, one fold suffices
        mpz_class c = terms_[0].second * o.terms_[0].second;
        std::vector<Term> terms;
        if (e < ctx.phi) {
            terms.emplace_back(e, std::move(c));
        } else {
            for (const Term& t : ctx.row(e))
                terms.emplace_back(t.first, t.second * c);
        }
        return from_parts(order_, den_ * o.den_, std::move(terms));
    }

    long top = terms_.back().first + o.terms_.back().first;
    auto& buf = scratch_buffer(static_cast<std::size_t>(top) + 1);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            buf[a.first + b.first] += a.second * b.second;
    return from_parts(order_, den_ * o.den_, reduce_collect(buf, top, ctx));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    if (r.is_zero() || is_zero()) return Cyclotomic(order_);
    Cyclotomic v = *this;
    v.den_ *= r.den();
    for (Term& t : v.terms_) t.second *= r.num();
    v.normalize();
    return v;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    return *this * o.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero in cyclotomic field");
    FieldContext& ctx = context_for(order_);

    if (terms_.size() == 1) {
        // (c/d * zeta^e)^-1 = d/c * zeta^(m-e)
        const auto& [e, c] = terms_[0];
        return root_of_unity(order_, order_ - e) * Rational(den_, c);
    }

    // Extended Euclid on the representing polynomial and the cyclotomic
    // polynomial: t1 * this = r1 (mod modulus) with r1 a nonzero constant,
    // because the modulus is irreducible over Q.
    QPoly r0(static_cast<std::size_t>(ctx.phi) + 1);
    for (long k = 0; k <= ctx.phi; ++k) r0[k] = ctx.modulus->coeff(k);
    QPoly r1(static_cast<std::size_t>(ctx.phi));
    for (const Term& t : terms_) r1[t.first] = mpq_class(t.second) / mpq_class(den_);
    QPoly t0{mpq_class(0)};
    QPoly t1{mpq_class(1)};
    while (qdeg(r1) > 0) {
        QPoly rem = r0;
        QPoly q = qdivmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly tn = qsub_mul(t0, q, t1);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (qdeg(r1) != 0)
        throw std::logic_error("cyclotomic inverse: non-constant gcd");

    std::vector<std::pair<long, Rational>> raw;
    for (long k = 0; k < static_cast<long>(t1.size()); ++k) {
        if (sgn(t1[k]) == 0) continue;
        raw.emplace_back(k, Rational(mpq_class(t1[k] / r1[0])));
    }
    return reduce(raw, order_);
}

Cyclotomic Cyclotomic::conjugate() const {
    if (is_rational()) return *this;
    FieldContext& ctx = context_for(order_);
    auto& buf = scratch_buffer(static_cast<std::size_t>(order_));
    long top = -1;
    for (const Term& t : terms_) {
        long e = t.first == 0 ? 0 : order_ - t.first;
        buf[e] += t.second;
        top = std::max(top, e);
    }
    return from_parts(order_, den_, reduce_collect(buf, top, ctx));
}

Cyclotomic Cyclotomic::lifted_to(long new_order) const {
    if (new_order < order_ || new_order % order_ != 0)
        throw std::invalid_argument(
            "lift target must be a positive multiple of the order");
    if (new_order == order_) return *this;
    FieldContext& ctx = context_for(new_order);
    long k = new_order / order_;
    if (terms_.empty()) return Cyclotomic(new_order);
    auto& buf = scratch_buffer(static_cast<std::size_t>(terms_.back().first) * k + 1);
    long top = -1;
    for (const Term& t : terms_) {
        buf[t.first * k] += t.second;
        top = std::max(top, t.first * k);
    }
    return from_parts(new_order, den_, reduce_collect(buf, top, ctx));
}

std::pair<Cyclotomic, Cyclotomic> Cyclotomic::lift_common(const Cyclotomic& a,
                                                          const Cyclotomic& b) {
    long m = common_cyclotomic_order(a.order_, b.order_);
    return {a.lifted_to(m), b.lifted_to(m)};
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return den_ == o.den_ && terms_ == o.terms_;
    auto [x, y] = lift_common(*this, o);
    return x.den_ == y.den_ && x.terms_ == y.terms_;
}

namespace {

void hash_mix(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

void hash_mpz(std::size_t& h, const mpz_class& z) {
    mpz_srcptr p = z.get_mpz_t();
    hash_mix(h, static_cast<std::size_t>(mpz_sgn(p)));
    std::size_t n = mpz_size(p);
    hash_mix(h, n);
    for (std::size_t i = 0; i < n; ++i)
        hash_mix(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
}

} // namespace

std::size_t Cyclotomic::hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    hash_mix(h, static_cast<std::size_t>(order_));
    hash_mpz(h, den_);
    for (const Term& t : terms_) {
        hash_mix(h, static_cast<std::size_t>(t.first));
        hash_mpz(h, t.second);
    }
    return h;
}

std::string Cyclotomic::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational r(t.second, den_);
        bool neg = r.sign() < 0;
        Rational a = neg ? -r : r;
        std::string coeff = a.to_string();
        bool unit = a.is_one();
        long e = t.first;
        std::string pw = e == 1 ? "z" : "z^" + std::to_string(e);
        std::string body;
        if (e == 0) body = coeff;
        else if (unit) body = pw;
        else body = coeff + "*" + pw;
        if (first) {
            if (!neg) out += body;
            else if (e == 0) out += "-" + body;
            else out += "-" + (unit ? "1*" + pw : body);
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

} // namespace qsing
