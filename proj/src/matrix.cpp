#include "qsing/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qsing {

namespace {

void require_compatible(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimension mismatch");
    if (a.ambient_order() != b.ambient_order())
        throw std::invalid_argument(
            "ambient order mismatch; lift operands to a common order first");
}

} // namespace

CycMatrix::CycMatrix(long dim, long order)
    : dim_(dim), order_(order),
      e_(dim >= 1 ? static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)
                  : 0,
         Cyclotomic(order)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

CycMatrix CycMatrix::identity(long dim, long order) {
    CycMatrix m(dim, order);
    Cyclotomic one = Cyclotomic::one(order);
    for (long i = 0; i < dim; ++i) m.set(i, i, one);
    return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<Cyclotomic>& entries, long order) {
    if (entries.empty())
        throw std::invalid_argument("diagonal needs at least one entry");
    CycMatrix m(static_cast<long>(entries.size()), order);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(static_cast<long>(i), static_cast<long>(i), entries[i]);
    return m;
}

const Cyclotomic& CycMatrix::at(long i, long j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("matrix index out of range");
    return e_[static_cast<std::size_t>(i) * dim_ + j];
}

void CycMatrix::set(long i, long j, Cyclotomic v) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("matrix index out of range");
    if (v.order() != order_)
        throw std::invalid_argument("entry order mismatch; lift the entry first");
    e_[static_cast<std::size_t>(i) * dim_ + j] = std::move(v);
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    require_compatible(*this, o);
    CycMatrix out(dim_, order_);
    for (long i = 0; i < dim_; ++i) {
        for (long k = 0; k < dim_; ++k) {
            const Cyclotomic& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < dim_; ++j) {
                const Cyclotomic& b = o.at(k, j);
                if (b.is_zero()) continue;
                Cyclotomic& slot = out.e_[static_cast<std::size_t>(i) * dim_ + j];
                slot = slot.is_zero() ? a * b : slot + a * b;
            }
        }
    }
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    require_compatible(*this, o);
    CycMatrix out(dim_, order_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    require_compatible(*this, o);
    CycMatrix out(dim_, order_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

CycMatrix CycMatrix::plus_scalar_diag(const Cyclotomic& c) const {
    if (c.order() != order_)
        throw std::invalid_argument("entry order mismatch; lift the entry first");
    CycMatrix out = *this;
    for (long i = 0; i < dim_; ++i) out.set(i, i, at(i, i) + c);
    return out;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& c) const {
    if (c.order() != order_)
        throw std::invalid_argument("entry order mismatch; lift the entry first");
    CycMatrix out(dim_, order_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].is_zero()) out.e_[k] = e_[k] * c;
    return out;
}

CycMatrix CycMatrix::conjugated() const {
    CycMatrix out(dim_, order_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].is_zero()) out.e_[k] = e_[k].conjugate();
    return out;
}

CycMatrix CycMatrix::lifted_to(long new_order) const {
    CycMatrix out(dim_, new_order);
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) out.set(i, j, at(i, j).lifted_to(new_order));
    return out;
}

Cyclotomic CycMatrix::trace() const {
    Cyclotomic t(order_);
    for (long i = 0; i < dim_; ++i) t = t + at(i, i);
    return t;
}

bool CycMatrix::is_identity() const {
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) {
            const Cyclotomic& v = at(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_zero() const {
    for (const Cyclotomic& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

std::size_t CycMatrix::hash() const {
    std::size_t h = 0x84222325cbf29ce4ull;
    h ^= static_cast<std::size_t>(dim_) + (h << 6);
    h ^= static_cast<std::size_t>(order_) + (h << 7);
    for (const Cyclotomic& v : e_) h ^= v.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < dim_; ++i) {
        for (long j = 0; j < dim_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << '\n';
    }
    return os.str();
}

CycMatrix mat_pow(const CycMatrix& a, long k) {
    if (k < 0) throw std::invalid_argument("mat_pow requires a non-negative power");
    CycMatrix result = CycMatrix::identity(a.dim(), a.ambient_order());
    CycMatrix base = a;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

namespace {

/// Row-echelon elimination shared by determinant and rank. Returns the
/// number of pivots; when det is non-null accumulates the product of
/// pivots with the permutation sign into *det (meaningful for full rank).
long eliminate(CycMatrix work, Cyclotomic* det) {
    const long n = work.dim();
    const long m = work.ambient_order();
    long pivots = 0;
    bool negate = false;
    for (long col = 0; col < n && pivots < n; ++col) {
        long p = -1;
        for (long r = pivots; r < n; ++r) {
            if (!work.at(r, col).is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != pivots) {
            for (long j = col; j < n; ++j) {
                Cyclotomic tmp = work.at(p, j);
                work.set(p, j, work.at(pivots, j));
                work.set(pivots, j, std::move(tmp));
            }
            negate = !negate;
        }
        const Cyclotomic pivot = work.at(pivots, col);
        if (det) *det = *det * pivot;
        const Cyclotomic inv = pivot.inverse();
        for (long r = pivots + 1; r < n; ++r) {
            if (work.at(r, col).is_zero()) continue;
            Cyclotomic f = work.at(r, col) * inv;
            work.set(r, col, Cyclotomic(m));
            for (long j = col + 1; j < n; ++j) {
                if (work.at(pivots, j).is_zero()) continue;
                work.set(r, j, work.at(r, j) - f * work.at(pivots, j));
            }
        }
        ++pivots;
    }
    if (det && negate) *det = -*det;
    return pivots;
}

} // namespace

Cyclotomic determinant(const CycMatrix& a) {
    Cyclotomic det = Cyclotomic::one(a.ambient_order());
    long pivots = eliminate(a, &det);
    if (pivots < a.dim()) return Cyclotomic(a.ambient_order());
    return det;
}

long rank(const CycMatrix& a) { return eliminate(a, nullptr); }

CycPoly char_poly(const CycMatrix& a) {
    const long n = a.dim();
    const long m = a.ambient_order();
    std::vector<Cyclotomic> c(static_cast<std::size_t>(n) + 1, Cyclotomic(m));
    c[static_cast<std::size_t>(n)] = Cyclotomic::one(m);

    // Faddeev-LeVerrier: M_1 = a, c_{n-k} = -tr(M_k)/k,
    // M_k = a * (M_{k-1} + c_{n-k+1} I).
    CycMatrix mk = a;
    c[static_cast<std::size_t>(n - 1)] = -mk.trace();
    for (long k = 2; k <= n; ++k) {
        mk = a * mk.plus_scalar_diag(c[static_cast<std::size_t>(n - k + 1)]);
        c[static_cast<std::size_t>(n - k)] = mk.trace() * Rational(-1, k);
    }
    return CycPoly(std::move(c));
}

long mult_eigen_one(const CycMatrix& g) {
    Cyclotomic minus_one = -Cyclotomic::one(g.ambient_order());
    return g.dim() - rank(g.plus_scalar_diag(minus_one));
}

EigenMultiset eigen_multiset(const CycMatrix& g, long ord) {
    if (ord < 1) throw std::invalid_argument("order must be >= 1");
    if (!mat_pow(g, ord).is_identity())
        throw std::invalid_argument("order contract violated");
    long m = common_cyclotomic_order(g.ambient_order(), ord);
    CycMatrix lifted = g.lifted_to(m);
    EigenMultiset out;
    long found = 0;
    for (long k = 0; k < ord; ++k) {
        Cyclotomic lambda = Cyclotomic::root_of_unity(m, (m / ord) * k);
        long mult = g.dim() - rank(lifted.plus_scalar_diag(-lambda));
        if (mult > 0) {
            out.entries.emplace_back(std::move(lambda), mult);
            found += mult;
        }
    }
    if (found != g.dim())
        throw std::logic_error("eigenvalue multiplicities do not sum to the dimension");
    return out;
}

CycPoly::CycPoly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void CycPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool CycPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

const Cyclotomic& CycPoly::coeff(long k) const {
    static const Cyclotomic zero(1);
    if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

Cyclotomic CycPoly::eval(const Cyclotomic& x) const {
    if (c_.empty()) return Cyclotomic(x.order());
    long m = x.order();
    for (const Cyclotomic& c : c_) m = common_cyclotomic_order(m, c.order());
    Cyclotomic xl = x.lifted_to(m);
    Cyclotomic acc = c_.back().lifted_to(m);
    for (long k = static_cast<long>(c_.size()) - 2; k >= 0; --k)
        acc = acc * xl + c_[static_cast<std::size_t>(k)].lifted_to(m);
    return acc;
}

bool CycPoly::operator==(const CycPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != o.c_[k]) return false;
    return true;
}

std::string CycPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const Cyclotomic& c = coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (k == 0) {
            out += cs;
            continue;
        }
        std::string pw = k == 1 ? "t" : "t^" + std::to_string(k);
        if (c.is_one()) out += pw;
        else if (c.is_rational() && c.terms().size() == 1)
            out += cs + "*" + pw;
        else
            out += "(" + cs + ")*" + pw;
    }
    return out;
}

long EigenMultiset::total() const {
    long t = 0;
    for (const auto& [v, m] : entries) t += m;
    return t;
}

long EigenMultiset::multiplicity(const Cyclotomic& value) const {
    for (const auto& [v, m] : entries)
        if (v == value) return m;
    return 0;
}

bool EigenMultiset::operator==(const EigenMultiset& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (std::size_t k = 0; k < entries.size(); ++k)
        if (entries[k].second != o.entries[k].second ||
            entries[k].first != o.entries[k].first)
            return false;
    return true;
}

} // namespace qsing
