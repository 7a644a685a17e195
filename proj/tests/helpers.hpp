#pragma once

#include <random>
#include <vector>

#include "qsing/cyclotomic.hpp"
#include "qsing/group.hpp"
#include "qsing/matrix.hpp"

namespace qsing::test {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long bound = 9) {
    long num = pick(rng, -bound, bound);
    long den = pick(rng, 1, bound);
    return Rational(num, den);
}

inline Cyclotomic random_cyclotomic(Rng& rng, long order, long terms = 3) {
    std::vector<std::pair<long, Rational>> raw;
    for (long t = 0; t < terms; ++t)
        raw.emplace_back(pick(rng, 0, 2 * order), random_rational(rng));
    return Cyclotomic::reduce(raw, order);
}

inline Cyclotomic random_nonzero_cyclotomic(Rng& rng, long order) {
    for (;;) {
        Cyclotomic v = random_cyclotomic(rng, order);
        if (!v.is_zero()) return v;
    }
}

/// Invertible conjugator built from elementary row operations and swaps;
/// entries stay in {0, +-1, roots of unity}. Returns (c, c_inverse).
inline std::pair<CycMatrix, CycMatrix> random_conjugator(Rng& rng, long dim,
                                                         long order,
                                                         long factors = 4) {
    CycMatrix c = CycMatrix::identity(dim, order);
    CycMatrix cinv = CycMatrix::identity(dim, order);
    for (long f = 0; f < factors; ++f) {
        if (dim > 1 && pick(rng, 0, 2) == 0) {
            // swap two coordinates; a swap is its own inverse
            long i = pick(rng, 0, dim - 1);
            long j = pick(rng, 0, dim - 1);
            if (i == j) continue;
            CycMatrix s = CycMatrix::identity(dim, order);
            s.set(i, i, Cyclotomic(order));
            s.set(j, j, Cyclotomic(order));
            s.set(i, j, Cyclotomic::one(order));
            s.set(j, i, Cyclotomic::one(order));
            c = c * s;
            cinv = s * cinv;
        } else if (dim > 1) {
            // shear e_j += v e_i, inverted by the negated shear
            long i = pick(rng, 0, dim - 1);
            long j = pick(rng, 0, dim - 1);
            if (i == j) continue;
            Cyclotomic v = Cyclotomic::root_of_unity(order, pick(rng, 0, order - 1));
            if (pick(rng, 0, 1)) v = -v;
            CycMatrix e = CycMatrix::identity(dim, order);
            e.set(i, j, v);
            CycMatrix einv = CycMatrix::identity(dim, order);
            einv.set(i, j, -v);
            c = c * e;
            cinv = einv * cinv;
        } else {
            // dim 1: scale by a root of unity
            Cyclotomic v = Cyclotomic::root_of_unity(order, pick(rng, 0, order - 1));
            CycMatrix e(1, order);
            e.set(0, 0, v);
            CycMatrix einv(1, order);
            einv.set(0, 0, v.inverse());
            c = c * e;
            cinv = einv * cinv;
        }
    }
    return {c, cinv};
}

/// Cyclic diagonal group generated by diag(zeta_p^(e_0), ..., zeta_p^(e_k)).
inline FiniteMatrixGroup cyclic_diag_group(long p,
                                           const std::vector<long>& exps) {
    std::vector<Cyclotomic> diag;
    diag.reserve(exps.size());
    for (long e : exps) diag.push_back(Cyclotomic::root_of_unity(p, e));
    return FiniteMatrixGroup::closure({CycMatrix::diagonal(diag, p)},
                                      static_cast<std::size_t>(p) + 1);
}

/// Multiplicity of 1 as a root of p, by repeated synthetic division by
/// (t - 1). Independent of the rank-based eigenvalue path.
inline long root_one_multiplicity(const CycPoly& p) {
    if (p.is_zero()) return 0;
    const long order = p.coeffs().front().order();
    std::vector<Cyclotomic> c = p.coeffs();
    long mult = 0;
    for (;;) {
        Cyclotomic value(order);
        for (auto it = c.rbegin(); it != c.rend(); ++it) value = value + *it;
        if (!value.is_zero() || c.size() <= 1) return mult;
        // c / (t - 1): descending synthetic division, exact because 1 is a root
        std::vector<Cyclotomic> q(c.size() - 1, Cyclotomic(order));
        Cyclotomic carry(order);
        for (std::size_t k = c.size(); k-- > 1;) {
            carry = carry + c[k];
            q[k - 1] = carry;
        }
        c = std::move(q);
        ++mult;
    }
}

/// Canonical-form invariants every Cyclotomic must satisfy.
inline bool canonical_form_ok(const Cyclotomic& v) {
    if (sgn(v.common_den()) <= 0) return false;
    long prev = -1;
    mpz_class g = v.common_den();
    for (const auto& [e, c] : v.terms()) {
        if (e <= prev || e >= v.basis_size() || sgn(c) == 0) return false;
        prev = e;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (v.terms().empty()) return v.common_den() == 1;
    return g == 1;
}

} // namespace qsing::test
