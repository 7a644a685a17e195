#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsing/cyclotomic.hpp"

namespace qsing {

/// Dense square matrix over one cyclotomic field Q(zeta_m). All entries
/// share the ambient order; operations between matrices require matching
/// dimension and ambient order (lift first).
class CycMatrix {
public:
    /// Zero matrix of the given dimension (>= 1) over Q(zeta_order).
    CycMatrix(long dim, long order);

    static CycMatrix identity(long dim, long order);
    static CycMatrix diagonal(const std::vector<Cyclotomic>& entries, long order);

    long dim() const { return dim_; }
    long ambient_order() const { return order_; }

    const Cyclotomic& at(long i, long j) const;
    void set(long i, long j, Cyclotomic v);

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;

    /// this + c * identity.
    CycMatrix plus_scalar_diag(const Cyclotomic& c) const;
    CycMatrix scaled(const Cyclotomic& c) const;
    CycMatrix conjugated() const; // entrywise conjugation
    CycMatrix lifted_to(long new_order) const;

    Cyclotomic trace() const;

    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    /// Consistent with equality only among matrices of one ambient order.
    std::size_t hash() const;

    std::string to_string() const;

private:
    long dim_;
    long order_;
    std::vector<Cyclotomic> e_; // row-major
};

/// Monic polynomial arithmetic is not needed here; CycPoly is a plain
/// coefficient vector over one cyclotomic field, used for characteristic
/// polynomials. Coefficients ascend; the zero polynomial is empty.
class CycPoly {
public:
    CycPoly() = default;
    explicit CycPoly(std::vector<Cyclotomic> coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    const Cyclotomic& coeff(long k) const;
    const std::vector<Cyclotomic>& coeffs() const { return c_; }

    Cyclotomic eval(const Cyclotomic& x) const;

    bool operator==(const CycPoly& o) const;
    bool operator!=(const CycPoly& o) const { return !(*this == o); }

    std::string to_string() const; // variable named t

private:
    void trim();

    std::vector<Cyclotomic> c_;
};

/// Eigenvalue multiset of a finite-order matrix: root-of-unity values with
/// positive multiplicities, ordered by exponent at the resolved order.
struct EigenMultiset {
    std::vector<std::pair<Cyclotomic, long>> entries;

    long total() const;
    /// Multiplicity of the given value, 0 when absent.
    long multiplicity(const Cyclotomic& value) const;

    bool operator==(const EigenMultiset& o) const;
};

/// mat_pow(a, k) = a^k by repeated squaring; k >= 0.
CycMatrix mat_pow(const CycMatrix& a, long k);

/// Exact determinant by Gaussian elimination with field inversion.
Cyclotomic determinant(const CycMatrix& a);

/// Exact rank by Gaussian elimination.
long rank(const CycMatrix& a);

/// Characteristic polynomial det(tI - a), monic of degree dim, by the
/// Faddeev-LeVerrier recurrence.
CycPoly char_poly(const CycMatrix& a);

/// Multiplicity of eigenvalue 1: dim - rank(g - I). Exact for the
/// finite-order (hence diagonalizable) matrices this library handles.
long mult_eigen_one(const CycMatrix& g);

/// Eigenvalues of g with multiplicities, where ord is the multiplicative
/// order of g; every eigenvalue is an ord-th root of unity, resolved over
/// lcm(ambient order, ord). Throws std::invalid_argument("order contract
/// violated") when g^ord != I.
EigenMultiset eigen_multiset(const CycMatrix& g, long ord);

} // namespace qsing
