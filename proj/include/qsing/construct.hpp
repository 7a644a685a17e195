#pragma once

#include <optional>
#include <utility>

#include "qsing/group.hpp"

namespace qsing {

/// Non-cyclic fixed-point-free subgroup of SL(n, C) for even n >= 2: n/2
/// identical 2x2 blocks of the quaternion pair diag(i, -i), antidiag(i, i)
/// over Q(zeta_4). The group has order 8. Throws std::invalid_argument
/// ("even construction requires even n") for odd or non-positive n.
FiniteMatrixGroup construct_even(long n);

/// Smallest prime congruent to 1 mod 2q for an odd prime q. The search is
/// capped at 10^6 and throws std::runtime_error if no prime is found.
long dirichlet_prime(long q);

/// Smallest unit of multiplicative order exactly q modulo the prime l;
/// requires q prime and q | l - 1.
long order_q_unit(long l, long q);

/// Parameters of the metacyclic family in odd composite dimension n = q*n'
/// with q an odd prime divisor of n, q <= n', l = dirichlet_prime(q) and
/// alpha = order_q_unit(l, q).
struct OddCompositeParams {
    long n;
    long q;
    long n_prime;
    long l;
    long alpha;

    /// Validates n and picks q (smallest prime factor when absent).
    /// Throws std::invalid_argument for even or non-composite n; the odd
    /// prime case reports "no such construction exists (Theorem 1.1)".
    static OddCompositeParams choose(long n, std::optional<long> q = {});
};

/// Generator pair (a, b) of the metacyclic group of order q^2 * l inside
/// GL(q, Q(zeta_ql)): a is the cyclic shift with corner entry x = zeta_q,
/// b = diag(z^(alpha^0), ..., z^(alpha^(q-1))) with z = zeta_l. They
/// satisfy a^(-1) b a = b^alpha, ord(a) = q^2, ord(b) = l.
std::pair<CycMatrix, CycMatrix> metacyclic_generators(const OddCompositeParams& p);

/// Block-diagonal embedding GL(q) -> GL(q * n') carrying c to
/// (q + n')/2 copies of c followed by (n' - q)/2 copies of its entrywise
/// conjugate. For odd n' >= q this is determinant-trivializing on the
/// metacyclic generators. Throws std::invalid_argument when q or n' is
/// even or n' < q.
CycMatrix conjugate_embed(const CycMatrix& c, long n_prime);

/// Non-cyclic fixed-point-free subgroup of SL(n, C) for odd composite n:
/// the conjugate_embed image of the metacyclic pair. Group order q^2 * l.
FiniteMatrixGroup construct_odd_composite(long n, std::optional<long> q = {});

} // namespace qsing
