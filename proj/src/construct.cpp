#include "qsing/construct.hpp"

#include <stdexcept>
#include <string>

#include "qsing/numtheory.hpp"

namespace qsing {

namespace {

CycMatrix block_diag(const std::vector<const CycMatrix*>& blocks) {
    long dim = 0;
    for (const CycMatrix* b : blocks) dim += b->dim();
    CycMatrix out(dim, blocks.front()->ambient_order());
    long off = 0;
    for (const CycMatrix* b : blocks) {
        for (long i = 0; i < b->dim(); ++i)
            for (long j = 0; j < b->dim(); ++j)
                if (!b->at(i, j).is_zero()) out.set(off + i, off + j, b->at(i, j));
        off += b->dim();
    }
    return out;
}

CycMatrix block_repeat(const CycMatrix& block, long copies) {
    std::vector<const CycMatrix*> blocks(static_cast<std::size_t>(copies), &block);
    return block_diag(blocks);
}

} // namespace

FiniteMatrixGroup construct_even(long n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("even construction requires even n");

    // Quaternion pair in GL(2, Q(zeta_4)): a = diag(i, -i), b maps
    // e_1 -> i e_2, e_2 -> i e_1; together they generate a group of
    // order 8 with no eigenvalue 1 off the identity.
    CycMatrix a2(2, 4);
    a2.set(0, 0, Cyclotomic::root_of_unity(4, 1));
    a2.set(1, 1, Cyclotomic::root_of_unity(4, 3));
    CycMatrix b2(2, 4);
    b2.set(0, 1, Cyclotomic::root_of_unity(4, 1));
    b2.set(1, 0, Cyclotomic::root_of_unity(4, 1));

    long copies = n / 2;
    return FiniteMatrixGroup::closure(
        {block_repeat(a2, copies), block_repeat(b2, copies)}, 8);
}

long dirichlet_prime(long q) {
    if (q == 2 || !is_prime(q))
        throw std::invalid_argument("dirichlet_prime requires an odd prime");
    for (long l = 2 * q + 1; l <= 1000000; l += 2 * q)
        if (is_prime(l)) return l;
    throw std::runtime_error("no prime congruent to 1 mod 2q below 1000000");
}

long order_q_unit(long l, long q) {
    if (!is_prime(l) || !is_prime(q) || (l - 1) % q != 0)
        throw std::invalid_argument(
            "order_q_unit requires primes with q dividing l - 1");
    for (long a = 2; a < l; ++a)
        if (pow_mod(a, q, l) == 1) return a; // a != 1 and q prime force order q
    throw std::logic_error("no unit of order q modulo l");
}

OddCompositeParams OddCompositeParams::choose(long n, std::optional<long> q) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument(
            "odd-composite construction requires odd composite n");
    if (is_prime(n))
        throw std::invalid_argument(
            "n = " + std::to_string(n) +
            " is an odd prime; no such construction exists (Theorem 1.1)");

    OddCompositeParams p;
    p.n = n;
    p.q = q.value_or(smallest_prime_factor(n));
    if (p.q < 3 || !is_prime(p.q) || n % p.q != 0)
        throw std::invalid_argument("q must be an odd prime divisor of n");
    p.n_prime = n / p.q;
    if (p.q > p.n_prime)
        throw std::invalid_argument(
            "q = " + std::to_string(p.q) + " exceeds n/q = " +
            std::to_string(p.n_prime) + "; the family needs q <= n/q");
    p.l = dirichlet_prime(p.q);
    p.alpha = order_q_unit(p.l, p.q);
    return p;
}

std::pair<CycMatrix, CycMatrix> metacyclic_generators(const OddCompositeParams& p) {
    const long m = p.q * p.l;

    // a: cyclic shift of the basis with corner x = zeta_q, so a^q = x*I
    // and ord(a) = q^2.
    CycMatrix a(p.q, m);
    a.set(0, p.q - 1, Cyclotomic::root_of_unity(m, p.l));
    for (long i = 1; i < p.q; ++i) a.set(i, i - 1, Cyclotomic::one(m));

    // b = diag(z^(alpha^0), ..., z^(alpha^(q-1))) with z = zeta_l; the
    // shift conjugates b to b^alpha.
    CycMatrix b(p.q, m);
    for (long t = 0; t < p.q; ++t)
        b.set(t, t, Cyclotomic::root_of_unity(m, p.q * pow_mod(p.alpha, t, p.l)));
    return {std::move(a), std::move(b)};
}

CycMatrix conjugate_embed(const CycMatrix& c, long n_prime) {
    const long q = c.dim();
    if (q % 2 == 0 || n_prime % 2 == 0 || n_prime < q)
        throw std::invalid_argument(
            "conjugate embedding requires odd block size and odd n' >= block size");
    CycMatrix conj = c.conjugated();
    std::vector<const CycMatrix*> blocks;
    for (long i = 0; i < (q + n_prime) / 2; ++i) blocks.push_back(&c);
    for (long i = 0; i < (n_prime - q) / 2; ++i) blocks.push_back(&conj);
    return block_diag(blocks);
}

FiniteMatrixGroup construct_odd_composite(long n, std::optional<long> q) {
    OddCompositeParams p = OddCompositeParams::choose(n, q);
    auto [a, b] = metacyclic_generators(p);
    std::size_t expected = static_cast<std::size_t>(p.q) * p.q * p.l;
    return FiniteMatrixGroup::closure(
        {conjugate_embed(a, p.n_prime), conjugate_embed(b, p.n_prime)}, expected);
}

} // namespace qsing
