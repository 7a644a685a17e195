#include "qsing/verify.hpp"

#include <stdexcept>
#include <string>

#include "qsing/classify.hpp"
#include "qsing/construct.hpp"
#include "qsing/group.hpp"
#include "qsing/numtheory.hpp"

namespace qsing {

namespace {

void check(SuiteResult& r, bool ok, const std::string& name,
           const std::string& detail = {}) {
    if (ok) return;
    r.passed = false;
    r.failures.push_back(detail.empty() ? name : name + ": " + detail);
}

void check_report_common(SuiteResult& r, const ClassificationReport& rep) {
    check(r, rep.in_sl, "in_sl");
    check(r, !rep.has_pseudo_reflections, "no pseudo-reflections");
    check(r, rep.fixed_point_free, "fixed_point_free");
    check(r, rep.isolated, "isolated");
    check(r, rep.sing_locus_dim && *rep.sing_locus_dim == 0, "sing_locus_dim 0");
    check(r, rep.gorenstein == Gorenstein::Yes, "gorenstein true");
}

/// Every non-identity element must move every nonzero vector.
void check_fixed_point_free_elements(SuiteResult& r, const FiniteMatrixGroup& g,
                                     const std::string& label) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == g.identity_index()) continue;
        if (mult_eigen_one(g.element(i)) != 0) {
            check(r, false, label, "element " + std::to_string(i) +
                                       " has eigenvalue 1");
            return;
        }
    }
}

SuiteResult run_even_suite(long n) {
    SuiteResult r{"n=" + std::to_string(n) + " even family"};
    FiniteMatrixGroup g = construct_even(n);
    check(r, g.size() == 8, "group order 8",
          "got " + std::to_string(g.size()));
    check_fixed_point_free_elements(r, g, "fixed-point-free elements");

    ClassificationReport rep = classify(g);
    check_report_common(r, rep);
    check(r, !rep.cyclic, "not cyclic");
    check(r, !rep.abelian, "not abelian");
    check(r, rep.theorem_witness == TheoremWitness::NotApplicable,
          "witness not-applicable");
    if (rep.theorem_witness == TheoremWitness::Violation) r.violation = true;
    return r;
}

SuiteResult run_odd_prime_suite(long n) {
    SuiteResult r{"n=" + std::to_string(n) + " odd prime"};

    // Cyclic witness: diag(zeta_p, ..., zeta_p, zeta_p^(p-n+1)) for the
    // smallest prime p > n. Exponents are nonzero mod p and sum to p, so
    // the group is fixed-point-free and lands in SL(n).
    long p = n + 1;
    while (!is_prime(p)) ++p;
    std::vector<Cyclotomic> diag(static_cast<std::size_t>(n),
                                 Cyclotomic::root_of_unity(p, 1));
    diag.back() = Cyclotomic::root_of_unity(p, p - n + 1);
    FiniteMatrixGroup g = FiniteMatrixGroup::closure(
        {CycMatrix::diagonal(diag, p)}, static_cast<std::size_t>(p));
    check(r, g.size() == static_cast<std::size_t>(p), "group order p");

    ClassificationReport rep = classify(g);
    check_report_common(r, rep);
    check(r, rep.cyclic, "cyclic");
    check(r, rep.theorem_witness == TheoremWitness::Holds, "witness holds");
    if (rep.theorem_witness == TheoremWitness::Violation) r.violation = true;

    bool refused = false;
    try {
        construct_odd_composite(n);
    } catch (const std::invalid_argument& e) {
        refused = std::string(e.what()).find("no such construction exists") !=
                  std::string::npos;
    }
    check(r, refused, "odd-composite constructor refuses odd prime n");
    return r;
}

SuiteResult run_odd_composite_suite(long n) {
    SuiteResult r{"n=" + std::to_string(n) + " odd composite family"};
    OddCompositeParams p = OddCompositeParams::choose(n);
    const long m = p.q * p.l;
    auto [a, b] = metacyclic_generators(p);

    // 1 + alpha + ... + alpha^(q-1) = 0 mod l, the trace relation that
    // makes det b trivial.
    long s = 0;
    for (long t = 0; t < p.q; ++t) s = (s + pow_mod(p.alpha, t, p.l)) % p.l;
    check(r, s == 0, "alpha power sum divisible by l");

    check(r, determinant(a) == Cyclotomic::root_of_unity(m, p.l), "det(a) = zeta_q");
    check(r, determinant(b).is_one(), "det(b) = 1");
    check(r, element_order(a) == p.q * p.q, "ord(a) = q^2");
    check(r, element_order(b) == p.l, "ord(b) = l");
    check(r, b * a == a * mat_pow(b, p.alpha), "b a = a b^alpha");
    check(r, a * b != b * a, "a and b do not commute");

    const std::size_t expected =
        static_cast<std::size_t>(p.q) * static_cast<std::size_t>(p.q) *
        static_cast<std::size_t>(p.l);
    FiniteMatrixGroup base = FiniteMatrixGroup::closure({a, b}, expected);
    check(r, base.size() == expected, "base group order q^2 l",
          "got " + std::to_string(base.size()));
    check_fixed_point_free_elements(r, base, "base group fixed-point-free");

    CycMatrix fa = conjugate_embed(a, p.n_prime);
    CycMatrix fb = conjugate_embed(b, p.n_prime);
    check(r, determinant(fa).is_one(), "det f(a) = 1");
    check(r, determinant(fb).is_one(), "det f(b) = 1");
    check(r, fa * fb != fb * fa, "embedded generators do not commute");

    FiniteMatrixGroup g = construct_odd_composite(n);
    check(r, g.size() == expected, "embedded group order q^2 l",
          "got " + std::to_string(g.size()));

    ClassificationReport rep = classify(g);
    check_report_common(r, rep);
    check(r, !rep.cyclic, "not cyclic");
    check(r, !rep.abelian, "not abelian");
    check(r, rep.theorem_witness == TheoremWitness::NotApplicable,
          "witness not-applicable");
    if (rep.theorem_witness == TheoremWitness::Violation) r.violation = true;
    return r;
}

} // namespace

std::vector<long> default_verify_dims() { return {2, 3, 4, 5, 6, 7, 9, 15}; }

std::vector<SuiteResult> run_verify_suites(const std::vector<long>& dims) {
    std::vector<SuiteResult> results;
    results.reserve(dims.size());
    for (long n : dims) {
        if (n < 2) throw std::invalid_argument("verification needs n >= 2");
        if (n % 2 == 0)
            results.push_back(run_even_suite(n));
        else if (is_prime(n))
            results.push_back(run_odd_prime_suite(n));
        else
            results.push_back(run_odd_composite_suite(n));
    }
    return results;
}

} // namespace qsing
