#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "qsing/cyclotomic.hpp"
#include "qsing/intpoly.hpp"
#include "qsing/numtheory.hpp"

using namespace qsing;
using namespace qsing::test;

namespace {

// Independent schoolbook multiplication, deliberately not IntPoly::operator*.
std::vector<mpz_class> naive_mul(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Cyclotomic zeta(long m, long e = 1) { return Cyclotomic::root_of_unity(m, e); }

Cyclotomic rat(long num, long den, long order) {
    return Cyclotomic::from_rational(Rational(num, den), order);
}

} // namespace

TEST_CASE("cyclotomic polynomial product recovers x^m - 1") {
    for (long m = 1; m <= 60; ++m) {
        std::vector<mpz_class> prod{1};
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) prod = naive_mul(prod, cyclotomic_polynomial(d).coeffs());
        std::vector<mpz_class> expect(static_cast<std::size_t>(m) + 1, mpz_class(0));
        expect.front() = -1;
        expect.back() = 1;
        CHECK(prod == expect);
        CHECK(cyclotomic_polynomial(m).degree() == euler_phi(m));
        CHECK(cyclotomic_polynomial(m).is_monic());
    }
}

TEST_CASE("cyclotomic polynomial values") {
    auto coeffs = [](long m) { return cyclotomic_polynomial(m).coeffs(); };
    CHECK(coeffs(1) == std::vector<mpz_class>{-1, 1});
    CHECK(coeffs(2) == std::vector<mpz_class>{1, 1});
    CHECK(coeffs(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(coeffs(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(coeffs(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(coeffs(7) == std::vector<mpz_class>{1, 1, 1, 1, 1, 1, 1});
    CHECK(coeffs(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
    CHECK(coeffs(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    // first order with a coefficient outside {-1, 0, 1}
    CHECK(cyclotomic_polynomial(105).coeff(7) == -2);
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("roots of unity satisfy their defining relations") {
    CHECK(zeta(4, 2) == rat(-1, 1, 4));
    CHECK(zeta(6, 3) == rat(-1, 1, 6));
    CHECK(zeta(8, 4) == rat(-1, 1, 8));
    CHECK(zeta(1) == Cyclotomic::one(1));
    CHECK(zeta(2) == rat(-1, 1, 2));
    for (long m : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 9L, 12L, 21L}) {
        CHECK(zeta(m, m) == Cyclotomic::one(m));
        CHECK(zeta(m, -1) == zeta(m, m - 1));
        Cyclotomic p = Cyclotomic::one(m);
        for (long k = 1; k < m; ++k) {
            p = p * zeta(m);
            CHECK(p == zeta(m, k));
            if (m > 1) CHECK_FALSE(p == Cyclotomic::one(m));
        }
    }
    // vanishing sums: 1 + zeta_3 + zeta_3^2 and the order-9 relation
    CHECK((Cyclotomic::one(3) + zeta(3, 1) + zeta(3, 2)).is_zero());
    CHECK((Cyclotomic::one(9) + zeta(9, 3) + zeta(9, 6)).is_zero());
}

TEST_CASE("reduce folds exponents and merges duplicates") {
    CHECK(Cyclotomic::reduce({{5, Rational(1)}}, 4) == zeta(4, 1));
    CHECK(Cyclotomic::reduce({{1, Rational(1, 2)}, {1, Rational(1, 2)}}, 4) ==
          zeta(4, 1));
    CHECK(Cyclotomic::reduce({{2, Rational(1)}, {1, Rational(1)}, {0, Rational(1)}},
                             3)
              .is_zero());
    CHECK(Cyclotomic::reduce({}, 7).is_zero());
    CHECK_THROWS_WITH_AS(Cyclotomic::reduce({}, 0),
                         "cyclotomic order must be >= 1", std::invalid_argument);
}

TEST_CASE("rational embedding") {
    Cyclotomic half = rat(1, 2, 12);
    CHECK(half.is_rational());
    CHECK(half.rational_value() == Rational(1, 2));
    CHECK_FALSE(zeta(12).is_rational());
    CHECK_THROWS_AS(zeta(12).rational_value(), std::domain_error);
    CHECK(Cyclotomic(5).is_zero());
    CHECK(Cyclotomic::one(5).is_one());
    CHECK(rat(0, 3, 5) == Cyclotomic::zero(5));
    // zeta_3 + zeta_3^2 = -1 lands back in Q
    Cyclotomic s = zeta(3, 1) + zeta(3, 2);
    CHECK(s.is_rational());
    CHECK(s.rational_value() == Rational(-1));
}

TEST_CASE("coefficient access matches the power basis") {
    Cyclotomic v = rat(2, 3, 12) + zeta(12, 2) * Rational(-5, 4);
    CHECK(v.basis_size() == 4);
    CHECK(v.coeff(0) == Rational(2, 3));
    CHECK(v.coeff(1) == Rational(0));
    CHECK(v.coeff(2) == Rational(-5, 4));
    CHECK(v.coeff(3) == Rational(0));
    CHECK(v.coeffs() == std::vector<Rational>{Rational(2, 3), Rational(0),
                                              Rational(-5, 4), Rational(0)});
    CHECK_THROWS_AS(v.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(v.coeff(-1), std::out_of_range);
}

TEST_CASE("field arithmetic identities") {
    // (1 + zeta_3)(1 + zeta_3^2) = 1
    CHECK((Cyclotomic::one(3) + zeta(3, 1)) * (Cyclotomic::one(3) + zeta(3, 2)) ==
          Cyclotomic::one(3));
    CHECK(zeta(4).inverse() == -zeta(4));
    CHECK(zeta(4).inverse() == zeta(4, 3));
    CHECK(rat(3, 7, 6).inverse() == rat(7, 3, 6));
    CHECK((zeta(5) - zeta(5)).is_zero());
    CHECK(-(-zeta(5)) == zeta(5));

    Rng rng(20260815);
    std::vector<long> orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 21, 24};
    for (int t = 0; t < 150; ++t) {
        long m = orders[static_cast<std::size_t>(pick(rng, 0, 14))];
        Cyclotomic a = random_cyclotomic(rng, m);
        Cyclotomic b = random_nonzero_cyclotomic(rng, m);
        Cyclotomic c = random_cyclotomic(rng, m);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(b * b.inverse() == Cyclotomic::one(m));
        CHECK((a / b) * b == a);
        CHECK(canonical_form_ok(a * b));
        CHECK(canonical_form_ok(a + c));
        CHECK(canonical_form_ok(b.inverse()));
        CHECK(a * Rational(1) == a);
        CHECK(a * Rational(-2, 3) == a * rat(-2, 3, m));
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_WITH_AS(Cyclotomic::zero(5).inverse(),
                         "division by zero in cyclotomic field",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(zeta(5) / Cyclotomic::zero(5),
                         "division by zero in cyclotomic field",
                         std::domain_error);
}

TEST_CASE("operations demand one order") {
    CHECK_THROWS_WITH_AS(zeta(3) + zeta(4),
                         "cyclotomic order mismatch; lift operands to a common "
                         "order first",
                         std::invalid_argument);
    CHECK_THROWS_AS(zeta(3) * zeta(4), std::invalid_argument);
    CHECK_THROWS_AS(zeta(3) - zeta(4), std::invalid_argument);
    CHECK_THROWS_AS(zeta(3) / zeta(4), std::invalid_argument);
}

TEST_CASE("conjugation is the automorphism zeta -> zeta^(m-1)") {
    CHECK(zeta(4).conjugate() == -zeta(4));
    CHECK(rat(5, 3, 8).conjugate() == rat(5, 3, 8));
    Rng rng(77);
    for (int t = 0; t < 80; ++t) {
        long m = pick(rng, 1, 24);
        long k = pick(rng, 0, m - 1);
        CHECK(zeta(m, k).conjugate() == zeta(m, (m - k) % m));
        Cyclotomic a = random_cyclotomic(rng, m);
        Cyclotomic b = random_cyclotomic(rng, m);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        // a * conj(a) is fixed by conjugation
        Cyclotomic norm = a * a.conjugate();
        CHECK(norm.conjugate() == norm);
    }
}

TEST_CASE("lifting preserves values") {
    CHECK(zeta(2).lifted_to(6) == zeta(6, 3));
    CHECK(zeta(3).lifted_to(6) == zeta(6, 2));
    CHECK(zeta(2, 1) == zeta(6, 3)); // equality lifts on its own
    CHECK_FALSE(zeta(3) == zeta(4));
    CHECK(rat(7, 2, 3).lifted_to(21) == rat(7, 2, 21));
    CHECK_THROWS_WITH_AS(zeta(4).lifted_to(6),
                         "lift target must be a positive multiple of the order",
                         std::invalid_argument);
    CHECK_THROWS_AS(zeta(4).lifted_to(0), std::invalid_argument);

    auto [a, b] = Cyclotomic::lift_common(zeta(4), zeta(6));
    CHECK(a.order() == 12);
    CHECK(b.order() == 12);
    CHECK(a == zeta(12, 3));
    CHECK(b == zeta(12, 2));

    Rng rng(4242);
    for (int t = 0; t < 120; ++t) {
        long m1 = pick(rng, 1, 24);
        long m2 = pick(rng, 1, 24);
        Cyclotomic u = random_cyclotomic(rng, m1);
        Cyclotomic v = random_cyclotomic(rng, m2);
        auto [lu, lv] = Cyclotomic::lift_common(u, v);
        CHECK(lu.order() == lv.order());
        CHECK(lu.order() % m1 == 0);
        CHECK(lv.order() % m2 == 0);
        CHECK(lu == u);
        CHECK(lv == v);
        CHECK(canonical_form_ok(lu));
        // root product, checked against a directly constructed root
        long i = pick(rng, 0, m1 - 1);
        long j = pick(rng, 0, m2 - 1);
        long big = common_cyclotomic_order(m1, m2);
        auto [ri, rj] = Cyclotomic::lift_common(zeta(m1, i), zeta(m2, j));
        CHECK(ri * rj == zeta(big, i * (big / m1) + j * (big / m2)));
    }
}

TEST_CASE("common order is the lcm and overflow is caught") {
    CHECK(common_cyclotomic_order(4, 6) == 12);
    CHECK(common_cyclotomic_order(7, 7) == 7);
    CHECK(common_cyclotomic_order(1, 9) == 9);
    CHECK_THROWS_AS(common_cyclotomic_order(3, (1L << 62)), std::overflow_error);
}

TEST_CASE("expression strings") {
    CHECK(Cyclotomic::zero(5).to_string() == "0");
    CHECK(Cyclotomic::one(5).to_string() == "1");
    CHECK(rat(-3, 2, 4).to_string() == "-3/2");
    CHECK(zeta(4).to_string() == "z");
    CHECK((-zeta(4)).to_string() == "-1*z");
    CHECK(zeta(12, 7).to_string() == "-1*z"); // zeta_12^7 reduces to -zeta_12
    CHECK((rat(1, 2, 4) - zeta(4)).to_string() == "1/2 - z");
    CHECK((Cyclotomic::one(16) + zeta(16, 1) * Rational(2) +
           zeta(16, 3) * Rational(3, 4))
              .to_string() == "1 + 2*z + 3/4*z^3");
    CHECK((zeta(16, 2) * Rational(-1, 6)).to_string() == "-1/6*z^2");
}

TEST_CASE("hash agrees with equality at one order") {
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        long m = pick(rng, 1, 18);
        Cyclotomic a = random_cyclotomic(rng, m);
        Cyclotomic b = random_cyclotomic(rng, m);
        Cyclotomic a2 = (a + b) - b; // same value, computed differently
        CHECK(a2 == a);
        CHECK(a2.hash() == a.hash());
    }
}

TEST_CASE("order one field is plain Q") {
    Cyclotomic v = rat(3, 4, 1);
    CHECK(v.basis_size() == 1);
    CHECK(v * v == rat(9, 16, 1));
    CHECK(zeta(1, 0) == Cyclotomic::one(1));
    CHECK(v.conjugate() == v);
    CHECK(v.inverse() == rat(4, 3, 1));
}
