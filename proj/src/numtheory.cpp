#include "qsing/numtheory.hpp"

#include <stdexcept>

namespace qsing {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

long smallest_prime_factor(long n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor requires n >= 2");
    if (n % 2 == 0) return 2;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return d;
    return n;
}

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p <= m / p; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

long pow_mod(long base, long exp, long m) {
    if (m < 1) throw std::invalid_argument("pow_mod requires modulus >= 1");
    if (exp < 0) throw std::invalid_argument("pow_mod requires exponent >= 0");
    unsigned long long r = 1 % static_cast<unsigned long long>(m);
    unsigned long long b =
        static_cast<unsigned long long>(((base % m) + m) % m);
    unsigned long long mod = static_cast<unsigned long long>(m);
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<long>(r);
}

} // namespace qsing
