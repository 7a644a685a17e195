#pragma once

namespace qsing {

/// Deterministic trial-division primality test; n < 2 is not prime.
bool is_prime(long n);

/// Smallest prime factor of n >= 2.
long smallest_prime_factor(long n);

/// Euler totient of n >= 1.
long euler_phi(long n);

/// (base^exp) mod m for m >= 1, exp >= 0.
long pow_mod(long base, long exp, long m);

} // namespace qsing
