#pragma once

// Closed-form count c_n of chord-diagram symmetry classes (pairings on a
// bracelet) for L = 2n, with its ingredients.

#include <gmpxx.h>

namespace brauer {

/// k!! with (-1)!! = 0!! = 1.
mpz_class double_factorial(long k);
mpz_class euler_totient(unsigned long q);
/// d_n = sum_{k=0}^{n/2} n! / ((n-2k)! k!)
mpz_class involution_term(unsigned long n);
/// Piecewise alpha(p, q); throws Errc::odd_product when p and q are both odd.
mpz_class alpha(unsigned long p, unsigned long q);
/// c_n = (1/4) ((1/n) sum_{pq=2n} alpha(p,q) phi(q) + d_n + d_{n-1}).
mpz_class class_count(unsigned long n);

}  // namespace brauer
