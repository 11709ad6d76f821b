#include "brauer/class_counting.hpp"

#include <string>

#include "brauer/error.hpp"

namespace brauer {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

mpz_class double_factorial(long k) {
  if (k < -1) throw Error(Errc::invalid_argument, "double factorial of " + std::to_string(k));
  mpz_class out = 1;
  for (long j = k; j > 1; j -= 2) out *= static_cast<unsigned long>(j);
  return out;
}

mpz_class euler_totient(unsigned long q) {
  if (q == 0) throw Error(Errc::invalid_argument, "totient of 0");
  unsigned long result = q;
  unsigned long rest = q;
  for (unsigned long f = 2; f * f <= rest; ++f) {
    if (rest % f) continue;
    while (rest % f == 0) rest /= f;
    result -= result / f;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

mpz_class involution_term(unsigned long n) {
  mpz_class sum = 0;
  for (unsigned long k = 0; 2 * k <= n; ++k) sum += factorial(n) / (factorial(n - 2 * k) * factorial(k));
  return sum;
}

mpz_class alpha(unsigned long p, unsigned long q) {
  if (p == 0 || q == 0) throw Error(Errc::invalid_argument, "alpha needs p, q >= 1");
  if (q % 2 == 0) {
    mpz_class sum = 0;
    mpz_class q_power = 1;
    for (unsigned long k = 0; 2 * k <= p; ++k) {
      sum += binomial(p, 2 * k) * q_power * double_factorial(static_cast<long>(2 * k) - 1);
      q_power *= q;
    }
    return sum;
  }
  if (p % 2 != 0) {
    throw Error(Errc::odd_product, "alpha(" + std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  mpz_class q_power;
  mpz_ui_pow_ui(q_power.get_mpz_t(), q, p / 2);
  return q_power * double_factorial(static_cast<long>(p) - 1);
}

mpz_class class_count(unsigned long n) {
  if (n == 0) throw Error(Errc::invalid_argument, "class_count needs n >= 1");
  const unsigned long length = 2 * n;
  mpz_class sum = 0;
  for (unsigned long p = 1; p <= length; ++p) {
    if (length % p) continue;
    const unsigned long q = length / p;
    sum += alpha(p, q) * euler_totient(q);
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
    throw Error(Errc::non_integer, "factorization sum not divisible by n=" + std::to_string(n));
  }
  mpz_class inner = sum / n + involution_term(n) + involution_term(n - 1);
  if (!mpz_divisible_ui_p(inner.get_mpz_t(), 4)) {
    throw Error(Errc::non_integer, "class count not divisible by 4 for n=" + std::to_string(n));
  }
  return inner / 4;
}

}  // namespace brauer
