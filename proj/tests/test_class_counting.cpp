#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "brauer/class_counting.hpp"
#include "brauer/diagram.hpp"
#include "brauer/error.hpp"

using namespace brauer;

namespace {

unsigned long totient_by_gcd(unsigned long q) {
  unsigned long count = 0;
  for (unsigned long k = 1; k <= q; ++k) count += std::gcd(k, q) == 1;
  return count;
}

// Involutions of n points, each weighted by 2^(number of 2-cycles).
unsigned long weighted_involutions_by_filter(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  unsigned long count = 0;
  do {
    bool inv = true;
    int moved = 0;
    for (int i = 0; i < n; ++i) {
      inv = inv && p[p[i]] == i;
      moved += p[i] != i;
    }
    if (inv) count += 1ul << (moved / 2);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(8) == 384);
  CHECK(double_factorial(17) == 34459425);
  CHECK_THROWS_AS(double_factorial(-3), Error);
}

TEST_CASE("totient matches gcd counting") {
  for (unsigned long q = 1; q <= 200; ++q) {
    CAPTURE(q);
    CHECK(euler_totient(q) == totient_by_gcd(q));
  }
}

TEST_CASE("involution term") {
  CHECK(involution_term(0) == 1);
  CHECK(involution_term(1) == 1);
  CHECK(involution_term(2) == 3);
  CHECK(involution_term(3) == 7);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(involution_term(static_cast<unsigned long>(n)) == weighted_involutions_by_filter(n));
  }
}

TEST_CASE("alpha rejects two odd arguments") {
  try {
    alpha(3, 5);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::odd_product);
  }
  CHECK(alpha(2, 2) == 3);
  CHECK(alpha(3, 2) == 7);
  CHECK(alpha(6, 1) == 15);
  CHECK(euler_totient(12) == 4);
  CHECK_NOTHROW(alpha(2, 3));
  CHECK_NOTHROW(alpha(3, 2));
  CHECK_NOTHROW(alpha(4, 4));
}

TEST_CASE("known prefix") {
  const unsigned long expected[] = {1, 2, 5, 17, 79, 554, 5283, 65346};
  for (unsigned long n = 1; n <= 8; ++n) CHECK(class_count(n) == expected[n - 1]);
}

TEST_CASE("formula matches enumerated orbit counts") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(class_count(static_cast<unsigned long>(n)) == compute_orbits(enumerate_diagrams(2 * n)).size());
  }
}

TEST_CASE("formula stays integral for larger n") {
  for (unsigned long n = 9; n <= 40; ++n) CHECK_NOTHROW(class_count(n));
  CHECK_THROWS_AS(class_count(0), Error);
}
