#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kdw/error.hpp"
#include "kdw/ffield.hpp"

using namespace kdw;

namespace {
const std::vector<std::uint32_t> kPrimes{5, 7, 11, 13, 17, 19, 23, 29, 31};
}

TEST_CASE("is_square") {
  CHECK(is_square(Fp(11, 3)));
  CHECK_FALSE(is_square(Fp(11, 2)));
  for (std::uint32_t p : kPrimes) {
    CHECK(is_square(Fp(p, 1)));
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 1; x < p; ++x) squares.insert((x * x) % p);
    CHECK(squares.size() == (p - 1) / 2);
    for (std::uint32_t a = 1; a < p; ++a) CHECK(is_square(Fp(p, a)) == (squares.count(a) == 1));
  }
}

TEST_CASE("min_nonsquare and primitive_root") {
  CHECK(min_nonsquare(11).value() == 2);
  CHECK(min_nonsquare(13).value() == 2);
  CHECK(min_nonsquare(29).value() == 2);
  CHECK(min_nonsquare(7).value() == 3);
  CHECK(primitive_root(11).value() == 2);
  CHECK(primitive_root(13).value() == 2);
  CHECK(primitive_root(7).value() == 3);
  for (std::uint32_t p : kPrimes) {
    const Fp g = primitive_root(p);
    CHECK(g.pow((p - 1) / 2).value() == p - 1);
    std::set<std::uint32_t> seen;
    for (std::uint32_t e = 0; e < p - 1; ++e) seen.insert(g.pow(e).value());
    CHECK(seen.size() == p - 1);
  }
}

TEST_CASE("field arithmetic") {
  const Fp a(13, 5), b(13, -3);
  CHECK(b.value() == 10);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((a - b + b) == a);
  CHECK(a.pow(-1) == a.inverse());
  CHECK_THROWS_AS(Fp(13, 0).inverse(), Error);
}

TEST_CASE("mu_plus_generator") {
  const Fp2 z = mu_plus_generator(11, Fp(11, 2));
  CHECK(multiplicative_order(z) == 12);
  for (std::uint32_t p : kPrimes) {
    const Fp delta = min_nonsquare(p);
    const Fp2 g = mu_plus_generator(p, delta);
    CHECK(g.norm().value() == 1);
    CHECK(g.pow(p + 1).is_one());
    for (std::int64_t q : prime_factors(p + 1)) CHECK_FALSE(g.pow((p + 1) / q).is_one());
  }
}

TEST_CASE("norm is multiplicative") {
  for (std::uint32_t p : kPrimes) {
    const Fp delta = min_nonsquare(p);
    for (std::uint32_t x = 0; x < p; x += 3) {
      for (std::uint32_t y = 1; y < p; y += 4) {
        const Fp2 u(Fp(p, x), Fp(p, y), delta);
        const Fp2 v(Fp(p, y), Fp(p, x + 1), delta);
        CHECK((u * v).norm() == u.norm() * v.norm());
      }
    }
  }
}

TEST_CASE("field primes are validated") {
  for (std::int64_t bad : {2, 3, 4, 9, 15, 1, 0, -7}) {
    try {
      require_field_prime(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidArgument);
    }
  }
  CHECK_THROWS_AS(mu_plus_generator(11, Fp(11, 3)), Error);
  CHECK(prime_factors(660) == std::vector<std::int64_t>{2, 3, 5, 11});
}
