#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kdw/cyclicrep.hpp"
#include "kdw/error.hpp"
#include "oracle/oracle.hpp"
#include "table_xi.hpp"

using namespace kdw;

namespace {

const std::vector<std::int64_t> kPrimes{3, 5, 7, 11, 13};

XiVector random_vector(std::int64_t k, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> num(0, 3 * k * k);
  XiVector v{k, {}};
  for (std::int64_t i = 0; i < k; ++i) v.entries.emplace_back(num(rng), k * k);
  return v;
}

XiVector negated(const XiVector& v) {
  XiVector out = v;
  for (auto& e : out.entries) e = -e;
  return out;
}

}  // namespace

TEST_CASE("alpha_character") {
  const CycNum a = alpha_character(3, {1}, 1);
  CHECK(a.is_rational());
  CHECK(a.rational_part() == BigRational(1, 3));
  CHECK(alpha_character(7, {2, 3}, 0).is_zero());
  CHECK(alpha_character(5, {1}, 5).is_zero());
  try {
    alpha_character(5, {10}, 1);
    FAIL("accepted l = 0 mod k");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCoprime);
  }
  CHECK_THROWS_AS(alpha_character(9, {1}, 1), Error);
}

TEST_CASE("xi_vector reproduces the printed table") {
  for (const XiRow& row : xi_table()) {
    CAPTURE(row.k);
    CAPTURE(row.l);
    CHECK(xi_vector(row.k, {row.l}).text() == row.text);
  }
  CHECK(xi_vector(3, {2}).text() == "(7,1,1)/9");
}

TEST_CASE("xi_vector matches the floating-point cotangent form") {
  for (std::int64_t k : kPrimes) {
    for (std::int64_t l = 1; l < k; ++l) CHECK(xi_vector(k, {l}).entries == oracle::cot_xi(k, {l}));
  }
  for (std::int64_t k : {5, 7, 11}) {
    for (std::int64_t l1 = 1; l1 < k; l1 += 2) {
      for (std::int64_t l2 = 1; l2 < k; l2 += 3) CHECK(xi_vector(k, {l1, l2}).entries == oracle::cot_xi(k, {l1, l2}));
    }
  }
}

TEST_CASE("negation rule") {
  for (std::int64_t k : kPrimes) {
    for (std::int64_t l = 1; l < k; ++l) CHECK(xi_vector(k, {k - l}) == negated(xi_vector(k, {l})));
  }
}

TEST_CASE("xi depends only on the multiset of twists mod k") {
  CHECK(xi_vector(7, {1, 2}) == xi_vector(7, {2, 1}));
  CHECK(xi_vector(7, {1, 2}) == xi_vector(7, {8, -5}));
  CHECK(xi_vector(11, {3}) == xi_vector(11, {-8}));
  const XiVector two = xi_vector(13, {2, 5});
  for (const auto& e : two.entries) CHECK(e.denominator() % 2 == 1);
}

TEST_CASE("perm_apply") {
  const XiVector xi = xi_vector(5, {1});
  CHECK(perm_apply(1, xi) == xi);
  CHECK(perm_apply(2, xi).text() == "(4,2,1,1,2)/5");
  try {
    perm_apply(5, xi);
    FAIL("accepted h = 0");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCoprime);
  }
  std::mt19937 rng(5);
  for (std::int64_t k : kPrimes) {
    for (int trial = 0; trial < 20; ++trial) {
      const XiVector v = random_vector(k, rng);
      std::uniform_int_distribution<std::int64_t> unit(1, k - 1);
      const std::int64_t h = unit(rng), h2 = unit(rng);
      CHECK(perm_apply(h, perm_apply(h2, v)) == perm_apply(h * h2 % k, v));
      ModOneOdd s0, s1;
      for (const auto& e : v.entries) s0 += e;
      for (const auto& e : perm_apply(h, v).entries) s1 += e;
      CHECK(s0 == s1);
    }
  }
}

TEST_CASE("lens_kdw_cyclic") {
  CHECK(lens_kdw_cyclic(3, {1}).text() == "o + 2*(2,8,8)/9");
  for (std::int64_t k : kPrimes) {
    for (std::int64_t l = 1; l < k; ++l) {
      const auto fs = lens_kdw_cyclic(k, {l});
      CHECK(fs.total_mass() == k);
      for (const auto& [t, c] : fs.terms()) {
        if (t.is_zero()) continue;
        for (std::int64_t h = 1; h < k; ++h) CHECK(fs.coeff(perm_apply(h, t)) == c);
      }
    }
  }
  const auto five = lens_kdw_cyclic(5, {1});
  CHECK(five.size() == 3);
  CHECK(five.coeff(xi_vector(5, {1})) == 2);
}
