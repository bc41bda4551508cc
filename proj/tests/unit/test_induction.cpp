#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kdw/error.hpp"
#include "kdw/induction.hpp"
#include "oracle/oracle.hpp"

using namespace kdw;
using psl2::Group;

namespace {

std::vector<std::int64_t> odd_prime_divisors(std::uint32_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 3; k <= p; k += 2) {
    if (psl2::is_odd_prime_divisor(p, k)) out.push_back(k);
  }
  return out;
}

CycNum value_at(const ClassFunction& f, psl2::ClassTag tag, std::uint32_t tr = 2) {
  return f.values.at(psl2::ClassId{tag, tr});
}

}  // namespace

TEST_CASE("induced character degree") {
  const Group g(11);
  for (std::int64_t k : {3, 5, 11}) {
    const psl2::CyclicSubgroup h = g.subgroup_H(k);
    const InductionTable t = induction_table(g, h);
    for (std::int64_t i = 0; i < k; ++i) {
      const ClassFunction f = induced_character(t, i);
      CHECK(value_at(f, psl2::ClassTag::Identity) == CycNum::rational(k, g.order() / k));
    }
  }
}

TEST_CASE("induction from the split part vanishes on nonsplit classes") {
  const Group g(11);
  const InductionTable t = induction_table(g, g.subgroup_H(5));
  for (std::int64_t i = 0; i < 5; ++i) {
    const ClassFunction f = induced_character(t, i);
    for (const auto& [id, v] : f.values) {
      if (id.tag == psl2::ClassTag::Nonsplit) CHECK(v.is_zero());
    }
  }
}

TEST_CASE("serial and parallel induction tables agree") {
  const Group g(13);
  for (const auto& h : {g.torus_T(), g.unipotent_U(), g.torus_B()}) {
    const InductionTable a = induction_table(g, h, Exec::Serial);
    const InductionTable b = induction_table(g, h, Exec::Parallel);
    CHECK(a.counts == b.counts);
  }
}

TEST_CASE("kernel_generators") {
  CHECK(kernel_generators(11, 5) ==
        std::vector<std::vector<std::int64_t>>{{0, 1, 0, 0, -1}, {0, 0, 1, -1, 0}});
  CHECK(kernel_generators(11, 11).size() == 8);
  CHECK_THROWS_AS(kernel_generators(11, 7), Error);
  for (std::uint32_t p : {7u, 11u}) {
    const Group g(p);
    for (std::int64_t k : odd_prime_divisors(p)) {
      const InductionTable t = induction_table(g, g.subgroup_H(k));
      for (const auto& v : kernel_generators(p, k)) CHECK(induce(t, v).is_zero());
    }
  }
}

TEST_CASE("Ind rho_i = Ind rho_{-i} on the tori; square classes on U") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const Group g(p);
    for (const auto& h : {g.torus_T(), g.torus_B()}) {
      const InductionTable t = induction_table(g, h);
      for (std::int64_t i = 1; i < h.order; ++i) CHECK(induced_character(t, i) == induced_character(t, -i));
    }
    const InductionTable u = induction_table(g, g.unipotent_U());
    for (std::int64_t i = 1; i < p; ++i) {
      for (std::int64_t j = 1; j < p; ++j) {
        const bool same_class = is_square(Fp(p, i)) == is_square(Fp(p, j));
        CHECK((induced_character(u, i) == induced_character(u, j)) == same_class);
      }
    }
  }
}

TEST_CASE("image_rank") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const Group g(p);
    const std::int64_t t_rank = p % 4 == 1 ? (p + 3) / 4 : (p + 1) / 4;
    const std::int64_t b_rank = p % 4 == 1 ? (p + 3) / 4 : (p + 5) / 4;
    CHECK(image_rank(g, g.torus_T()) == t_rank);
    CHECK(image_rank(g, g.torus_B()) == b_rank);
    CHECK(image_rank(g, g.unipotent_U()) == 3);
  }
  const Group big(37);
  CHECK_THROWS_AS(induction_table(big, big.torus_T()), Error);
}

TEST_CASE("to_quotient") {
  CHECK(to_quotient(29, 5, xi_vector(5, {1})).text() == "(4,2,4)/5");
  CHECK(to_quotient(11, 3, xi_vector(3, {1})).text() == "(2,7)/9");
  const QuotientCoord sq = to_quotient(11, 11, xi_vector(11, {3}));
  CHECK(sq.kind == QuotientKind::SquareClass);
  CHECK(sq.text() == "(6,8,8)/11");
  CHECK_THROWS_AS(to_quotient(11, 7, xi_vector(7, {1})), Error);
}

TEST_CASE("to_quotient is linear and respects the kernel") {
  std::mt19937 rng(17);
  for (std::uint32_t p : {11u, 13u}) {
    for (std::int64_t k : odd_prime_divisors(p)) {
      for (std::int64_t l = 1; l < k; ++l) {
        const XiVector xi = xi_vector(k, {l});
        const XiVector other = xi_vector(k, {(l % (k - 1)) + 1});
        XiVector sum = xi;
        for (std::size_t i = 0; i < sum.entries.size(); ++i) sum.entries[i] += other.entries[i];
        const QuotientCoord qa = to_quotient(p, k, xi), qb = to_quotient(p, k, other), qs = to_quotient(p, k, sum);
        for (std::size_t i = 0; i < qs.entries.size(); ++i) CHECK(qs.entries[i] == qa.entries[i] + qb.entries[i]);
        for (std::int64_t h = 1; h < k; ++h) {
          if (k != p) {
            CHECK(to_quotient(p, k, perm_apply(h, xi)) == to_quotient(p, k, perm_apply(k - h, xi)));
          } else {
            for (std::int64_t s = 1; s < k; ++s) {
              if (is_square(Fp(p, s))) {
                CHECK(to_quotient(p, k, perm_apply(h * s % k, xi)) == to_quotient(p, k, perm_apply(h, xi)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lens_kdw_psl2 total mass and multiplicities") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const Group g(p);
    const auto hist = oracle::order_histogram(g);
    for (std::int64_t k : odd_prime_divisors(p)) {
      const auto fs = lens_kdw_psl2(p, k, {1});
      CHECK(fs.total_mass() == 1 + hist.at(k));
      if (k != p) {
        for (const auto& [t, c] : fs.terms()) {
          if (!t.is_zero()) CHECK(c % (2 * psl2::count_order_k_subgroups(p, k)) == 0);
        }
      }
    }
  }
  const auto eleven = lens_kdw_psl2(11, 11, {3});
  CHECK(eleven.text() == "o + 120*(6,8,8)/11");
}

TEST_CASE("lens_kdw_psl2 agrees with the conjugator-search oracle") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const Group g(p);
    const Group alt(p, oracle::alternate_generators(p));
    for (std::int64_t k : odd_prime_divisors(p)) {
      for (std::int64_t l = 1; l < k; l += 2) {
        const auto fs = lens_kdw_psl2(p, k, {l});
        CHECK(fs == oracle::lens_psl2_brute(g, k, {l}));
        CHECK(fs == oracle::lens_psl2_brute(alt, k, {l}));
      }
    }
  }
}
