// One PASS/FAIL line per acceptance criterion, each with its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "kdw/brieskorn.hpp"
#include "kdw/cyclicrep.hpp"
#include "kdw/error.hpp"
#include "kdw/induction.hpp"
#include "kdw/psl2.hpp"
#include "oracle/oracle.hpp"
#include "table_xi.hpp"

using namespace kdw;
using brieskorn::SeifertData;
using brieskorn::Triple;
using psl2::Group;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int n, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs >= budget_s) {
    o.ok = false;
    o.detail = "over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-44s %8.3fs / %.0fs%s%s\n", o.ok ? "PASS" : "FAIL", n, name, secs, budget_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::int64_t> odd_prime_divisors(std::uint32_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 3; k <= p; k += 2) {
    if (psl2::is_odd_prime_divisor(p, k)) out.push_back(k);
  }
  return out;
}

const std::string kExample2640 =
    "o + 2640*((6,8,8)/11, (2,7)/9, (0,2,3)/5) + 2640*((6,8,8)/11, (2,7)/9, (0,3,2)/5)";

FormalSum<QuotientTriple> expected_48720() {
  const std::vector<std::string> u2{"(4,2,4)/5", "(4,4,2)/5"};
  const std::vector<std::string> u3{"(3,3,1,0)/7", "(3,0,3,1)/7", "(3,1,0,3)/7"};
  FormalSum<QuotientTriple> fs;
  fs.add(QuotientTriple{{zero_quotient(29, 3), zero_quotient(29, 5), zero_quotient(29, 7)}});
  auto coord = [](std::int64_t k, const std::string& text) {
    QuotientCoord q = zero_quotient(29, k);
    const auto slash = text.find('/');
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    std::stringstream ss(text.substr(1, slash - 2));
    std::string item;
    for (std::size_t i = 0; std::getline(ss, item, ','); ++i) q.entries.at(i) = ModOneOdd(std::stoll(item), den);
    return q;
  };
  for (const auto& a : u2) {
    for (const auto& b : u3) fs.add(QuotientTriple{{coord(3, "(7,2)/9"), coord(5, a), coord(7, b)}}, 48720);
  }
  return fs;
}

struct Config {
  std::uint32_t p;
  SeifertData sd;
};

// (13,3,7) uses (5,1,-5): the twist vector (-1,5,-5) violates the Seifert constraint.
const std::vector<Config> kConfigs{{11, {{11, 3, 5}, {3, 1, -3}}},
                                   {13, {{13, 3, 7}, {5, 1, -5}}},
                                   {29, {{3, 5, 7}, {2, 1, -6}}}};

}  // namespace

int main() {
  criterion(1, "xi table reproduction", 1, [](Outcome& o) {
    int rows = 0;
    for (const XiRow& row : xi_table()) {
      o.expect(xi_vector(row.k, {row.l}).text() == row.text,
               "row (" + std::to_string(row.k) + ";" + std::to_string(row.l) + ")");
      ++rows;
    }
    o.expect(rows == 17, "expected 17 rows");
  });

  criterion(2, "negation rule", 1, [](Outcome& o) {
    for (const XiRow& row : xi_table()) {
      const XiVector a = xi_vector(row.k, {row.l});
      const XiVector b = xi_vector(row.k, {row.k - row.l});
      for (std::size_t i = 0; i < a.entries.size(); ++i) o.expect(b.entries[i] == -a.entries[i], row.text);
    }
  });

  criterion(3, "example 2640 (p=11)", 5, [](Outcome& o) {
    const auto fs = brieskorn::brieskorn_kdw(11, kConfigs[0].sd);
    o.expect(fs.text() == kExample2640, fs.text());
  });

  criterion(4, "example 48720 (p=29)", 30, [](Outcome& o) {
    const auto fs = brieskorn::brieskorn_kdw(29, kConfigs[2].sd);
    o.expect(fs == expected_48720(), fs.text());
  });

  criterion(5, "closed form = brute-force oracle", 120, [](Outcome& o) {
    o.expect(SeifertData{{13, 3, 7}, {-1, 5, -5}}.twist_sum() != 1, "(-1,5,-5) unexpectedly valid");
    for (const Config& c : kConfigs) {
      const Group g(c.p);
      o.expect(brieskorn::brieskorn_kdw(c.p, c.sd) == brieskorn::brieskorn_kdw_oracle(g, c.sd),
               "p=" + std::to_string(c.p));
    }
  });

  criterion(6, "hom count and orbit count", 120, [](Outcome& o) {
    for (const Config& c : kConfigs) {
      const Group g(c.p);
      const auto adm = brieskorn::admissible_set(c.p, c.sd.k);
      const auto homs = brieskorn::enumerate_homs_brute(g, c.sd.k);
      const std::string tag = "p=" + std::to_string(c.p);
      const std::int64_t p = c.p;
      o.expect(static_cast<std::int64_t>(homs.size()) == (p * p * p - p) * static_cast<std::int64_t>(adm.size()) + 1,
               tag + " |Hom|");
      o.expect(brieskorn::hom_count_formula(c.p, c.sd.k) == static_cast<std::int64_t>(homs.size()), tag + " formula");
      o.expect(brieskorn::orbit_sizes(g, homs).size() == 2 * adm.size() + 1, tag + " orbits");
      if (c.p == 11) o.expect(adm.size() == 4, "|A| at p=11");
      if (c.p == 29) o.expect(adm.size() == 12, "|A| at p=29");
    }
  });

  criterion(7, "r_G(k) vs brute class count", 30, [](Outcome& o) {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      const Group g(p);
      const auto partition = oracle::conjugacy_partition(g);
      for (std::int64_t q : prime_factors(g.order())) {
        o.expect(psl2::r_count(p, q) == oracle::classes_of_prime_power_order(g, partition, q),
                 "p=" + std::to_string(p) + " k=" + std::to_string(q));
      }
    }
  });

  criterion(8, "subgroup counts m_k", 30, [](Outcome& o) {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      const auto hist = oracle::order_histogram(Group(p));
      for (std::int64_t k : odd_prime_divisors(p)) {
        o.expect(psl2::count_order_k_subgroups(p, k) * (k - 1) == hist.at(k),
                 "p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }
  });

  criterion(9, "Sol_k = trace set of H_k", 5, [](Outcome& o) {
    for (std::uint32_t p : {11u, 13u, 29u}) {
      const Group g(p);
      for (std::int64_t k : odd_prime_divisors(p)) {
        const auto sol = brieskorn::sol_set(p, k);
        const std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(k);
        o.expect(std::set<std::uint32_t>(sol.begin(), sol.end()) == oracle::trace_set_Hk(g, k), tag);
        o.expect(static_cast<std::int64_t>(sol.size()) == (k == p ? 1 : (k - 1) / 2), tag + " size");
      }
    }
  });

  criterion(10, "induction kernel and image ranks", 120, [](Outcome& o) {
    for (std::uint32_t p : {7u, 11u}) {
      const Group g(p);
      for (std::int64_t k : odd_prime_divisors(p)) {
        const InductionTable t = induction_table(g, g.subgroup_H(k));
        for (const auto& v : kernel_generators(p, k)) {
          o.expect(induce(t, v).is_zero(), "p=" + std::to_string(p) + " k=" + std::to_string(k));
        }
      }
    }
    for (std::uint32_t p : {11u, 13u}) {
      const Group g(p);
      const bool one_mod_4 = p % 4 == 1;
      const std::string tag = "p=" + std::to_string(p);
      o.expect(image_rank(g, g.torus_T()) == (one_mod_4 ? (p + 3) / 4 : (p + 1) / 4), tag + " T");
      o.expect(image_rank(g, g.torus_B()) == (one_mod_4 ? (p + 3) / 4 : (p + 5) / 4), tag + " B");
      o.expect(image_rank(g, g.unipotent_U()) == 3, tag + " U");
    }
  });

  criterion(11, "representative structure (p=11)", 60, [](Outcome& o) {
    const Group g(11);
    const Triple ks{11, 3, 5};
    std::unordered_set<brieskorn::HomPair, brieskorn::HomPairHash> covered;
    for (const auto& t : brieskorn::admissible_set(11, ks)) {
      const auto [phi1, phi2] = brieskorn::explicit_hom_pair(g, ks, t);
      o.expect(!brieskorn::are_conjugate(g, phi1, phi2), "phi1 ~ phi2");
      for (const auto& rep : {phi1, phi2}) {
        for (const auto& h : brieskorn::orbit(g, rep)) o.expect(covered.insert(h).second, "orbits overlap");
      }
    }
    std::size_t nontrivial = 0;
    for (const auto& h : brieskorn::enumerate_homs_brute(g, ks)) {
      if (h.X == g.identity() && h.Y == g.identity()) continue;
      ++nontrivial;
      o.expect(covered.count(h) == 1, "hom outside every representative orbit");
    }
    o.expect(nontrivial == covered.size(), "orbit union size");
  });

  criterion(12, "independence of generator choice", 60, [](Outcome& o) {
    for (const Config& c : {kConfigs[0], kConfigs[2]}) {
      const Group alt(c.p, oracle::alternate_generators(c.p));
      const std::string tag = "p=" + std::to_string(c.p);
      o.expect(alt.generators().describe() != Group(c.p).generators().describe(), tag + " same generators");
      const auto fs = brieskorn::brieskorn_kdw(c.p, c.sd);
      o.expect(brieskorn::brieskorn_kdw_from_representatives(alt, c.sd) == fs, tag + " representatives");
      o.expect(brieskorn::brieskorn_kdw_oracle(alt, c.sd) == fs, tag + " oracle");
    }
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " FAILED").c_str());
  return failures == 0 ? 0 : 1;
}
