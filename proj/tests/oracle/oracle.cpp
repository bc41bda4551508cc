#include "oracle/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <unordered_set>

#include "kdw/cyclicrep.hpp"
#include "kdw/ffield.hpp"

namespace kdw::oracle {

using psl2::Elem;
using psl2::Group;

std::vector<std::vector<Elem>> conjugacy_partition(const Group& g) {
  const std::vector<Elem> all = g.elements();
  std::unordered_set<Elem, psl2::ElemHash> seen;
  std::vector<std::vector<Elem>> out;
  for (const Elem& x : all) {
    if (seen.count(x)) continue;
    std::set<Elem> cls;
    for (const Elem& y : all) cls.insert(g.conj(y, x));
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::int64_t order_by_divisors(const Group& g, Elem x) {
  const std::int64_t n = g.order();
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0 && g.pow(x, d) == g.identity()) return d;
  }
  return n;
}

std::map<std::int64_t, std::int64_t> order_histogram(const Group& g) {
  std::map<std::int64_t, std::int64_t> out;
  for (const Elem& x : g.elements()) ++out[order_by_divisors(g, x)];
  return out;
}

std::int64_t classes_of_prime_power_order(const Group& g, const std::vector<std::vector<Elem>>& partition,
                                          std::int64_t q) {
  std::int64_t count = 0;
  for (const auto& cls : partition) {
    std::int64_t n = order_by_divisors(g, cls.front());
    if (n == 1) continue;
    while (n % q == 0) n /= q;
    if (n == 1) ++count;
  }
  return count;
}

std::set<std::uint32_t> trace_set_Hk(const Group& g, std::int64_t k) {
  std::set<std::uint32_t> out;
  for (const Elem& x : g.subgroup_elements(g.subgroup_H(k))) {
    if (x != g.identity()) out.insert(g.trace_pm(x));
  }
  return out;
}

std::vector<ModOneOdd> cot_xi(std::int64_t k, const std::vector<std::int64_t>& ls) {
  using cd = std::complex<double>;
  const double pi = std::numbers::pi;
  const auto m = static_cast<int>(ls.size());
  // (z^e + 1)/(z^e - 1) = -i cot(pi e / k), so alpha(h) = -(-i)^(m+1) cot(pi h/k) prod cot(pi h l/k).
  const cd unit = -std::pow(cd(0, -1), m + 1);
  std::vector<cd> alpha(static_cast<std::size_t>(k));
  for (std::int64_t h = 1; h < k; ++h) {
    double prod = 1.0 / std::tan(pi * static_cast<double>(h) / static_cast<double>(k));
    for (std::int64_t l : ls) prod /= std::tan(pi * static_cast<double>(h * l) / static_cast<double>(k));
    alpha[h] = unit * prod;
  }
  std::int64_t den = k;
  for (int i = 0; i < m; ++i) den *= k;
  std::vector<ModOneOdd> out;
  for (std::int64_t i = 0; i < k; ++i) {
    cd sum = 0;
    for (std::int64_t h = 1; h < k; ++h) {
      sum += alpha[h] * std::polar(1.0, -2.0 * pi * static_cast<double>(h * i) / static_cast<double>(k));
    }
    const double a = sum.real() / static_cast<double>(k);
    out.emplace_back(std::llround(a * static_cast<double>(den)), den);
  }
  return out;
}

FormalSum<QuotientCoord> lens_psl2_brute(const Group& g, std::int64_t k, const std::vector<std::int64_t>& ls) {
  const std::uint32_t p = g.p();
  const XiVector xi = xi_vector(k, ls);
  const Elem gen = g.subgroup_H(k).generator;
  std::vector<Elem> powers;
  for (std::int64_t h = 0; h < k; ++h) powers.push_back(g.pow(gen, h));
  const std::vector<Elem> all = g.elements();
  FormalSum<QuotientCoord> out;
  for (const Elem& x : all) {
    if (g.pow(x, k) != g.identity()) continue;
    if (x == g.identity()) {
      out.add(zero_quotient(p, k));
      continue;
    }
    std::int64_t found = 0;
    for (const Elem& y : all) {
      const Elem c = g.conj(y, x);
      for (std::int64_t h = 1; h < k && found == 0; ++h) {
        if (c == powers[h]) found = h;
      }
      if (found) break;
    }
    out.add(to_quotient(p, k, perm_apply(found, xi)));
  }
  return out;
}

psl2::Generators alternate_generators(std::uint32_t p) {
  std::int64_t delta = 0;
  std::int64_t zeta = 0;
  for (std::int64_t a = p - 1; a > 0 && (delta == 0 || zeta == 0); --a) {
    const Fp f(p, a);
    if (delta == 0 && !is_square(f)) delta = a;
    if (zeta == 0 && multiplicative_order(f) == static_cast<std::int64_t>(p) - 1) zeta = a;
  }
  std::int64_t u = 2;
  while (std::gcd(u, static_cast<std::int64_t>(p) + 1) != 1) ++u;
  const Fp2 zp = mu_plus_generator(p, Fp(p, delta)).pow(u);
  return psl2::Generators::from_values(p, delta, zeta, zp.x().value(), zp.y().value());
}

}  // namespace kdw::oracle
