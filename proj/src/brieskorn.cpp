#include "kdw/brieskorn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "kdw/cyclicrep.hpp"
#include "kdw/error.hpp"
#include "kdw/ffield.hpp"

namespace kdw::brieskorn {

using psl2::Elem;
using psl2::Group;

namespace {

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string triple_str(const TraceTriple& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

void require_ks(std::uint32_t p, const Triple& ks) {
  for (std::int64_t k : ks) psl2::require_odd_prime_divisor(p, k);
  if (ks[0] == ks[1] || ks[0] == ks[2] || ks[1] == ks[2]) {
    throw Error(Errc::InvalidSeifert, "k values must be pairwise distinct: " + triple_str(ks));
  }
}

void require_brute(std::uint32_t p) {
  if (p > kBruteMaxP) {
    throw Error(Errc::TooLarge, "exhaustive enumeration is limited to p <= " + std::to_string(kBruteMaxP));
  }
}

// SL_2 helpers on raw lifts.
Elem adjugate(std::uint32_t p, Elem x) { return Elem{x.d, (p - x.b) % p, (p - x.c) % p, x.a}; }

Elem raw_conj(const Group& g, Elem by, Elem x) { return g.mul_raw(g.mul_raw(by, x), adjugate(g.p(), by)); }

Elem raw_elem(Fp a, Fp b, Fp c, Fp d) { return Elem{a.value(), b.value(), c.value(), d.value()}; }

// The lens-space coordinates of one fiber, keyed by class index.
struct Fiber {
  std::int64_t k;
  std::int64_t l;
  XiVector xi;

  QuotientCoord coord(std::uint32_t p, std::int64_t index) const {
    return to_quotient(p, k, perm_apply(index, xi));
  }
};

std::array<Fiber, 3> fibers(const SeifertData& sd) {
  std::array<Fiber, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = Fiber{sd.k[i], sd.l[i], xi_vector(sd.k[i], {sd.l[i]})};
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Seifert data

std::int64_t SeifertData::twist_sum() const {
  return l[0] * k[1] * k[2] + l[1] * k[0] * k[2] + l[2] * k[0] * k[1];
}

void SeifertData::validate() const {
  for (std::int64_t ki : k) {
    if (ki < 3 || ki % 2 == 0 || !is_prime(ki)) {
      throw Error(Errc::InvalidSeifert, "k values must be odd primes: " + triple_str(k));
    }
  }
  if (k[0] == k[1] || k[0] == k[2] || k[1] == k[2]) {
    throw Error(Errc::InvalidSeifert, "k values must be pairwise distinct: " + triple_str(k));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::gcd(l[i], k[i]) != 1) {
      throw Error(Errc::NotCoprime, "l" + std::to_string(i + 1) + "=" + std::to_string(l[i]) +
                                        " is not coprime to k" + std::to_string(i + 1) + "=" +
                                        std::to_string(k[i]));
    }
  }
  const std::int64_t s = twist_sum();
  if (s != 1 && s != -1) {
    throw Error(Errc::InvalidSeifert, "k1 k2 k3 (l1/k1 + l2/k2 + l3/k3) = " + std::to_string(s) +
                                          " for k=" + triple_str(k) + " l=" + triple_str(l) +
                                          "; it must be +1 or -1");
  }
}

void SeifertData::validate(std::uint32_t p) const {
  require_field_prime(p);
  validate();
  for (std::int64_t ki : k) psl2::require_odd_prime_divisor(p, ki);
}

TraceTriple canonical_triple(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c) {
  const auto fa = Fp(p, a), fb = Fp(p, b), fc = Fp(p, c);
  const std::array<TraceTriple, 4> orbit{
      TraceTriple{fa.value(), fb.value(), fc.value()},
      TraceTriple{(-fa).value(), (-fb).value(), fc.value()},
      TraceTriple{(-fa).value(), fb.value(), (-fc).value()},
      TraceTriple{fa.value(), (-fb).value(), (-fc).value()},
  };
  return *std::min_element(orbit.begin(), orbit.end());
}

// ---------------------------------------------------------------------------
// Chebyshev

std::uint32_t chebyshev_eval(std::uint32_t p, std::int64_t n, std::int64_t t) {
  if (n < 1) throw Error(Errc::InvalidArgument, "Chebyshev index must be >= 1");
  const Fp ft(p, t);
  Fp prev(p, 1);  // S_1
  if (n == 1) return prev.value();
  Fp cur = ft;  // S_2
  for (std::int64_t i = 2; i < n; ++i) {
    const Fp next = ft * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur.value();
}

bool chebyshev_order_condition(std::uint32_t p, std::int64_t n, std::int64_t t) {
  return chebyshev_eval(p, 2 * n, t) == 0 && chebyshev_eval(p, 2 * n - 1, t) == p - 1;
}

bool order_by_chebyshev(const Group& g, Elem x, std::int64_t n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::InvalidArgument, "n must be odd and >= 3");
  return chebyshev_order_condition(g.p(), n, g.trace(x));
}

std::vector<std::uint32_t> sol_set(std::uint32_t p, std::int64_t k) {
  require_field_prime(p);
  psl2::require_odd_prime_divisor(p, k);
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t <= (p - 1) / 2; ++t) {
    if (chebyshev_order_condition(p, k, t)) out.push_back(t);
  }
  return out;
}

std::vector<TraceTriple> admissible_set(std::uint32_t p, const Triple& ks) {
  require_field_prime(p);
  require_ks(p, ks);
  std::array<std::vector<std::uint32_t>, 3> lifts;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::uint32_t t : sol_set(p, ks[i])) {
      lifts[i].push_back(t);
      if (t != 0) lifts[i].push_back(p - t);
    }
  }
  std::set<TraceTriple> out;
  for (std::uint32_t a : lifts[0]) {
    for (std::uint32_t b : lifts[1]) {
      for (std::uint32_t c : lifts[2]) out.insert(canonical_triple(p, a, b, c));
    }
  }
  return {out.begin(), out.end()};
}

Triple find_ell(const Triple& ks) {
  for (std::int64_t k : ks) {
    if (k < 3 || k % 2 == 0 || !is_prime(k)) {
      throw Error(Errc::InvalidArgument, "k values must be odd primes: " + triple_str(ks));
    }
  }
  if (ks[0] == ks[1] || ks[0] == ks[2] || ks[1] == ks[2]) {
    throw Error(Errc::InvalidArgument, "k values must be pairwise distinct: " + triple_str(ks));
  }
  const std::int64_t k12 = ks[0] * ks[1];
  for (std::int64_t target : {1, -1}) {
    for (std::int64_t l1 = 1; l1 < ks[0]; ++l1) {
      for (std::int64_t l2 = 1; l2 < ks[1]; ++l2) {
        const std::int64_t rest = target - l1 * ks[1] * ks[2] - l2 * ks[0] * ks[2];
        if (rest % k12 == 0) return Triple{l1, l2, rest / k12};
      }
    }
  }
  throw Error(Errc::NoSolution, "no twist vector for " + triple_str(ks));
}

// ---------------------------------------------------------------------------
// Homomorphisms

Elem third(const Group& g, const HomPair& h) { return g.inv(g.mul(h.X, h.Y)); }

TraceTriple trace_triple(const Group& g, const HomPair& h) {
  return canonical_triple(g.p(), g.trace(h.X), g.trace(h.Y), g.trace(g.mul_raw(h.X, h.Y)));
}

HomPair conjugate(const Group& g, Elem by, const HomPair& h) {
  return HomPair{g.conj(by, h.X), g.conj(by, h.Y)};
}

bool are_conjugate(const Group& g, const HomPair& h1, const HomPair& h2) {
  for (const Elem& x : g.elements()) {
    if (conjugate(g, x, h1) == h2) return true;
  }
  return false;
}

std::vector<HomPair> orbit(const Group& g, const HomPair& h) {
  std::set<HomPair> out;
  for (const Elem& x : g.elements()) out.insert(conjugate(g, x, h));
  return {out.begin(), out.end()};
}

std::pair<HomPair, HomPair> explicit_hom_pair(const Group& g, const Triple& ks, const TraceTriple& t) {
  const std::uint32_t p = g.p();
  const std::vector<TraceTriple> adm = admissible_set(p, ks);
  if (!std::binary_search(adm.begin(), adm.end(), t)) {
    throw Error(Errc::NotAdmissible, "trace triple " + triple_str(t) + " is not admissible for k=" +
                                         triple_str(ks));
  }
  const std::int64_t k1 = ks[0];
  const Fp one(p, 1);
  const Fp delta = g.generators().delta;
  Fp a(p, t.a), b(p, t.b), c(p, t.c);
  std::pair<HomPair, HomPair> out;

  if (k1 == p) {
    if (a.value() != 2) {
      a = -a;
      b = -b;
    }
    const Fp cb = c - b;
    const Fp zero(p, 0);
    out.first = HomPair{g.make(1, 1, 0, 1), g.canonical(raw_elem(zero, -cb.inverse(), cb, b))};
    out.second = HomPair{g.canonical(raw_elem(one, delta, zero, one)),
                         g.canonical(raw_elem(zero, -(delta / cb), cb / delta, b))};
  } else if ((p - 1) % k1 == 0) {
    Fp lambda(p, 0);
    for (std::uint32_t v = 1; v < p; ++v) {
      const Fp cand(p, v);
      if (cand + cand.inverse() == a) {
        lambda = cand;
        break;
      }
    }
    if (lambda.is_zero()) throw Error(Errc::NoSolution, "no eigenvalue for trace " + std::to_string(t.a));
    const Fp li = lambda.inverse();
    const Fp s = (lambda - li).inverse();
    const Fp y11 = s * (c - li * b);
    const Fp y22 = s * (lambda * b - c);
    const Fp r = y11 * y22 - one;
    const Elem x = g.canonical(raw_elem(lambda, Fp(p, 0), Fp(p, 0), li));
    out.first = HomPair{x, g.canonical(raw_elem(y11, one, r, y22))};
    out.second = HomPair{x, g.canonical(raw_elem(y11, delta, r / delta, y22))};
  } else {
    const psl2::CyclicSubgroup h = g.subgroup_H(k1);
    Elem x = g.identity();
    bool found = false;
    for (std::int64_t j = 1; j < k1 && !found; ++j) {
      const Elem cand = g.pow(h.generator, j);
      if (g.trace(cand) == a.value()) {
        x = cand;
        found = true;
      } else if (g.trace(cand) == (-a).value()) {
        x = g.negate(cand);
        found = true;
      }
    }
    if (!found) throw Error(Errc::NoSolution, "no element of H_k with trace " + std::to_string(t.a));
    const Fp x11(p, x.a), x12(p, x.b), x21(p, x.c), x22(p, x.d);
    std::vector<Elem> centralizer;
    for (const Elem& e : g.subgroup_elements(g.torus_B())) centralizer.push_back(e);
    std::vector<Elem> solutions;
    for (std::uint32_t u = 0; u < p; ++u) {
      for (std::uint32_t v = 0; v < p; ++v) {
        const Fp y11(p, u), y12(p, v), y22 = b - y11;
        const Fp y21 = (c - x11 * y11 - x21 * y12 - x22 * y22) / x12;
        if ((y11 * y22 - y12 * y21).value() == 1) solutions.push_back(raw_elem(y11, y12, y21, y22));
      }
    }
    if (solutions.empty()) throw Error(Errc::NoSolution, "no Y for trace triple " + triple_str(t));
    const Elem y1 = solutions.front();
    std::set<Elem> orbit1;
    for (const Elem& e : centralizer) orbit1.insert(raw_conj(g, e, y1));
    auto second = std::find_if(solutions.begin(), solutions.end(),
                               [&](const Elem& y) { return orbit1.count(y) == 0; });
    if (second == solutions.end()) {
      throw Error(Errc::NoSolution, "only one centralizer orbit for " + triple_str(t));
    }
    const Elem xc = g.canonical(x);
    out.first = HomPair{xc, g.canonical(y1)};
    out.second = HomPair{xc, g.canonical(*second)};
  }

  for (const HomPair* hp : {&out.first, &out.second}) {
    if (trace_triple(g, *hp) != t || g.element_order(hp->X) != ks[0] || g.element_order(hp->Y) != ks[1] ||
        g.element_order(third(g, *hp)) != ks[2]) {
      throw Error(Errc::NoSolution, "representative construction failed for " + triple_str(t));
    }
  }
  return out;
}

std::vector<HomPair> enumerate_homs_brute(const Group& g, const Triple& ks, Exec exec) {
  require_brute(g.p());
  for (std::int64_t k : ks) psl2::require_odd_prime_divisor(g.p(), k);
  const std::vector<Elem> all = g.elements();
  const Elem id = g.identity();
  auto of_order = [&](std::int64_t k) {
    std::vector<Elem> out;
    for (const Elem& x : all) {
      if (x != id && g.pow(x, k) == id) out.push_back(x);
    }
    return out;
  };
  const std::vector<Elem> xs = of_order(ks[0]);
  const std::vector<Elem> ys = of_order(ks[1]);
  std::vector<std::vector<HomPair>> found(xs.size());
  auto scan = [&](std::int64_t i) {
    for (const Elem& y : ys) {
      if (g.pow(g.mul_raw(xs[i], y), ks[2]) == id) found[i].push_back(HomPair{xs[i], y});
    }
  };
  const auto nx = static_cast<std::int64_t>(xs.size());
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < nx; ++i) scan(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < nx; ++i) scan(i);
  }
  std::vector<HomPair> out{HomPair{id, id}};
  for (const auto& v : found) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<std::int64_t> orbit_sizes(const Group& g, const std::vector<HomPair>& homs) {
  const std::vector<Elem> all = g.elements();
  std::unordered_set<HomPair, HomPairHash> seen;
  std::vector<std::int64_t> sizes;
  for (const HomPair& h : homs) {
    if (seen.count(h)) continue;
    std::unordered_set<HomPair, HomPairHash> orb;
    for (const Elem& x : all) orb.insert(conjugate(g, x, h));
    sizes.push_back(static_cast<std::int64_t>(orb.size()));
    seen.insert(orb.begin(), orb.end());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::int64_t hom_count_formula(std::uint32_t p, const Triple& ks) {
  const std::int64_t pp = p;
  return (pp * pp * pp - pp) * static_cast<std::int64_t>(admissible_set(p, ks).size()) + 1;
}

namespace {

// Class index lookup for one fiber: trace_pm -> m for k != p.
struct IndexTable {
  std::int64_t k;
  bool unipotent;
  std::vector<std::int64_t> by_trace;
};

IndexTable index_table(const Group& g, std::int64_t k) {
  IndexTable t{k, k == g.p(), std::vector<std::int64_t>(g.p(), 0)};
  if (!t.unipotent) {
    const Elem gen = g.subgroup_H(k).generator;
    for (std::int64_t m = 1; m <= (k - 1) / 2; ++m) t.by_trace[g.trace_pm(g.pow(gen, m))] = m;
  }
  return t;
}

std::int64_t lookup(const Group& g, const IndexTable& t, Elem x) {
  if (t.unipotent) {
    const psl2::ClassId id = g.class_of(x);
    if (id.tag == psl2::ClassTag::UnipotentSquare) return 1;
    if (id.tag == psl2::ClassTag::UnipotentNonsquare) return g.generators().delta.value();
  } else if (const std::int64_t m = t.by_trace[g.trace_pm(x)]; m != 0) {
    return m;
  }
  throw Error(Errc::NoSolution, "element " + psl2::to_string(x) + " is not conjugate into H_" +
                                    std::to_string(t.k));
}

Triple class_index(const Group& g, const std::array<IndexTable, 3>& tables, const HomPair& h) {
  return Triple{lookup(g, tables[0], h.X), lookup(g, tables[1], h.Y), lookup(g, tables[2], third(g, h))};
}

std::array<IndexTable, 3> index_tables(const Group& g, const Triple& ks) {
  return {index_table(g, ks[0]), index_table(g, ks[1]), index_table(g, ks[2])};
}

QuotientTriple zero_triple(std::uint32_t p, const Triple& ks) {
  return QuotientTriple{{zero_quotient(p, ks[0]), zero_quotient(p, ks[1]), zero_quotient(p, ks[2])}};
}

QuotientTriple term(std::uint32_t p, const std::array<Fiber, 3>& fs, const Triple& idx) {
  return QuotientTriple{{fs[0].coord(p, idx[0]), fs[1].coord(p, idx[1]), fs[2].coord(p, idx[2])}};
}

}  // namespace

Triple class_index_triple(const Group& g, const HomPair& h, const Triple& ks) {
  if (h.X == g.identity() && h.Y == g.identity()) {
    throw Error(Errc::InvalidArgument, "the trivial homomorphism has no class indices");
  }
  return class_index(g, index_tables(g, ks), h);
}

// ---------------------------------------------------------------------------
// Assembly

FormalSum<QuotientTriple> brieskorn_kdw(std::uint32_t p, const SeifertData& sd) {
  sd.validate(p);
  const std::int64_t pp = p;
  const std::int64_t group_order = (pp * pp * pp - pp) / 2;
  const std::array<Fiber, 3> fs = fibers(sd);
  const bool has_p = std::find(sd.k.begin(), sd.k.end(), pp) != sd.k.end();
  const std::int64_t coeff = (has_p ? 2 : 4) * group_order;

  std::array<std::vector<std::int64_t>, 3> indices;
  for (std::size_t i = 0; i < 3; ++i) {
    if (sd.k[i] == pp) {
      indices[i] = {1, min_nonsquare(p).value()};
    } else {
      for (std::int64_t m = 1; m <= (sd.k[i] - 1) / 2; ++m) indices[i].push_back(m);
    }
  }
  FormalSum<QuotientTriple> out;
  out.add(zero_triple(p, sd.k));
  for (std::int64_t m1 : indices[0]) {
    for (std::int64_t m2 : indices[1]) {
      for (std::int64_t m3 : indices[2]) out.add(term(p, fs, Triple{m1, m2, m3}), coeff);
    }
  }
  return out;
}

FormalSum<QuotientTriple> brieskorn_kdw_from_representatives(const Group& g, const SeifertData& sd) {
  const std::uint32_t p = g.p();
  sd.validate(p);
  const std::array<Fiber, 3> fs = fibers(sd);
  const auto tables = index_tables(g, sd.k);
  FormalSum<QuotientTriple> out;
  out.add(zero_triple(p, sd.k));
  for (const TraceTriple& t : admissible_set(p, sd.k)) {
    const auto [phi1, phi2] = explicit_hom_pair(g, sd.k, t);
    for (const HomPair& phi : {phi1, phi2}) out.add(term(p, fs, class_index(g, tables, phi)), g.order());
  }
  return out;
}

FormalSum<QuotientTriple> brieskorn_kdw_oracle(const Group& g, const SeifertData& sd, Exec exec) {
  const std::uint32_t p = g.p();
  sd.validate(p);
  require_brute(p);
  const std::array<Fiber, 3> fs = fibers(sd);
  const auto tables = index_tables(g, sd.k);
  const Elem id = g.identity();
  std::map<Triple, std::int64_t> counts;
  std::int64_t trivial = 0;
  for (const HomPair& h : enumerate_homs_brute(g, sd.k, exec)) {
    if (h.X == id && h.Y == id) {
      ++trivial;
    } else {
      ++counts[class_index(g, tables, h)];
    }
  }
  FormalSum<QuotientTriple> out;
  out.add(zero_triple(p, sd.k), trivial);
  for (const auto& [idx, n] : counts) out.add(term(p, fs, idx), n);
  return out;
}

}  // namespace kdw::brieskorn
