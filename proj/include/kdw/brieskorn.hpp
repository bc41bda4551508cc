#pragma once

// Homomorphisms from the triangle group <x1,x2,x3 | x_i^{k_i} = x1 x2 x3 = 1>
// to PSL_2(F_p), their trace coordinates, and the invariant of the Brieskorn
// sphere Sigma(k1, k2, k3).

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "kdw/exec.hpp"
#include "kdw/formal_sum.hpp"
#include "kdw/induction.hpp"
#include "kdw/psl2.hpp"

namespace kdw::brieskorn {

using Triple = std::array<std::int64_t, 3>;

struct SeifertData {
  Triple k{};
  Triple l{};

  /// k1 k2 k3 (l1/k1 + l2/k2 + l3/k3).
  std::int64_t twist_sum() const;
  /// Distinct odd primes, coprime twists, twist_sum = +-1.
  void validate() const;
  /// validate() plus: every k_i divides |PSL_2(F_p)|.
  void validate(std::uint32_t p) const;
};

/// An element of F_p^3 modulo sign changes (e1, e2, e3) with e1 e2 e3 = 1,
/// stored as the lexicographically smallest member of its orbit.
struct TraceTriple {
  std::uint32_t a = 0, b = 0, c = 0;
  friend auto operator<=>(const TraceTriple&, const TraceTriple&) = default;
};

TraceTriple canonical_triple(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c);

/// Images of x1 and x2; x3 maps to (XY)^-1.
struct HomPair {
  psl2::Elem X, Y;
  friend auto operator<=>(const HomPair&, const HomPair&) = default;
};

struct HomPairHash {
  std::size_t operator()(const HomPair& h) const noexcept {
    const psl2::ElemHash eh;
    return eh(h.X) * 31u ^ eh(h.Y);
  }
};

/// S_n(t): S_1 = 1, S_2 = t, S_{n+1} = t S_n - S_{n-1}.
std::uint32_t chebyshev_eval(std::uint32_t p, std::int64_t n, std::int64_t t);
/// S_{2n}(t) = 0 and S_{2n-1}(t) = -1.
bool chebyshev_order_condition(std::uint32_t p, std::int64_t n, std::int64_t t);
/// X^n = I, decided from the trace alone (n odd >= 3, X != I).
bool order_by_chebyshev(const psl2::Group& g, psl2::Elem x, std::int64_t n);

/// Trace values in [0, (p-1)/2] satisfying the order condition for k.
std::vector<std::uint32_t> sol_set(std::uint32_t p, std::int64_t k);
/// Admissible trace triples, sorted.
std::vector<TraceTriple> admissible_set(std::uint32_t p, const Triple& ks);

/// Smallest twist vector with k1 k2 k3 sum l_i/k_i = +1 (else -1).
Triple find_ell(const Triple& ks);

/// (Tr X, Tr Y, Tr XY) of the stored lifts, canonicalized.
TraceTriple trace_triple(const psl2::Group& g, const HomPair& h);
psl2::Elem third(const psl2::Group& g, const HomPair& h);

/// The two non-conjugate homomorphisms with the given trace triple.
std::pair<HomPair, HomPair> explicit_hom_pair(const psl2::Group& g, const Triple& ks, const TraceTriple& t);

HomPair conjugate(const psl2::Group& g, psl2::Elem by, const HomPair& h);
/// Exhaustive search for g with g h1 g^-1 = h2.
bool are_conjugate(const psl2::Group& g, const HomPair& h1, const HomPair& h2);
/// {g h g^-1 : g in G}.
std::vector<HomPair> orbit(const psl2::Group& g, const HomPair& h);

/// All homomorphisms, trivial one first, then by X in sorted order.
std::vector<HomPair> enumerate_homs_brute(const psl2::Group& g, const Triple& ks, Exec exec = Exec::Parallel);
/// Sizes of the conjugation orbits of a conjugation-closed list of homs.
std::vector<std::int64_t> orbit_sizes(const psl2::Group& g, const std::vector<HomPair>& homs);
/// (p^3 - p)|A| + 1.
std::int64_t hom_count_formula(std::uint32_t p, const Triple& ks);

/// Per fiber: m in [1, (k-1)/2] matching the class of phi(x_i) against powers
/// of the H_k generator, or 1 / Delta by unipotent square class when k = p.
Triple class_index_triple(const psl2::Group& g, const HomPair& h, const Triple& ks);

/// Closed-form assembly from p and the Seifert data alone.
FormalSum<QuotientTriple> brieskorn_kdw(std::uint32_t p, const SeifertData& sd);
/// Assembly from the explicit representatives of each admissible triple.
FormalSum<QuotientTriple> brieskorn_kdw_from_representatives(const psl2::Group& g, const SeifertData& sd);
/// Sum over every brute-force homomorphism.
FormalSum<QuotientTriple> brieskorn_kdw_oracle(const psl2::Group& g, const SeifertData& sd,
                                               Exec exec = Exec::Parallel);

}  // namespace kdw::brieskorn
