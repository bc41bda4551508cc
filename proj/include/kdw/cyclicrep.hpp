#pragma once

// R(Z/k) in the coordinates rho_0, ..., rho_{k-1}, the signature vectors
// xi(k; l_1, ..., l_m), the permutations P^(h), and the invariant of lens
// spaces with coefficient group Z/k.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kdw/exactnum.hpp"
#include "kdw/formal_sum.hpp"

namespace kdw {

struct XiVector {
  std::int64_t k = 1;
  std::vector<ModOneOdd> entries;

  bool is_zero() const;
  /// "(2,8,8)/9": numerators over the common denominator.
  std::string text() const;

  friend bool operator==(const XiVector&, const XiVector&) = default;
  friend std::strong_ordering operator<=>(const XiVector& a, const XiVector& b);
};

/// Common denominator of a list of mod-one fractions.
std::int64_t common_denominator(const std::vector<ModOneOdd>& v);
/// "(n_0,...,n_{r-1})/D".
std::string vector_text(const std::vector<ModOneOdd>& v);

/// Throws InvalidArgument unless k is an odd prime.
void require_odd_prime(std::int64_t k);

/// -(z^h+1)/(z^h-1) * prod_i (z^{h l_i}+1)/(z^{h l_i}-1) in Q(zeta_k); zero for h = 0 mod k.
CycNum alpha_character(std::int64_t k, const std::vector<std::int64_t>& ls, std::int64_t h);

/// Coefficients a_i = (1/k) sum_h alpha(h) zeta^{-hi}, reduced mod 1.
XiVector xi_vector(std::int64_t k, const std::vector<std::int64_t>& ls);

/// (P^(h) v)_i = v_{h i mod k}.
XiVector perm_apply(std::int64_t h, const XiVector& v);

/// o + sum_{h=1}^{k-1} P^(h) xi(k; ls).
FormalSum<XiVector> lens_kdw_cyclic(std::int64_t k, const std::vector<std::int64_t>& ls);

}  // namespace kdw
