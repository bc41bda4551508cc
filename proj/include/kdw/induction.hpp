#pragma once

// Induction from cyclic subgroups of PSL_2(F_p), the kernel of induction on
// R(H_k), quotient coordinates, and the lens-space invariant with
// coefficient group PSL_2(F_p).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kdw/cyclicrep.hpp"
#include "kdw/exactnum.hpp"
#include "kdw/exec.hpp"
#include "kdw/formal_sum.hpp"
#include "kdw/psl2.hpp"

namespace kdw {

/// Largest p accepted by the exhaustive induction routines.
inline constexpr std::uint32_t kBruteMaxP = 31;

struct ClassFunction {
  std::uint32_t p = 0;
  std::map<psl2::ClassId, CycNum> values;

  bool is_zero() const;
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// For each class c of G and each exponent j, the number of x in G with
/// x g_c x^-1 = h^j, where h generates H.
struct InductionTable {
  std::uint32_t p = 0;
  psl2::CyclicSubgroup subgroup;
  std::vector<psl2::ConjugacyClass> classes;
  std::vector<std::vector<std::int64_t>> counts;  // [class][j]
};

InductionTable induction_table(const psl2::Group& g, const psl2::CyclicSubgroup& h,
                               Exec exec = Exec::Parallel);

/// Ind of the integer combination sum_i coeffs[i] rho_i, where rho_i(h) = zeta^i.
ClassFunction induce(const InductionTable& t, const std::vector<std::int64_t>& coeffs);
/// Ind of the single character rho_i.
ClassFunction induced_character(const InductionTable& t, std::int64_t i);
ClassFunction induced_character(const psl2::Group& g, const psl2::CyclicSubgroup& h, std::int64_t i,
                                Exec exec = Exec::Parallel);

/// Additive generators of the kernel of Ind on R(H_k), as vectors in Z^k.
std::vector<std::vector<std::int64_t>> kernel_generators(std::uint32_t p, std::int64_t k);

/// Rank of the span of {Ind rho_i} in R(G).
std::int64_t image_rank(const psl2::Group& g, const psl2::CyclicSubgroup& h, Exec exec = Exec::Parallel);

enum class QuotientKind { Fold, SquareClass };

std::string_view quotient_kind_name(QuotientKind kind);

struct QuotientCoord {
  std::int64_t k = 1;
  QuotientKind kind = QuotientKind::Fold;
  std::vector<ModOneOdd> entries;

  bool is_zero() const;
  std::string text() const { return vector_text(entries); }
  friend bool operator==(const QuotientCoord&, const QuotientCoord&) = default;
  friend std::strong_ordering operator<=>(const QuotientCoord& a, const QuotientCoord& b);
};

/// Zero coordinate of the right shape for (p, k).
QuotientCoord zero_quotient(std::uint32_t p, std::int64_t k);

/// Fold (k != p) or square-class collapse (k = p) of v.
QuotientCoord to_quotient(std::uint32_t p, std::int64_t k, const XiVector& v);

/// o + m_k * sum_{h=1}^{k-1} [P^(h) xi(k; ls)].
FormalSum<QuotientCoord> lens_kdw_psl2(std::uint32_t p, std::int64_t k, const std::vector<std::int64_t>& ls);

struct QuotientTriple {
  std::array<QuotientCoord, 3> c;

  bool is_zero() const;
  /// "((6,8,8)/11, (2,7)/9, (0,2,3)/5)".
  std::string text() const;
  friend bool operator==(const QuotientTriple&, const QuotientTriple&) = default;
  friend std::strong_ordering operator<=>(const QuotientTriple& a, const QuotientTriple& b);
};

}  // namespace kdw
