#pragma once

// The group PSL_2(F_p): canonical representatives, the subgroups T, U, B and
// H_k, conjugacy classification and the counting formulas.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kdw/exec.hpp"
#include "kdw/ffield.hpp"

namespace kdw::psl2 {

/// A 2x2 matrix [[a, b], [c, d]] over F_p. Group elements are stored as the
/// sign representative whose first nonzero entry lies in [1, (p-1)/2].
struct Elem {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

struct ElemHash {
  std::size_t operator()(const Elem& x) const noexcept {
    std::uint64_t h = x.a;
    h = h * 0x10001u + x.b;
    h = h * 0x10001u + x.c;
    h = h * 0x10001u + x.d;
    return std::hash<std::uint64_t>{}(h * 0x9E3779B97F4A7C15ull);
  }
};

/// The choices Delta (non-square), zeta_- (generator of F_p^x) and
/// zeta_+ (generator of mu_{p+1}).
struct Generators {
  Fp delta;
  Fp zeta_minus;
  Fp2 zeta_plus;

  /// Smallest non-square, smallest primitive root, first mu_{p+1} generator.
  static Generators defaults(std::uint32_t p);
  /// Validates and builds from explicit values; zeta_+ = x + y*sqrt(delta).
  static Generators from_values(std::uint32_t p, std::int64_t delta, std::int64_t zeta_minus,
                                std::int64_t zeta_plus_x, std::int64_t zeta_plus_y);
  void validate(std::uint32_t p) const;
  /// "delta=2 zeta_minus=2 zeta_plus=x+y*sqrt(delta)".
  std::string describe() const;
};

enum class ClassTag { Identity, UnipotentSquare, UnipotentNonsquare, Split, Nonsplit };

std::string_view class_tag_name(ClassTag tag);

struct ClassId {
  ClassTag tag = ClassTag::Identity;
  /// Canonical representative of trace mod +-1 in [0, (p-1)/2].
  std::uint32_t trace_pm = 2;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

enum class SubgroupKind { Split, Unipotent, Nonsplit };

std::string_view subgroup_kind_name(SubgroupKind kind);

struct CyclicSubgroup {
  std::int64_t order = 1;
  Elem generator;
  SubgroupKind kind = SubgroupKind::Split;
};

struct ConjugacyClass {
  ClassId id;
  Elem rep;
  std::int64_t size = 0;
  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

class Group {
 public:
  explicit Group(std::uint32_t p);
  Group(std::uint32_t p, Generators gens);

  std::uint32_t p() const { return p_; }
  const Generators& generators() const { return gens_; }
  /// (p^3 - p) / 2.
  std::int64_t order() const;

  /// Canonical element from any SL_2 matrix; throws InvalidArgument if det != 1.
  Elem make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const;
  Elem canonical(Elem x) const;
  Elem identity() const { return Elem{}; }
  Elem negate(Elem x) const;

  /// Product of the stored SL_2 lifts without sign canonicalization.
  Elem mul_raw(Elem x, Elem y) const;
  Elem mul(Elem x, Elem y) const { return canonical(mul_raw(x, y)); }
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::int64_t n) const;
  /// g x g^-1.
  Elem conj(Elem g, Elem x) const;

  /// Trace of the stored lift.
  std::uint32_t trace(Elem x) const { return (x.a + x.d) % p_; }
  std::uint32_t trace_pm(Elem x) const;

  Elem sigma_T(Fp x) const;
  Elem sigma_U(Fp x) const;
  Elem sigma_B(const Fp2& z) const;

  std::int64_t element_order(Elem x) const;
  ClassId class_of(Elem x) const;

  /// All elements, sorted.
  std::vector<Elem> elements() const;
  /// One entry per class, sorted by ClassId; sizes counted over all of G.
  std::vector<ConjugacyClass> classes(Exec exec = Exec::Parallel) const;

  /// The canonical cyclic subgroup H_k for an odd prime k dividing |G|.
  CyclicSubgroup subgroup_H(std::int64_t k) const;
  CyclicSubgroup torus_T() const;
  CyclicSubgroup unipotent_U() const;
  CyclicSubgroup torus_B() const;
  /// generator^0, ..., generator^(order-1).
  std::vector<Elem> subgroup_elements(const CyclicSubgroup& h) const;

  /// Dense index in [0, p^4), for lookup tables.
  std::uint32_t index(Elem x) const { return ((x.a * p_ + x.b) * p_ + x.c) * p_ + x.d; }

 private:
  std::uint32_t p_;
  Generators gens_;
};

/// True iff k is an odd prime dividing (p^3 - p)/2.
bool is_odd_prime_divisor(std::uint32_t p, std::int64_t k);
/// Throws NotADivisor unless is_odd_prime_divisor(p, k).
void require_odd_prime_divisor(std::uint32_t p, std::int64_t k);

/// Number of conjugacy classes of nontrivial elements of k-power order (k prime).
std::int64_t r_count(std::uint32_t p, std::int64_t k);
/// {q : r_count(p, q)} over the primes q dividing |G| with r_count > 0.
std::map<std::int64_t, std::int64_t> k1_structure(std::uint32_t p);
/// m_k: number of subgroups of order k for an odd prime k dividing |G|.
std::int64_t count_order_k_subgroups(std::uint32_t p, std::int64_t k);

std::string to_string(const Elem& x);
std::string to_string(const ClassId& id);

}  // namespace kdw::psl2
